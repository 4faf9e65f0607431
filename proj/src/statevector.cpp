#include "gqaoa/statevector.hpp"

#include "gqaoa/error.hpp"

#include <array>
#include <bit>
#include <cmath>

namespace gqaoa {

namespace {

using Matrix2 = std::array<Complex, 4>; // row-major

void check_qubit_count(std::size_t n) {
    require(n >= 1, "state needs at least one qubit");
    if (n > kMaxQubits) {
        fail(ErrorKind::Domain, "state exceeds " + std::to_string(kMaxQubits) +
                                    " qubits");
    }
}

void apply_single(std::span<Complex> amps, std::size_t target,
                  const Matrix2 &m) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; ++k) {
            const Complex a0 = amps[k];
            const Complex a1 = amps[k + stride];
            amps[k] = m[0] * a0 + m[1] * a1;
            amps[k + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void check_target(const StateVector &s, std::size_t q) {
    if (q >= s.num_qubits()) {
        fail(ErrorKind::InvalidArgument,
             "gate target " + std::to_string(q) + " out of range for " +
                 std::to_string(s.num_qubits()) + " qubits");
    }
}

} // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
    require(!amps_.empty() && std::has_single_bit(amps_.size()),
            "amplitude count must be a power of two");
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(amps_.size()));
    check_qubit_count(num_qubits_);
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const Complex &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    require(a.dimension() == b.dimension(), "inner product dimension mismatch");
    Complex acc{0.0, 0.0};
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (std::size_t k = 0; k < x.size(); ++k) {
        acc += std::conj(x[k]) * y[k];
    }
    return acc;
}

NativeGate inverse(const NativeGate &g) {
    return std::visit(
        [](const auto &gate) -> NativeGate {
            auto inv = gate;
            inv.theta = -gate.theta;
            return inv;
        },
        g);
}

StateVector prepare_initial_state(std::size_t num_qubits, double q) {
    check_qubit_count(num_qubits);
    if (!(q >= 0.0 && q <= 1.0)) {
        fail(ErrorKind::InvalidArgument, "q must lie in [0, 1]");
    }
    // exp(-i Y asin(sqrt q)) |0> = sqrt(1-q)|0> + sqrt(q)|1>
    const double c = std::sqrt(1.0 - q);
    const double s = std::sqrt(q);
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        const int ones = std::popcount(x);
        amps[x] = std::pow(c, static_cast<int>(num_qubits) - ones) *
                  std::pow(s, ones);
    }
    return StateVector(std::move(amps));
}

void apply_phase_separator(StateVector &s, const DiagonalHamiltonian &h,
                           double alpha) {
    require(s.dimension() == h.dimension(),
            "phase separator dimension mismatch");
    auto amps = s.amplitudes();
    auto energies = h.energies();
    for (std::size_t x = 0; x < amps.size(); ++x) {
        amps[x] *= std::polar(1.0, -alpha * energies[x]);
    }
}

void apply_transverse_mixer(StateVector &s, double beta) {
    const Complex c{std::cos(beta), 0.0};
    const Complex is{0.0, -std::sin(beta)};
    const Matrix2 m{c, is, is, c};
    for (std::size_t q = 0; q < s.num_qubits(); ++q) {
        apply_single(s.amplitudes(), q, m);
    }
}

void apply_grover_mixer(StateVector &s, double q, double beta) {
    if (!(q > 0.0 && q < 1.0)) {
        fail(ErrorKind::InvalidArgument,
             "Grover mixer q must lie in the open interval (0, 1)");
    }
    const StateVector g = prepare_initial_state(s.num_qubits(), q);
    const Complex overlap = inner_product(g, s);
    const Complex scale = (std::polar(1.0, -beta) - 1.0) * overlap;
    auto amps = s.amplitudes();
    auto gv = g.amplitudes();
    for (std::size_t x = 0; x < amps.size(); ++x) {
        amps[x] += scale * gv[x];
    }
}

void apply_native_gate(StateVector &s, const NativeGate &gate) {
    if (const auto *r = std::get_if<RGate>(&gate)) {
        check_target(s, r->target);
        const double c = std::cos(r->theta / 2.0);
        const double sn = std::sin(r->theta / 2.0);
        // -i sin(t/2) (cos phi X + sin phi Y)
        const Complex off01 = Complex{0.0, -sn} * std::polar(1.0, -r->phi);
        const Complex off10 = Complex{0.0, -sn} * std::polar(1.0, r->phi);
        apply_single(s.amplitudes(), r->target, {c, off01, off10, c});
    } else if (const auto *rz = std::get_if<RzGate>(&gate)) {
        check_target(s, rz->target);
        apply_single(s.amplitudes(), rz->target,
                     {std::polar(1.0, -rz->theta / 2.0), 0.0, 0.0,
                      std::polar(1.0, rz->theta / 2.0)});
    } else {
        const auto &xx = std::get<XXGate>(gate);
        check_target(s, xx.i);
        check_target(s, xx.j);
        if (xx.i == xx.j) {
            fail(ErrorKind::InvalidArgument, "XX gate needs two distinct qubits");
        }
        // exp(i t XX) = cos t I + i sin t XX; XX swaps x with x ^ (bi | bj)
        const Complex c{std::cos(xx.theta), 0.0};
        const Complex is{0.0, std::sin(xx.theta)};
        const BasisIndex flip = (BasisIndex{1} << xx.i) | (BasisIndex{1} << xx.j);
        auto amps = s.amplitudes();
        for (BasisIndex x = 0; x < amps.size(); ++x) {
            const BasisIndex y = x ^ flip;
            if (x < y) {
                const Complex ax = amps[x];
                const Complex ay = amps[y];
                amps[x] = c * ax + is * ay;
                amps[y] = is * ax + c * ay;
            }
        }
    }
}

std::vector<double> measure_distribution(const StateVector &s) {
    std::vector<double> p(s.dimension());
    auto amps = s.amplitudes();
    for (std::size_t x = 0; x < p.size(); ++x) {
        p[x] = std::norm(amps[x]);
    }
    return p;
}

} // namespace gqaoa
