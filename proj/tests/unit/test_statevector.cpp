#include "gqaoa/error.hpp"
#include "gqaoa/statevector.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace gqaoa;

namespace {

StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<Complex> a(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &z : a) {
        z = {normal(rng), normal(rng)};
        norm += std::norm(z);
    }
    for (auto &z : a) {
        z /= std::sqrt(norm);
    }
    return StateVector(std::move(a));
}

oracle::Vec to_eigen(const StateVector &s) {
    oracle::Vec v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

double max_diff(const StateVector &s, const oracle::Vec &v) {
    double d = 0.0;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        d = std::max(d, std::abs(s[i] - v(static_cast<Eigen::Index>(i))));
    }
    return d;
}

oracle::Mat gate_matrix(const NativeGate &g, std::size_t n) {
    return std::visit(
        [n](const auto &gate) -> oracle::Mat {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, RGate>) {
                return oracle::r_gate(gate.phi, gate.theta, gate.target, n);
            } else if constexpr (std::is_same_v<T, RzGate>) {
                return oracle::rz_gate(gate.theta, gate.target, n);
            } else {
                return oracle::xx_gate(gate.theta, gate.i, gate.j, n);
            }
        },
        g);
}

NativeGate random_gate(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    switch (rng() % 3) {
    case 0:
        return RGate{angle(rng), angle(rng), qubit(rng)};
    case 1:
        return RzGate{angle(rng), qubit(rng)};
    default: {
        const std::size_t i = qubit(rng);
        std::size_t j = qubit(rng);
        while (j == i) {
            j = qubit(rng);
        }
        return XXGate{angle(rng), i, j};
    }
    }
}

} // namespace

TEST(InitialState, UniformAndWeighted) {
    const StateVector plus = prepare_initial_state(3, 0.5);
    for (std::size_t x = 0; x < 8; ++x) {
        EXPECT_NEAR(plus[x].real(), 1.0 / std::sqrt(8.0), 1e-15);
        EXPECT_DOUBLE_EQ(plus[x].imag(), 0.0);
    }
    const StateVector g = prepare_initial_state(2, 0.7);
    // amplitude of bit pattern x is sqrt((1-q)^{zeros} q^{ones})
    EXPECT_NEAR(g[0b00].real(), 0.3, 1e-15);
    EXPECT_NEAR(g[0b01].real(), std::sqrt(0.21), 1e-15);
    EXPECT_NEAR(g[0b11].real(), 0.7, 1e-15);
    EXPECT_THROW(prepare_initial_state(2, 1.5), Error);
}

TEST(InitialState, MatchesKroneckerOracle) {
    const auto s = prepare_initial_state(4, 0.3);
    EXPECT_LT(max_diff(s, oracle::product_state(4, 0.3)), 1e-15);
}

TEST(PhaseSeparator, AppliesDiagonalPhases) {
    const DiagonalHamiltonian h({0.0, 1.0, 2.0, -1.0});
    StateVector s = prepare_initial_state(2, 0.5);
    apply_phase_separator(s, h, 0.3);
    for (std::size_t x = 0; x < 4; ++x) {
        const Complex expected = 0.5 * std::exp(Complex(0, -0.3 * h.energy(x)));
        EXPECT_NEAR(std::abs(s[x] - expected), 0.0, 1e-15);
    }
}

TEST(TransverseMixer, MatchesDenseExponential) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (double beta : {0.0, 0.37, -1.2, 2.9}) {
            StateVector s = random_state(n, rng);
            const oracle::Vec expected = oracle::transverse_mixer(n, beta) * to_eigen(s);
            apply_transverse_mixer(s, beta);
            EXPECT_LT(max_diff(s, expected), 1e-12) << "n=" << n << " beta=" << beta;
        }
    }
}

TEST(GroverMixer, RankOneUpdateMatchesDenseExponential) {
    std::mt19937_64 rng(4);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (double q : {0.5, 0.7, 0.75, 0.2}) {
            for (double beta : {0.4, -2.3, 3.1}) {
                StateVector s = random_state(n, rng);
                const oracle::Vec expected = oracle::grover_mixer(n, q, beta) * to_eigen(s);
                apply_grover_mixer(s, q, beta);
                EXPECT_LT(max_diff(s, expected), 1e-10);
            }
        }
    }
}

TEST(GroverMixer, FixesInitialStateUpToPhase) {
    StateVector s = prepare_initial_state(3, 0.7);
    apply_grover_mixer(s, 0.7, 0.9);
    const StateVector g = prepare_initial_state(3, 0.7);
    const Complex phase = std::exp(Complex(0, -0.9));
    for (std::size_t x = 0; x < 8; ++x) {
        EXPECT_NEAR(std::abs(s[x] - phase * g[x]), 0.0, 1e-14);
    }
}

TEST(NativeGates, MatchOracleMatrices) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 3;
        StateVector s = random_state(n, rng);
        const NativeGate g = random_gate(n, rng);
        const oracle::Vec expected = gate_matrix(g, n) * to_eigen(s);
        apply_native_gate(s, g);
        EXPECT_LT(max_diff(s, expected), 1e-12);
    }
}

TEST(NativeGates, InverseUndoes) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        const StateVector start = random_state(3, rng);
        StateVector s = start;
        const NativeGate g = random_gate(3, rng);
        apply_native_gate(s, g);
        apply_native_gate(s, inverse(g));
        EXPECT_LT(max_diff(s, to_eigen(start)), 1e-13);
    }
}

TEST(NativeGates, RangeChecks) {
    StateVector s(2);
    EXPECT_THROW(apply_native_gate(s, RzGate{0.1, 2}), Error);
    EXPECT_THROW(apply_native_gate(s, XXGate{0.1, 1, 1}), Error);
    EXPECT_THROW(apply_native_gate(s, RGate{0.0, 0.1, 5}), Error);
}

TEST(Norm, PreservedByEveryOperation) {
    std::mt19937_64 rng(12);
    const DiagonalHamiltonian h({0, 1, 3, 1, 2, 0, 1, 2});
    for (int trial = 0; trial < 50; ++trial) {
        StateVector s = random_state(3, rng);
        std::uniform_real_distribution<double> angle(-4.0, 4.0);
        apply_phase_separator(s, h, angle(rng));
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
        apply_transverse_mixer(s, angle(rng));
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
        apply_grover_mixer(s, 0.3, angle(rng));
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
        apply_native_gate(s, random_gate(3, rng));
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
    }
}

TEST(Measurement, DistributionSumsToOne) {
    std::mt19937_64 rng(13);
    const auto p = measure_distribution(random_state(4, rng));
    double total = 0.0;
    for (double x : p) {
        EXPECT_GE(x, 0.0);
        total += x;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(StateVector, RejectsNonPowerOfTwo) {
    EXPECT_THROW(StateVector(std::vector<Complex>(3, Complex(0.5, 0))), Error);
}
