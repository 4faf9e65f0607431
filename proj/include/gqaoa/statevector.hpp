#pragma once

#include "gqaoa/graph.hpp"
#include "gqaoa/problems.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace gqaoa {

using Complex = std::complex<double>;

/// Normalized amplitude vector over 2^n basis states.
class StateVector {
public:
    StateVector() = default;
    /// |0...0> on n qubits.
    explicit StateVector(std::size_t num_qubits);
    /// Takes ownership of the amplitudes; length must be a power of two.
    explicit StateVector(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amps_.size(); }

    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    std::span<Complex> amplitudes() noexcept { return amps_; }
    Complex operator[](BasisIndex x) const { return amps_[x]; }

    double norm_squared() const noexcept;

private:
    std::size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// <a|b>, accumulated in index order.
Complex inner_product(const StateVector &a, const StateVector &b);

/// Single-qubit rotation exp(-i (cos(phi) X + sin(phi) Y) theta / 2).
struct RGate {
    double phi;
    double theta;
    std::size_t target;
    friend bool operator==(const RGate &, const RGate &) = default;
};

/// exp(-i Z theta / 2).
struct RzGate {
    double theta;
    std::size_t target;
    friend bool operator==(const RzGate &, const RzGate &) = default;
};

/// Molmer-Sorensen type entangler exp(+i theta X_i X_j).
struct XXGate {
    double theta;
    std::size_t i;
    std::size_t j;
    friend bool operator==(const XXGate &, const XXGate &) = default;
};

using NativeGate = std::variant<RGate, RzGate, XXGate>;

/// Gate undoing `g`.
NativeGate inverse(const NativeGate &g);

/// Tensor power of sqrt(1-q)|0> + sqrt(q)|1>; q = 0.5 gives |+>^n.
StateVector prepare_initial_state(std::size_t num_qubits, double q);

/// amplitude_x <- exp(-i alpha E(x)) amplitude_x
void apply_phase_separator(StateVector &s, const DiagonalHamiltonian &h,
                           double alpha);

/// exp(-i beta X) on every qubit.
void apply_transverse_mixer(StateVector &s, double beta);

/// exp(-i beta |G><G|) with |G> = prepare_initial_state(n, q), applied as the
/// rank-one update s + (exp(-i beta) - 1) <G|s> |G>.
void apply_grover_mixer(StateVector &s, double q, double beta);

void apply_native_gate(StateVector &s, const NativeGate &g);

/// |amplitude_x|^2 for every basis state.
std::vector<double> measure_distribution(const StateVector &s);

} // namespace gqaoa
