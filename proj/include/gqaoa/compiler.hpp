#pragma once

#include "gqaoa/graph.hpp"
#include "gqaoa/problems.hpp"
#include "gqaoa/statevector.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gqaoa {

/// Largest register (problem qubits plus ancilla) the compiler handles.
inline constexpr std::size_t kMaxCompileQubits = 10;

struct GateSequence {
    std::size_t num_qubits = 0; ///< register width, ancilla included
    std::optional<std::size_t> ancilla;
    std::vector<NativeGate> gates;
};

/// exp(-i alpha H_A) over the native gate set. Max-Cut uses one XX per
/// edge; edge cover uses one multi-controlled phase per vertex (degree 1: Rz,
/// degree 2: one XX, degree 3: five XX). alpha = 0 yields an empty sequence.
GateSequence compile_phase_separator(const Graph &g, ProblemKind kind,
                                     double alpha);

/// exp(-i beta |G><G|) for n <= 4 qubits. n = 4 needs `use_ancilla`, in which
/// case qubit n is an ancilla that starts and ends in |0>.
GateSequence compile_grover_mixer(std::size_t n, double q, double beta,
                                  bool use_ancilla);

std::size_t two_qubit_gate_count(const GateSequence &seq);

/// Row-major dense square matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim)
        : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

    static DenseMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    Complex operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Full unitary of the sequence on its whole register.
DenseMatrix sequence_unitary(const GateSequence &seq);

/// Max elementwise |U - e^{i phi} R| with phi chosen as the Frobenius-optimal
/// global phase. With an ancilla, U is restricted to the ancilla-|0> block.
double sequence_unitary_deviation(const GateSequence &seq,
                                  const DenseMatrix &reference);

/// diag(exp(-i alpha E(x))).
DenseMatrix exact_phase_separator(const DiagonalHamiltonian &h, double alpha);

/// I + (exp(-i beta) - 1)|G><G|.
DenseMatrix exact_grover_mixer(std::size_t n, double q, double beta);

/// One gate per line: `R phi theta q`, `RZ theta q`, `XX theta i j`, angles
/// in radians with 12 significant digits.
std::string emit_circuit(const GateSequence &seq);

/// Inverse of emit_circuit(). The register width is the larger of
/// `num_qubits` and one past the highest index used.
GateSequence parse_circuit(std::string_view text, std::size_t num_qubits = 0);

} // namespace gqaoa
