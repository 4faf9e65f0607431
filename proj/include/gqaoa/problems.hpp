#pragma once

#include "gqaoa/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gqaoa {

enum class ProblemKind { MaxCut, EdgeCover };

const char *to_string(ProblemKind kind) noexcept;

/**
 * Diagonal cost Hamiltonian stored as one energy per basis state, together
 * with its minimum and the exact argmin set.
 */
class DiagonalHamiltonian {
public:
    DiagonalHamiltonian() = default;
    explicit DiagonalHamiltonian(std::vector<double> energies);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return energies_.size(); }
    std::span<const double> energies() const noexcept { return energies_; }
    double energy(BasisIndex x) const { return energies_.at(x); }

    double ground_energy() const noexcept { return ground_energy_; }
    double max_energy() const noexcept { return max_energy_; }
    /// Ground states in increasing index order.
    const std::vector<BasisIndex> &ground_set() const noexcept {
        return ground_set_;
    }

private:
    std::size_t num_qubits_ = 0;
    std::vector<double> energies_;
    double ground_energy_ = 0.0;
    double max_energy_ = 0.0;
    std::vector<BasisIndex> ground_set_;
};

/// Sum over edges of Z_i Z_j: +1 for an uncut edge, -1 for a cut edge.
/// One qubit per vertex.
DiagonalHamiltonian build_maxcut_hamiltonian(const Graph &g);

/// Number of vertices left uncovered by the included edge subset (bit 0 =
/// included). One qubit per edge; the product for vertex v runs over the
/// edges incident on v in the full graph.
DiagonalHamiltonian build_edge_cover_hamiltonian(const Graph &g);

DiagonalHamiltonian build_hamiltonian(const Graph &g, ProblemKind kind);

/// (1-q)^{n'} q^{n-n'} with n' the number of included (zero) bits.
double product_weight(std::size_t num_bits, double q, BasisIndex x);

/// Subgraph weight for a weighted graph; throws if the graph carries no q.
double subgraph_weight(const Graph &g, BasisIndex mask);

/// Product-form weight for every basis state over `num_bits` qubits.
class WeightTable {
public:
    WeightTable(std::size_t num_bits, double q);

    /// Weights taken from the graph's q (edge-encoded).
    static WeightTable for_graph(const Graph &g);

    std::size_t num_bits() const noexcept { return num_bits_; }
    double q() const noexcept { return q_; }
    double operator()(BasisIndex x) const { return weights_.at(x); }
    std::span<const double> weights() const noexcept { return weights_; }

    /// Weights restricted to `outcomes` and renormalized to sum to one.
    std::vector<double> normalized_over(std::span<const BasisIndex> outcomes) const;

private:
    std::size_t num_bits_;
    double q_;
    std::vector<double> weights_;
};

} // namespace gqaoa
