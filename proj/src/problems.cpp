#include "gqaoa/problems.hpp"

#include "gqaoa/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace gqaoa {

const char *to_string(ProblemKind kind) noexcept {
    switch (kind) {
    case ProblemKind::MaxCut:
        return "maxcut";
    case ProblemKind::EdgeCover:
        return "edgecover";
    }
    return "unknown";
}

DiagonalHamiltonian::DiagonalHamiltonian(std::vector<double> energies)
    : energies_(std::move(energies)) {
    require(!energies_.empty() && std::has_single_bit(energies_.size()),
            "energy table length must be a power of two");
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(energies_.size()));
    require(num_qubits_ <= kMaxQubits,
            "Hamiltonian exceeds " + std::to_string(kMaxQubits) + " qubits");
    auto [lo, hi] = std::minmax_element(energies_.begin(), energies_.end());
    ground_energy_ = *lo;
    max_energy_ = *hi;
    for (std::size_t x = 0; x < energies_.size(); ++x) {
        if (energies_[x] == ground_energy_) {
            ground_set_.push_back(x);
        }
    }
}

DiagonalHamiltonian build_maxcut_hamiltonian(const Graph &g) {
    if (g.num_edges() == 0) {
        fail(ErrorKind::Domain, "Max-Cut needs at least one edge");
    }
    if (g.num_vertices() > kMaxQubits) {
        fail(ErrorKind::Domain, "Max-Cut instance exceeds " +
                                    std::to_string(kMaxQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << g.num_vertices();
    std::vector<double> energies(dim);
    const double ne = static_cast<double>(g.num_edges());
    for (BasisIndex x = 0; x < dim; ++x) {
        energies[x] = ne - 2.0 * static_cast<double>(cut_value(g, x));
    }
    return DiagonalHamiltonian(std::move(energies));
}

DiagonalHamiltonian build_edge_cover_hamiltonian(const Graph &g) {
    if (g.num_edges() > kMaxQubits) {
        fail(ErrorKind::Domain, "edge-cover instance exceeds " +
                                    std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<BasisIndex> incident(g.num_vertices(), 0);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        incident[g.edges()[e].u] |= BasisIndex{1} << e;
        incident[g.edges()[e].v] |= BasisIndex{1} << e;
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (incident[v] == 0) {
            fail(ErrorKind::Domain, "vertex '" + g.labels()[v] +
                                        "' is isolated; no edge cover exists");
        }
    }
    const std::size_t dim = std::size_t{1} << g.num_edges();
    std::vector<double> energies(dim);
    for (BasisIndex x = 0; x < dim; ++x) {
        std::size_t uncovered = 0;
        for (BasisIndex m : incident) {
            uncovered += (x & m) == m;
        }
        energies[x] = static_cast<double>(uncovered);
    }
    return DiagonalHamiltonian(std::move(energies));
}

DiagonalHamiltonian build_hamiltonian(const Graph &g, ProblemKind kind) {
    return kind == ProblemKind::MaxCut ? build_maxcut_hamiltonian(g)
                                       : build_edge_cover_hamiltonian(g);
}

double product_weight(std::size_t num_bits, double q, BasisIndex x) {
    const int excluded = std::popcount(x);
    const int included = static_cast<int>(num_bits) - excluded;
    return std::pow(1.0 - q, included) * std::pow(q, excluded);
}

double subgraph_weight(const Graph &g, BasisIndex mask) {
    auto q = g.weight_q();
    if (!q) {
        fail(ErrorKind::InvalidArgument,
             "graph carries no weight q; use the unweighted (q = 0.5) path");
    }
    require(mask < (BasisIndex{1} << g.num_edges()),
            "subgraph mask wider than the edge set");
    return product_weight(g.num_edges(), *q, mask);
}

WeightTable::WeightTable(std::size_t num_bits, double q)
    : num_bits_(num_bits), q_(q) {
    require(q > 0.0 && q < 1.0, "q must lie in the open interval (0, 1)");
    require(num_bits <= kMaxQubits, "weight table too wide");
    const std::size_t dim = std::size_t{1} << num_bits;
    weights_.resize(dim);
    for (BasisIndex x = 0; x < dim; ++x) {
        weights_[x] = product_weight(num_bits, q, x);
    }
}

WeightTable WeightTable::for_graph(const Graph &g) {
    return WeightTable(g.num_edges(), g.effective_q());
}

std::vector<double>
WeightTable::normalized_over(std::span<const BasisIndex> outcomes) const {
    std::vector<double> out;
    out.reserve(outcomes.size());
    double total = 0.0;
    for (BasisIndex x : outcomes) {
        out.push_back(weights_.at(x));
        total += out.back();
    }
    for (double &w : out) {
        w /= total;
    }
    return out;
}

} // namespace gqaoa
