#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gqaoa {

/// Basis-state index. Qubit i is bit i, qubit 0 is the least-significant bit.
using BasisIndex = std::uint64_t;

/// Largest problem size accepted by brute-force enumeration and simulation.
inline constexpr std::size_t kMaxQubits = 24;

struct Edge {
    std::size_t u;
    std::size_t v;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/**
 * Undirected simple graph with labelled vertices and an optional per-edge
 * weight parameter q in (0, 1).
 *
 * Vertex order is the qubit order for vertex-encoded problems (Max-Cut) and
 * edge order is the qubit order for edge-encoded problems (edge cover).
 */
class Graph {
public:
    Graph() = default;

    /// Throws gqaoa::Error on self-loops, duplicate edges, unknown or
    /// duplicate labels, and q outside (0, 1).
    Graph(std::vector<std::string> vertices,
          std::vector<std::pair<std::string, std::string>> edges,
          std::optional<double> weight_q = std::nullopt);

    std::size_t num_vertices() const noexcept { return labels_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    const std::vector<std::string> &labels() const noexcept { return labels_; }
    const std::vector<Edge> &edges() const noexcept { return edges_; }

    std::optional<double> weight_q() const noexcept { return weight_q_; }
    /// q where one is needed; unweighted graphs act as q = 0.5.
    double effective_q() const noexcept { return weight_q_.value_or(0.5); }

    Graph with_weight(std::optional<double> q) const;

    /// Indices of edges incident on vertex v, in edge order.
    std::vector<std::size_t> incident_edges(std::size_t v) const;
    std::size_t degree(std::size_t v) const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::optional<double> weight_q_;
};

/// Names accepted by preset_graph().
const std::vector<std::string> &preset_names();

/// triangle, square or paw. Vertex labels are "0".."n-1".
Graph preset_graph(std::string_view name);

/// Parse the line-oriented graph file format (see README).
Graph load_graph(std::string_view text);

/// Inverse of load_graph(); q is written with 17 significant digits.
std::string serialize_graph(const Graph &g);

/// Edge-subset masks (bit e = 0 means edge e included) covering every vertex.
/// Returned in increasing mask order.
std::vector<BasisIndex> enumerate_edge_covers(const Graph &g);

/// Vertex assignments maximizing the number of cut edges, increasing order.
std::vector<BasisIndex> enumerate_max_cuts(const Graph &g);

/// Number of edges whose endpoints sit on different sides of `assignment`.
std::size_t cut_value(const Graph &g, BasisIndex assignment);

} // namespace gqaoa
