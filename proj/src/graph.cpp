#include "gqaoa/graph.hpp"

#include "gqaoa/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace gqaoa {

namespace {

bool valid_label(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
               (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    });
}

bool valid_q(double q) { return std::isfinite(q) && q > 0.0 && q < 1.0; }

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                   line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
               line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

void check_brute_force_size(std::size_t n, const char *what) {
    if (n > kMaxQubits) {
        fail(ErrorKind::Domain,
             std::string(what) + " exceeds the brute-force bound of " +
                 std::to_string(kMaxQubits));
    }
}

} // namespace

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::pair<std::string, std::string>> edges,
             std::optional<double> weight_q)
    : labels_(std::move(vertices)), weight_q_(weight_q) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        require(valid_label(labels_[i]),
                "invalid vertex label '" + labels_[i] + "'");
        auto [it, inserted] = index.emplace(labels_[i], i);
        require(inserted, "duplicate vertex label '" + labels_[i] + "'");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    edges_.reserve(edges.size());
    for (const auto &[a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        require(ia != index.end(), "edge endpoint '" + a + "' is not a vertex");
        require(ib != index.end(), "edge endpoint '" + b + "' is not a vertex");
        require(ia->second != ib->second, "self-loop on vertex '" + a + "'");
        auto key = std::minmax(ia->second, ib->second);
        require(seen.insert(key).second,
                "duplicate edge (" + a + ", " + b + ")");
        edges_.push_back({ia->second, ib->second});
    }
    if (weight_q_) {
        require(valid_q(*weight_q_), "q must lie in the open interval (0, 1)");
    }
}

Graph Graph::with_weight(std::optional<double> q) const {
    if (q) {
        require(valid_q(*q), "q must lie in the open interval (0, 1)");
    }
    Graph g = *this;
    g.weight_q_ = q;
    return g;
}

std::vector<std::size_t> Graph::incident_edges(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].u == v || edges_[e].v == v) {
            out.push_back(e);
        }
    }
    return out;
}

std::size_t Graph::degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(),
                      [v](const Edge &e) { return e.u == v || e.v == v; }));
}

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names = {"triangle", "square", "paw"};
    return names;
}

Graph preset_graph(std::string_view name) {
    if (name == "triangle") {
        return Graph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"2", "0"}});
    }
    if (name == "square") {
        return Graph({"0", "1", "2", "3"},
                     {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}});
    }
    if (name == "paw") {
        // triangle 0-1-2 with pendant vertex 3 hanging off vertex 2
        return Graph({"0", "1", "2", "3"},
                     {{"0", "1"}, {"1", "2"}, {"2", "0"}, {"2", "3"}});
    }
    std::string list;
    for (const auto &n : preset_names()) {
        list += (list.empty() ? "" : ", ") + n;
    }
    fail(ErrorKind::InvalidArgument, "unknown preset graph '" +
                                         std::string(name) +
                                         "' (available: " + list + ")");
}

Graph load_graph(std::string_view text) {
    std::optional<std::vector<std::string>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::optional<double> q;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tok = split_ws(line);
        if (tok.empty()) {
            continue;
        }

        const std::string_view key = tok[0];
        if (key == "vertices") {
            if (vertices) {
                throw ParseError(line_no, "'vertices' declared twice");
            }
            if (!edges.empty()) {
                throw ParseError(line_no, "'vertices' must precede edges");
            }
            if (tok.size() < 2) {
                throw ParseError(line_no, "'vertices' needs at least one label");
            }
            std::vector<std::string> labels;
            std::set<std::string_view> seen;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (!valid_label(tok[i])) {
                    throw ParseError(line_no, "field " + std::to_string(i + 1) +
                                                  ": invalid vertex label '" +
                                                  std::string(tok[i]) + "'");
                }
                if (!seen.insert(tok[i]).second) {
                    throw ParseError(line_no, "field " + std::to_string(i + 1) +
                                                  ": duplicate vertex '" +
                                                  std::string(tok[i]) + "'");
                }
                labels.emplace_back(tok[i]);
            }
            vertices = std::move(labels);
        } else if (key == "edge") {
            if (!vertices) {
                throw ParseError(line_no, "edge before 'vertices' declaration");
            }
            if (tok.size() != 3) {
                throw ParseError(line_no, "'edge' takes exactly two labels");
            }
            std::string a(tok[1]);
            std::string b(tok[2]);
            for (std::size_t f = 1; f <= 2; ++f) {
                if (std::find(vertices->begin(), vertices->end(), tok[f]) ==
                    vertices->end()) {
                    throw ParseError(line_no,
                                     "field " + std::to_string(f + 1) +
                                         ": dangling endpoint '" +
                                         std::string(tok[f]) + "'");
                }
            }
            if (a == b) {
                throw ParseError(line_no, "self-loop on vertex '" + a + "'");
            }
            for (const auto &[x, y] : edges) {
                if ((x == a && y == b) || (x == b && y == a)) {
                    throw ParseError(line_no,
                                     "duplicate edge (" + a + ", " + b + ")");
                }
            }
            edges.emplace_back(std::move(a), std::move(b));
        } else if (key == "q") {
            if (q) {
                throw ParseError(line_no, "'q' declared twice");
            }
            if (tok.size() != 2) {
                throw ParseError(line_no, "'q' takes exactly one value");
            }
            double value = 0.0;
            auto [ptr, ec] =
                std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(),
                                value);
            if (ec != std::errc() || ptr != tok[1].data() + tok[1].size()) {
                throw ParseError(line_no, "field 2: '" + std::string(tok[1]) +
                                              "' is not a number");
            }
            if (!valid_q(value)) {
                throw ParseError(line_no, "field 2: q = " + std::string(tok[1]) +
                                              " outside the open interval (0, 1)");
            }
            q = value;
        } else {
            throw ParseError(line_no,
                             "unknown keyword '" + std::string(key) + "'");
        }
    }
    if (!vertices) {
        throw ParseError(line_no, "missing 'vertices' declaration");
    }
    return Graph(std::move(*vertices), std::move(edges), q);
}

std::string serialize_graph(const Graph &g) {
    std::ostringstream out;
    out << "vertices";
    for (const auto &l : g.labels()) {
        out << ' ' << l;
    }
    out << '\n';
    for (const auto &e : g.edges()) {
        out << "edge " << g.labels()[e.u] << ' ' << g.labels()[e.v] << '\n';
    }
    if (auto q = g.weight_q()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", *q);
        out << "q " << buf << '\n';
    }
    return out.str();
}

std::vector<BasisIndex> enumerate_edge_covers(const Graph &g) {
    check_brute_force_size(g.num_edges(), "edge count");
    std::vector<BasisIndex> vertex_masks(g.num_vertices(), 0);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        vertex_masks[g.edges()[e].u] |= BasisIndex{1} << e;
        vertex_masks[g.edges()[e].v] |= BasisIndex{1} << e;
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (vertex_masks[v] == 0) {
            fail(ErrorKind::Domain, "vertex '" + g.labels()[v] +
                                        "' is isolated; no edge cover exists");
        }
    }
    std::vector<BasisIndex> covers;
    const BasisIndex total = BasisIndex{1} << g.num_edges();
    for (BasisIndex x = 0; x < total; ++x) {
        // bit = 1 means excluded, so a vertex is covered unless all of its
        // incident bits are set
        bool covered = std::all_of(
            vertex_masks.begin(), vertex_masks.end(),
            [x](BasisIndex m) { return (x & m) != m; });
        if (covered) {
            covers.push_back(x);
        }
    }
    return covers;
}

std::size_t cut_value(const Graph &g, BasisIndex assignment) {
    std::size_t cut = 0;
    for (const auto &e : g.edges()) {
        cut += ((assignment >> e.u) & 1U) != ((assignment >> e.v) & 1U);
    }
    return cut;
}

std::vector<BasisIndex> enumerate_max_cuts(const Graph &g) {
    check_brute_force_size(g.num_vertices(), "vertex count");
    const BasisIndex total = BasisIndex{1} << g.num_vertices();
    std::size_t best = 0;
    std::vector<BasisIndex> out;
    for (BasisIndex x = 0; x < total; ++x) {
        std::size_t c = cut_value(g, x);
        if (c > best || out.empty()) {
            best = c;
            out.clear();
        }
        if (c == best) {
            out.push_back(x);
        }
    }
    return out;
}

} // namespace gqaoa
