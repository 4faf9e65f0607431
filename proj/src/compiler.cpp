#include "gqaoa/compiler.hpp"

#include "gqaoa/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace gqaoa {

namespace {

constexpr double kPi = std::numbers::pi;

/**
 * Appends native gates while merging consecutive same-axis single-qubit
 * rotations on a wire. A merge that lands on exactly zero drops the gate.
 */
class CircuitBuilder {
public:
    explicit CircuitBuilder(std::size_t num_qubits)
        : wires_(num_qubits) {}

    void r(std::size_t q, double phi, double theta) { single(RGate{phi, theta, q}); }
    void ry(std::size_t q, double theta) { r(q, kPi / 2.0, theta); }
    void rz(std::size_t q, double theta) { single(RzGate{theta, q}); }

    void xx(std::size_t i, std::size_t j, double theta) {
        wires_[i].push_back(gates_.size());
        wires_[j].push_back(gates_.size());
        gates_.emplace_back(XXGate{theta, i, j});
    }

    /// exp(-i theta Z_i Z_j): Ry(pi/2) maps Z to X on both sides.
    void zz(std::size_t i, std::size_t j, double theta) {
        ry(i, kPi / 2.0);
        ry(j, kPi / 2.0);
        xx(i, j, -theta);
        ry(i, -kPi / 2.0);
        ry(j, -kPi / 2.0);
    }

    /// exp(-i phi |1><1|) on a single qubit, up to global phase.
    void phase_one(std::size_t q, double phi) { rz(q, -phi); }

    /// exp(-i phi |11><11|) up to global phase; one XX.
    void phase_pair(std::size_t a, std::size_t b, double phi) {
        rz(a, -phi / 2.0);
        rz(b, -phi / 2.0);
        zz(a, b, phi / 4.0);
    }

    void cnot(std::size_t control, std::size_t target) {
        ry(target, -kPi / 2.0);
        phase_pair(control, target, kPi);
        ry(target, kPi / 2.0);
    }

    /// exp(-i phi |111><111|): three controlled phases around a CNOT pair,
    /// five XX in total.
    void phase_triple(std::size_t c1, std::size_t c2, std::size_t t, double phi) {
        phase_pair(c2, t, phi / 2.0);
        cnot(c1, c2);
        phase_pair(c2, t, -phi / 2.0);
        cnot(c1, c2);
        phase_pair(c1, t, phi / 2.0);
    }

    /// Margolus gate: Toffoli up to a diagonal phase, three XX. The sequence
    /// reversed with negated angles is itself, so it is its own inverse.
    void relative_toffoli(std::size_t c1, std::size_t c2, std::size_t t) {
        ry(t, kPi / 4.0);
        cnot(c2, t);
        ry(t, kPi / 4.0);
        cnot(c1, t);
        ry(t, -kPi / 4.0);
        cnot(c2, t);
        ry(t, -kPi / 4.0);
    }

    std::vector<NativeGate> take() {
        std::vector<NativeGate> out;
        out.reserve(gates_.size());
        for (auto &g : gates_) {
            if (g) {
                out.push_back(*g);
            }
        }
        return out;
    }

private:
    template <class G> void single(G gate) {
        auto &wire = wires_[gate.target];
        if (!wire.empty()) {
            auto &prev = gates_[wire.back()];
            if (auto *p = std::get_if<G>(&*prev); p && same_axis(*p, gate)) {
                p->theta += gate.theta;
                if (p->theta == 0.0) {
                    prev.reset();
                    wire.pop_back();
                }
                return;
            }
        }
        wire.push_back(gates_.size());
        gates_.emplace_back(gate);
    }

    static bool same_axis(const RGate &a, const RGate &b) { return a.phi == b.phi; }
    static bool same_axis(const RzGate &, const RzGate &) { return true; }

    std::vector<std::vector<std::size_t>> wires_;
    std::vector<std::optional<NativeGate>> gates_;
};

/// exp(-i phi |1..1><1..1|) on `qubits`; width 4 routes through `ancilla`.
void multi_phase(CircuitBuilder &b, const std::vector<std::size_t> &qubits,
                 double phi, std::optional<std::size_t> ancilla) {
    switch (qubits.size()) {
    case 1:
        b.phase_one(qubits[0], phi);
        return;
    case 2:
        b.phase_pair(qubits[0], qubits[1], phi);
        return;
    case 3:
        b.phase_triple(qubits[0], qubits[1], qubits[2], phi);
        return;
    case 4:
        if (ancilla) {
            b.relative_toffoli(qubits[0], qubits[1], *ancilla);
            b.phase_triple(*ancilla, qubits[2], qubits[3], phi);
            b.relative_toffoli(qubits[0], qubits[1], *ancilla);
            return;
        }
        fail(ErrorKind::Unsupported,
             "a 4-qubit controlled phase needs an ancilla qubit");
    default:
        fail(ErrorKind::Unsupported,
             "controlled phase on " + std::to_string(qubits.size()) +
                 " qubits is not supported");
    }
}

std::string format_angle(double x) {
    if (x == 0.0) {
        x = 0.0; // drop the sign of negative zero
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace

GateSequence compile_phase_separator(const Graph &g, ProblemKind kind,
                                     double alpha) {
    const std::size_t n =
        kind == ProblemKind::MaxCut ? g.num_vertices() : g.num_edges();
    if (n > kMaxCompileQubits) {
        fail(ErrorKind::Unsupported,
             "compiler handles at most " + std::to_string(kMaxCompileQubits) +
                 " qubits, problem needs " + std::to_string(n));
    }
    GateSequence seq;
    seq.num_qubits = n;

    if (kind == ProblemKind::MaxCut) {
        if (g.num_edges() == 0) {
            fail(ErrorKind::Domain, "Max-Cut needs at least one edge");
        }
        if (alpha == 0.0) {
            return seq;
        }
        CircuitBuilder b(n);
        for (const auto &e : g.edges()) {
            b.zz(e.u, e.v, alpha);
        }
        seq.gates = b.take();
        return seq;
    }

    std::vector<std::vector<std::size_t>> terms;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        auto incident = g.incident_edges(v);
        if (incident.empty()) {
            fail(ErrorKind::Domain, "vertex '" + g.labels()[v] +
                                        "' is isolated; no edge cover exists");
        }
        if (incident.size() > 3) {
            fail(ErrorKind::Unsupported,
                 "vertex '" + g.labels()[v] + "' has degree " +
                     std::to_string(incident.size()) +
                     "; edge-cover compilation supports degree <= 3");
        }
        terms.push_back(std::move(incident));
    }
    if (alpha == 0.0) {
        return seq;
    }
    CircuitBuilder b(n);
    for (const auto &t : terms) {
        // vertex v is uncovered when every incident edge bit is 1
        multi_phase(b, t, alpha, std::nullopt);
    }
    seq.gates = b.take();
    return seq;
}

GateSequence compile_grover_mixer(std::size_t n, double q, double beta,
                                  bool use_ancilla) {
    if (n < 1 || n > 4) {
        fail(ErrorKind::Unsupported,
             "Grover mixer compilation supports 1 to 4 qubits, got " +
                 std::to_string(n));
    }
    if (!(q > 0.0 && q < 1.0)) {
        fail(ErrorKind::InvalidArgument,
             "Grover mixer q must lie in the open interval (0, 1)");
    }
    if (n == 4 && !use_ancilla) {
        fail(ErrorKind::Unsupported,
             "the 4-qubit Grover mixer requires an ancilla (pass use_ancilla)");
    }
    GateSequence seq;
    seq.num_qubits = n;
    if (use_ancilla && n == 4) {
        seq.ancilla = n;
        seq.num_qubits = n + 1;
    }
    if (beta == 0.0) {
        return seq;
    }

    // W = Ry(2a - pi) sends |1> to sqrt(1-q)|0> + sqrt(q)|1>, so
    // exp(-i beta |G><G|) = W^n exp(-i beta |1..1><1..1|) (W^dagger)^n.
    const double a = std::asin(std::sqrt(q));
    CircuitBuilder b(seq.num_qubits);
    std::vector<std::size_t> qubits(n);
    for (std::size_t k = 0; k < n; ++k) {
        qubits[k] = k;
        b.ry(k, kPi - 2.0 * a);
    }
    multi_phase(b, qubits, beta, seq.ancilla);
    for (std::size_t k = 0; k < n; ++k) {
        b.ry(k, 2.0 * a - kPi);
    }
    seq.gates = b.take();
    return seq;
}

std::size_t two_qubit_gate_count(const GateSequence &seq) {
    std::size_t count = 0;
    for (const auto &g : seq.gates) {
        count += std::holds_alternative<XXGate>(g);
    }
    return count;
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

DenseMatrix sequence_unitary(const GateSequence &seq) {
    require(seq.num_qubits >= 1, "sequence declares no qubits");
    if (seq.num_qubits > kMaxCompileQubits) {
        fail(ErrorKind::Unsupported, "sequence register exceeds " +
                                         std::to_string(kMaxCompileQubits) +
                                         " qubits");
    }
    const std::size_t dim = std::size_t{1} << seq.num_qubits;
    DenseMatrix u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> amps(dim, Complex{0.0, 0.0});
        amps[col] = 1.0;
        StateVector s(std::move(amps));
        for (const auto &g : seq.gates) {
            apply_native_gate(s, g);
        }
        auto out = s.amplitudes();
        for (std::size_t row = 0; row < dim; ++row) {
            u(row, col) = out[row];
        }
    }
    return u;
}

double sequence_unitary_deviation(const GateSequence &seq,
                                  const DenseMatrix &reference) {
    const DenseMatrix full = sequence_unitary(seq);
    const std::size_t logical = seq.num_qubits - (seq.ancilla ? 1 : 0);
    const std::size_t dim = std::size_t{1} << logical;
    if (reference.dim() != dim) {
        fail(ErrorKind::InvalidArgument,
             "reference dimension " + std::to_string(reference.dim()) +
                 " does not match sequence dimension " + std::to_string(dim));
    }
    // logical index -> register index with the ancilla bit held at zero
    auto embed = [&](std::size_t x) -> std::size_t {
        if (!seq.ancilla) {
            return x;
        }
        const std::size_t a = *seq.ancilla;
        const std::size_t low = x & ((std::size_t{1} << a) - 1);
        const std::size_t high = x >> a;
        return low | (high << (a + 1));
    };

    Complex overlap{0.0, 0.0};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            overlap += std::conj(reference(r, c)) * full(embed(r), embed(c));
        }
    }
    const Complex phase =
        std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
    double worst = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            worst = std::max(worst,
                             std::abs(full(embed(r), embed(c)) - phase * reference(r, c)));
        }
    }
    return worst;
}

DenseMatrix exact_phase_separator(const DiagonalHamiltonian &h, double alpha) {
    DenseMatrix m(h.dimension());
    auto e = h.energies();
    for (std::size_t x = 0; x < e.size(); ++x) {
        m(x, x) = std::polar(1.0, -alpha * e[x]);
    }
    return m;
}

DenseMatrix exact_grover_mixer(std::size_t n, double q, double beta) {
    const StateVector g = prepare_initial_state(n, q);
    const std::size_t dim = g.dimension();
    DenseMatrix m = DenseMatrix::identity(dim);
    const Complex factor = std::polar(1.0, -beta) - 1.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) += factor * g[r] * std::conj(g[c]);
        }
    }
    return m;
}

std::string emit_circuit(const GateSequence &seq) {
    std::ostringstream out;
    for (const auto &g : seq.gates) {
        if (const auto *r = std::get_if<RGate>(&g)) {
            out << "R " << format_angle(r->phi) << ' ' << format_angle(r->theta)
                << ' ' << r->target << '\n';
        } else if (const auto *rz = std::get_if<RzGate>(&g)) {
            out << "RZ " << format_angle(rz->theta) << ' ' << rz->target << '\n';
        } else {
            const auto &xx = std::get<XXGate>(g);
            out << "XX " << format_angle(xx.theta) << ' ' << xx.i << ' ' << xx.j
                << '\n';
        }
    }
    return out.str();
}

GateSequence parse_circuit(std::string_view text, std::size_t num_qubits) {
    GateSequence seq;
    std::size_t width = num_qubits;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string op;
        if (!(fields >> op)) {
            continue;
        }
        auto read_double = [&](double &x) {
            std::string tok;
            if (!(fields >> tok)) {
                throw ParseError(line_no, "missing angle");
            }
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw ParseError(line_no, "bad angle '" + tok + "'");
            }
        };
        auto read_index = [&](std::size_t &q) {
            long long v = -1;
            if (!(fields >> v) || v < 0) {
                throw ParseError(line_no, "bad qubit index");
            }
            q = static_cast<std::size_t>(v);
            width = std::max(width, q + 1);
        };
        if (op == "R") {
            RGate g{};
            read_double(g.phi);
            read_double(g.theta);
            read_index(g.target);
            seq.gates.emplace_back(g);
        } else if (op == "RZ") {
            RzGate g{};
            read_double(g.theta);
            read_index(g.target);
            seq.gates.emplace_back(g);
        } else if (op == "XX") {
            XXGate g{};
            read_double(g.theta);
            read_index(g.i);
            read_index(g.j);
            if (g.i == g.j) {
                throw ParseError(line_no, "XX needs two distinct qubits");
            }
            seq.gates.emplace_back(g);
        } else {
            throw ParseError(line_no, "unknown gate '" + op + "'");
        }
        std::string extra;
        if (fields >> extra) {
            throw ParseError(line_no, "trailing field '" + extra + "'");
        }
    }
    seq.num_qubits = width;
    return seq;
}

} // namespace gqaoa
