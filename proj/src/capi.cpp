#include "gqaoa/gqaoa.h"

#include "gqaoa/analytics.hpp"
#include "gqaoa/compiler.hpp"
#include "gqaoa/error.hpp"
#include "gqaoa/graph.hpp"
#include "gqaoa/problems.hpp"
#include "gqaoa/qaoa.hpp"

#include <cstring>
#include <new>
#include <string>

struct gqaoa_graph {
    gqaoa::Graph value;
};
struct gqaoa_hamiltonian {
    gqaoa::DiagonalHamiltonian value;
};
struct gqaoa_state {
    gqaoa::StateVector value;
};
struct gqaoa_sequence {
    gqaoa::GateSequence value;
};
struct gqaoa_fairness_report {
    gqaoa::FairnessReport value;
};

namespace {

thread_local std::string last_error;

gqaoa_status status_of(gqaoa::ErrorKind kind) {
    switch (kind) {
    case gqaoa::ErrorKind::InvalidArgument:
        return GQAOA_INVALID_ARGUMENT;
    case gqaoa::ErrorKind::Parse:
        return GQAOA_PARSE_ERROR;
    case gqaoa::ErrorKind::Domain:
        return GQAOA_DOMAIN_ERROR;
    case gqaoa::ErrorKind::Unsupported:
        return GQAOA_UNSUPPORTED;
    case gqaoa::ErrorKind::CapExceeded:
        return GQAOA_CAP_EXCEEDED;
    }
    return GQAOA_INTERNAL;
}

template <class F>
gqaoa_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        return GQAOA_OK;
    } catch (const gqaoa::Error &e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return GQAOA_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return GQAOA_INTERNAL;
    }
}

void need(const void *p, const char *name) {
    gqaoa::require(p != nullptr, std::string(name) + " must not be null");
}

// Two-call array convention; BufferTooSmall is reported through the status.
struct BufferTooSmall {};

template <class T, class Range>
void copy_out(const Range &src, T *out, size_t *len) {
    need(len, "len");
    const size_t n = std::size(src);
    if (out == nullptr) {
        *len = n;
        return;
    }
    if (*len < n) {
        *len = n;
        throw BufferTooSmall{};
    }
    std::copy(std::begin(src), std::end(src), out);
    *len = n;
}

template <class F>
gqaoa_status guarded_array(F &&body) {
    try {
        return guarded(body);
    } catch (BufferTooSmall) {
        last_error = "output buffer too small";
        return GQAOA_BUFFER_TOO_SMALL;
    }
}

char *dup_string(const std::string &s) {
    auto *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (p == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

gqaoa::ProblemKind problem_of(gqaoa_problem kind) {
    switch (kind) {
    case GQAOA_MAXCUT:
        return gqaoa::ProblemKind::MaxCut;
    case GQAOA_EDGECOVER:
        return gqaoa::ProblemKind::EdgeCover;
    }
    gqaoa::fail(gqaoa::ErrorKind::InvalidArgument, "unknown problem kind");
}

gqaoa::MixerSpec mixer_of(gqaoa_mixer mixer, double q) {
    switch (mixer) {
    case GQAOA_TRANSVERSE:
        return gqaoa::MixerSpec::transverse();
    case GQAOA_GROVER:
        return gqaoa::MixerSpec::grover(q);
    }
    gqaoa::fail(gqaoa::ErrorKind::InvalidArgument, "unknown mixer kind");
}

gqaoa::ParameterFamily family_of(gqaoa_family family) {
    switch (family) {
    case GQAOA_STANDARD:
        return gqaoa::ParameterFamily::StandardQaoa;
    case GQAOA_GROVER_UNWEIGHTED:
        return gqaoa::ParameterFamily::GroverUnweighted;
    case GQAOA_GROVER_WEIGHTED:
        return gqaoa::ParameterFamily::GroverWeighted;
    }
    gqaoa::fail(gqaoa::ErrorKind::InvalidArgument, "unknown parameter family");
}

gqaoa::Distribution distribution_of(const double *probs, size_t len) {
    need(probs, "probabilities");
    return gqaoa::Distribution(std::vector<double>(probs, probs + len));
}

std::vector<gqaoa::BasisIndex> ground_of(const uint64_t *ground, size_t n) {
    need(ground, "ground");
    return {ground, ground + n};
}

} // namespace

extern "C" {

const char *gqaoa_version(void) { return "1.0.0"; }

const char *gqaoa_last_error(void) { return last_error.c_str(); }

void gqaoa_string_free(char *s) { std::free(s); }

const char *gqaoa_preset_names(void) {
    static const std::string names = [] {
        std::string all;
        for (const auto &n : gqaoa::preset_names()) {
            all += (all.empty() ? "" : ",") + n;
        }
        return all;
    }();
    return names.c_str();
}

gqaoa_status gqaoa_graph_preset(const char *name, gqaoa_graph **out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        *out = new gqaoa_graph{gqaoa::preset_graph(name)};
    });
}

gqaoa_status gqaoa_graph_parse(const char *text, gqaoa_graph **out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new gqaoa_graph{gqaoa::load_graph(text)};
    });
}

void gqaoa_graph_free(gqaoa_graph *g) { delete g; }

size_t gqaoa_graph_num_vertices(const gqaoa_graph *g) {
    return g ? g->value.num_vertices() : 0;
}

size_t gqaoa_graph_num_edges(const gqaoa_graph *g) {
    return g ? g->value.num_edges() : 0;
}

gqaoa_status gqaoa_graph_weight(const gqaoa_graph *g, int *has_q, double *q) {
    return guarded([&] {
        need(g, "graph");
        need(has_q, "has_q");
        need(q, "q");
        const auto w = g->value.weight_q();
        *has_q = w.has_value() ? 1 : 0;
        *q = w.value_or(0.0);
    });
}

gqaoa_status gqaoa_graph_with_weight(const gqaoa_graph *g, int has_q, double q,
                                     gqaoa_graph **out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        *out = new gqaoa_graph{
            g->value.with_weight(has_q ? std::optional<double>(q) : std::nullopt)};
    });
}

gqaoa_status gqaoa_graph_serialize(const gqaoa_graph *g, char **out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        *out = dup_string(gqaoa::serialize_graph(g->value));
    });
}

gqaoa_status gqaoa_hamiltonian_build(const gqaoa_graph *g, gqaoa_problem kind,
                                     gqaoa_hamiltonian **out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        *out = new gqaoa_hamiltonian{gqaoa::build_hamiltonian(g->value, problem_of(kind))};
    });
}

void gqaoa_hamiltonian_free(gqaoa_hamiltonian *h) { delete h; }

size_t gqaoa_hamiltonian_num_qubits(const gqaoa_hamiltonian *h) {
    return h ? h->value.num_qubits() : 0;
}

double gqaoa_hamiltonian_ground_energy(const gqaoa_hamiltonian *h) {
    return h ? h->value.ground_energy() : 0.0;
}

gqaoa_status gqaoa_hamiltonian_ground_set(const gqaoa_hamiltonian *h, uint64_t *out,
                                          size_t *len) {
    return guarded_array([&] {
        need(h, "hamiltonian");
        copy_out(h->value.ground_set(), out, len);
    });
}

gqaoa_status gqaoa_ideal_ground_distribution(const gqaoa_hamiltonian *h, double q,
                                             double *out, size_t *len) {
    return guarded_array([&] {
        need(h, "hamiltonian");
        const gqaoa::WeightTable w(h->value.num_qubits(), q);
        copy_out(w.normalized_over(h->value.ground_set()), out, len);
    });
}

gqaoa_status gqaoa_run(const gqaoa_hamiltonian *h, gqaoa_mixer mixer, double q,
                       const double *alphas, const double *betas, size_t rounds,
                       gqaoa_state **out) {
    return guarded([&] {
        need(h, "hamiltonian");
        need(out, "out");
        gqaoa::require(rounds >= 1, "QAOA needs at least one round");
        need(alphas, "alphas");
        need(betas, "betas");
        gqaoa::QaoaParams params(std::vector<double>(alphas, alphas + rounds),
                                 std::vector<double>(betas, betas + rounds));
        *out = new gqaoa_state{gqaoa::run_qaoa(h->value, mixer_of(mixer, q), params)};
    });
}

void gqaoa_state_free(gqaoa_state *s) { delete s; }

gqaoa_status gqaoa_state_probabilities(const gqaoa_state *s, double *out, size_t *len) {
    return guarded_array([&] {
        need(s, "state");
        copy_out(gqaoa::measure_distribution(s->value), out, len);
    });
}

gqaoa_status gqaoa_expectation(const gqaoa_state *s, const gqaoa_hamiltonian *h,
                               double *out) {
    return guarded([&] {
        need(s, "state");
        need(h, "hamiltonian");
        need(out, "out");
        *out = gqaoa::expectation_energy(s->value, h->value);
    });
}

gqaoa_status gqaoa_ground_probability(const gqaoa_state *s, const gqaoa_hamiltonian *h,
                                      double *out) {
    return guarded([&] {
        need(s, "state");
        need(h, "hamiltonian");
        need(out, "out");
        *out = gqaoa::ground_state_probability(s->value, h->value);
    });
}

gqaoa_status gqaoa_fairness_deviation(const gqaoa_state *s, const gqaoa_hamiltonian *h,
                                      double q, double *out, int *defined) {
    return guarded([&] {
        need(s, "state");
        need(h, "hamiltonian");
        need(out, "out");
        need(defined, "defined");
        const auto d = gqaoa::fairness_deviation(
            s->value, h->value, gqaoa::WeightTable(h->value.num_qubits(), q));
        *out = d.value;
        *defined = d.defined ? 1 : 0;
    });
}

gqaoa_status gqaoa_optimize(const gqaoa_hamiltonian *h, gqaoa_mixer mixer, double q,
                            size_t rounds, size_t starts, uint64_t seed,
                            double *alphas_out, double *betas_out,
                            gqaoa_optimize_result *result) {
    return guarded([&] {
        need(h, "hamiltonian");
        need(alphas_out, "alphas_out");
        need(betas_out, "betas_out");
        need(result, "result");
        gqaoa::OptimizerConfig config;
        config.starts = starts;
        const auto r =
            gqaoa::optimize_parameters(h->value, mixer_of(mixer, q), rounds, config, seed);
        std::copy(r.params.alphas().begin(), r.params.alphas().end(), alphas_out);
        std::copy(r.params.betas().begin(), r.params.betas().end(), betas_out);
        *result = {r.expectation, r.ground_probability, r.best_start, r.converged_starts};
    });
}

gqaoa_status gqaoa_paper_params(const char *graph, gqaoa_problem kind,
                                gqaoa_family family, size_t rounds, double *alphas_out,
                                double *betas_out) {
    return guarded([&] {
        need(graph, "graph");
        need(alphas_out, "alphas_out");
        need(betas_out, "betas_out");
        const auto fam = family_of(family);
        const auto mixer = fam == gqaoa::ParameterFamily::StandardQaoa
                               ? gqaoa::MixerKind::Transverse
                               : gqaoa::MixerKind::Grover;
        const auto p = gqaoa::apply_convention(
            gqaoa::paper_parameters(graph, problem_of(kind), fam, rounds),
            gqaoa::paper_sign_convention(mixer));
        std::copy(p.alphas().begin(), p.alphas().end(), alphas_out);
        std::copy(p.betas().begin(), p.betas().end(), betas_out);
    });
}

gqaoa_status gqaoa_paper_weight(const char *graph, double *q) {
    return guarded([&] {
        need(graph, "graph");
        need(q, "q");
        *q = gqaoa::paper_weight_q(graph);
    });
}

gqaoa_status gqaoa_sample(const double *probs, size_t len, uint64_t shots, uint64_t seed,
                          uint64_t *counts_out) {
    return guarded([&] {
        need(counts_out, "counts_out");
        const auto s = gqaoa::sample(distribution_of(probs, len), shots, seed);
        std::copy(s.counts.begin(), s.counts.end(), counts_out);
    });
}

gqaoa_status gqaoa_expected_draws_mc(const double *probs, size_t len,
                                     const uint64_t *ground, size_t n_ground_states,
                                     size_t n_g, size_t trials, uint64_t seed,
                                     double *mean, double *standard_error) {
    return guarded([&] {
        need(mean, "mean");
        need(standard_error, "standard_error");
        const auto r = gqaoa::expected_draws_mc(distribution_of(probs, len),
                                                ground_of(ground, n_ground_states), n_g,
                                                trials, seed);
        *mean = r.mean;
        *standard_error = r.standard_error;
    });
}

gqaoa_status gqaoa_expected_draws_exact(const double *probs, size_t len,
                                        const uint64_t *ground, size_t n_ground_states,
                                        size_t n_g, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = gqaoa::expected_draws_exact(distribution_of(probs, len),
                                           ground_of(ground, n_ground_states), n_g);
    });
}

gqaoa_status gqaoa_chi2_upper_tail(double statistic, double dof, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = gqaoa::chi2_upper_tail(statistic, dof);
    });
}

gqaoa_status gqaoa_chi2_pvalue(const uint64_t *observed, const double *expected,
                               size_t len, double *out) {
    return guarded([&] {
        need(observed, "observed");
        need(out, "out");
        *out = gqaoa::chi2_pvalue(std::span<const uint64_t>(observed, len),
                                  distribution_of(expected, len));
    });
}

gqaoa_status gqaoa_kl_divergence(const double *q1, const double *q2, size_t len,
                                 double *out) {
    return guarded([&] {
        need(out, "out");
        *out = gqaoa::kl_divergence(distribution_of(q1, len), distribution_of(q2, len));
    });
}

gqaoa_status gqaoa_shots_to_reject(const double *q1, const double *q2, size_t len,
                                   double significance, size_t sets, uint64_t cap,
                                   uint64_t seed, uint64_t *out) {
    return guarded([&] {
        need(out, "out");
        gqaoa::ShotsToRejectConfig config{significance, sets, cap};
        *out = gqaoa::shots_to_reject(distribution_of(q1, len), distribution_of(q2, len),
                                      config, seed);
    });
}

gqaoa_fairness_config gqaoa_fairness_config_default(void) {
    const gqaoa::FairnessConfig d;
    return {d.shots,          d.repeats,      d.kl_resamples, d.reject.significance,
            d.reject.sets,    d.reject.cap,   d.ideal_q1 ? 1 : 0};
}

gqaoa_status gqaoa_fairness(const double *full, size_t len, const uint64_t *ground,
                            const double *ideal, size_t n_ground_states,
                            const gqaoa_fairness_config *config, uint64_t seed,
                            gqaoa_fairness_report **out) {
    return guarded([&] {
        need(ideal, "ideal");
        need(config, "config");
        need(out, "out");
        gqaoa::FairnessConfig c;
        c.shots = config->shots;
        c.repeats = config->repeats;
        c.kl_resamples = config->kl_resamples;
        c.reject = {config->significance, config->sets, config->cap};
        c.ideal_q1 = config->ideal_q1 != 0;
        const auto g = ground_of(ground, n_ground_states);
        *out = new gqaoa_fairness_report{gqaoa::synthetic_fairness(
            distribution_of(full, len), g,
            std::span<const double>(ideal, n_ground_states), c, seed)};
    });
}

void gqaoa_fairness_report_free(gqaoa_fairness_report *r) { delete r; }

gqaoa_fairness_summary gqaoa_fairness_report_summary(const gqaoa_fairness_report *r) {
    if (r == nullptr) {
        return {};
    }
    const auto &v = r->value;
    return {v.n_star_runs.size(), v.capped_runs, v.n_star_mean,
            v.n_star_std,         v.kl_mean,     v.kl_std};
}

gqaoa_status gqaoa_fairness_report_runs(const gqaoa_fairness_report *r, uint64_t *out,
                                        size_t *len) {
    return guarded_array([&] {
        need(r, "report");
        copy_out(r->value.n_star_runs, out, len);
    });
}

gqaoa_status gqaoa_fairness_report_sampled(const gqaoa_fairness_report *r, double *out,
                                           size_t *len) {
    return guarded_array([&] {
        need(r, "report");
        copy_out(r->value.sampled, out, len);
    });
}

gqaoa_status gqaoa_compile_separator(const gqaoa_graph *g, gqaoa_problem kind,
                                     double alpha, gqaoa_sequence **out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        *out = new gqaoa_sequence{
            gqaoa::compile_phase_separator(g->value, problem_of(kind), alpha)};
    });
}

gqaoa_status gqaoa_compile_grover_mixer(size_t n, double q, double beta, int use_ancilla,
                                        gqaoa_sequence **out) {
    return guarded([&] {
        need(out, "out");
        *out = new gqaoa_sequence{
            gqaoa::compile_grover_mixer(n, q, beta, use_ancilla != 0)};
    });
}

void gqaoa_sequence_free(gqaoa_sequence *s) { delete s; }

size_t gqaoa_sequence_num_gates(const gqaoa_sequence *s) {
    return s ? s->value.gates.size() : 0;
}

size_t gqaoa_sequence_two_qubit_count(const gqaoa_sequence *s) {
    return s ? gqaoa::two_qubit_gate_count(s->value) : 0;
}

gqaoa_status gqaoa_sequence_emit(const gqaoa_sequence *s, char **out) {
    return guarded([&] {
        need(s, "sequence");
        need(out, "out");
        *out = dup_string(gqaoa::emit_circuit(s->value));
    });
}

gqaoa_status gqaoa_sequence_deviation_separator(const gqaoa_sequence *s,
                                                const gqaoa_hamiltonian *h, double alpha,
                                                double *out) {
    return guarded([&] {
        need(s, "sequence");
        need(h, "hamiltonian");
        need(out, "out");
        *out = gqaoa::sequence_unitary_deviation(
            s->value, gqaoa::exact_phase_separator(h->value, alpha));
    });
}

gqaoa_status gqaoa_sequence_deviation_grover(const gqaoa_sequence *s, size_t n, double q,
                                             double beta, double *out) {
    return guarded([&] {
        need(s, "sequence");
        need(out, "out");
        *out = gqaoa::sequence_unitary_deviation(s->value,
                                                 gqaoa::exact_grover_mixer(n, q, beta));
    });
}

} // extern "C"
