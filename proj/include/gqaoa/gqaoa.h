/*
 * C interface to the gqaoa library.
 *
 * Every function returns a gqaoa_status. On failure the message of the most
 * recent error on the calling thread is available from gqaoa_last_error().
 * Objects are opaque handles released with the matching *_free function;
 * strings returned through char** out-parameters are released with
 * gqaoa_string_free. Array outputs follow the two-call convention: pass
 * out = NULL to query the length, then call again with a buffer of at least
 * that many elements.
 */
#ifndef GQAOA_H
#define GQAOA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GQAOA_API __declspec(dllexport)
#else
#define GQAOA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gqaoa_status {
    GQAOA_OK = 0,
    GQAOA_INVALID_ARGUMENT = 1,
    GQAOA_PARSE_ERROR = 2,
    GQAOA_DOMAIN_ERROR = 3,
    GQAOA_UNSUPPORTED = 4,
    GQAOA_CAP_EXCEEDED = 5,
    GQAOA_BUFFER_TOO_SMALL = 6,
    GQAOA_INTERNAL = 7
} gqaoa_status;

typedef enum gqaoa_problem { GQAOA_MAXCUT = 0, GQAOA_EDGECOVER = 1 } gqaoa_problem;
typedef enum gqaoa_mixer { GQAOA_TRANSVERSE = 0, GQAOA_GROVER = 1 } gqaoa_mixer;
typedef enum gqaoa_family {
    GQAOA_STANDARD = 0,
    GQAOA_GROVER_UNWEIGHTED = 1,
    GQAOA_GROVER_WEIGHTED = 2
} gqaoa_family;

typedef struct gqaoa_graph gqaoa_graph;
typedef struct gqaoa_hamiltonian gqaoa_hamiltonian;
typedef struct gqaoa_state gqaoa_state;
typedef struct gqaoa_sequence gqaoa_sequence;

GQAOA_API const char *gqaoa_version(void);
GQAOA_API const char *gqaoa_last_error(void);
GQAOA_API void gqaoa_string_free(char *s);

/* graphs */
/* Comma-separated preset names. */
GQAOA_API const char *gqaoa_preset_names(void);
GQAOA_API gqaoa_status gqaoa_graph_preset(const char *name, gqaoa_graph **out);
GQAOA_API gqaoa_status gqaoa_graph_parse(const char *text, gqaoa_graph **out);
GQAOA_API void gqaoa_graph_free(gqaoa_graph *g);
GQAOA_API size_t gqaoa_graph_num_vertices(const gqaoa_graph *g);
GQAOA_API size_t gqaoa_graph_num_edges(const gqaoa_graph *g);
/* *has_q is set to 0 for an unweighted graph. */
GQAOA_API gqaoa_status gqaoa_graph_weight(const gqaoa_graph *g, int *has_q, double *q);
/* Copy with q replaced; has_q = 0 drops the weight. */
GQAOA_API gqaoa_status gqaoa_graph_with_weight(const gqaoa_graph *g, int has_q,
                                               double q, gqaoa_graph **out);
GQAOA_API gqaoa_status gqaoa_graph_serialize(const gqaoa_graph *g, char **out);

/* Hamiltonians */
GQAOA_API gqaoa_status gqaoa_hamiltonian_build(const gqaoa_graph *g, gqaoa_problem kind,
                                               gqaoa_hamiltonian **out);
GQAOA_API void gqaoa_hamiltonian_free(gqaoa_hamiltonian *h);
GQAOA_API size_t gqaoa_hamiltonian_num_qubits(const gqaoa_hamiltonian *h);
GQAOA_API double gqaoa_hamiltonian_ground_energy(const gqaoa_hamiltonian *h);
GQAOA_API gqaoa_status gqaoa_hamiltonian_ground_set(const gqaoa_hamiltonian *h,
                                                    uint64_t *out, size_t *len);

/* Product weights over the Hamiltonian's qubits restricted to its ground
 * set and renormalized; q = 0.5 gives the uniform distribution. */
GQAOA_API gqaoa_status gqaoa_ideal_ground_distribution(const gqaoa_hamiltonian *h,
                                                       double q, double *out,
                                                       size_t *len);

/* simulation; alphas and betas hold `rounds` angles each, q is ignored
 * for the transverse mixer */
GQAOA_API gqaoa_status gqaoa_run(const gqaoa_hamiltonian *h, gqaoa_mixer mixer,
                                 double q, const double *alphas,
                                 const double *betas, size_t rounds,
                                 gqaoa_state **out);
GQAOA_API void gqaoa_state_free(gqaoa_state *s);
GQAOA_API gqaoa_status gqaoa_state_probabilities(const gqaoa_state *s, double *out,
                                                 size_t *len);
GQAOA_API gqaoa_status gqaoa_expectation(const gqaoa_state *s,
                                         const gqaoa_hamiltonian *h, double *out);
GQAOA_API gqaoa_status gqaoa_ground_probability(const gqaoa_state *s,
                                                const gqaoa_hamiltonian *h,
                                                double *out);
/* Fairness deviation against product weights with parameter q over the
 * Hamiltonian's qubits; *defined = 0 when a ground state has probability 0. */
GQAOA_API gqaoa_status gqaoa_fairness_deviation(const gqaoa_state *s,
                                                const gqaoa_hamiltonian *h, double q,
                                                double *out, int *defined);

/* optimization */
typedef struct gqaoa_optimize_result {
    double expectation;
    double ground_probability;
    size_t best_start;
    size_t converged_starts;
} gqaoa_optimize_result;

/* alphas_out and betas_out receive `rounds` angles each. */
GQAOA_API gqaoa_status gqaoa_optimize(const gqaoa_hamiltonian *h, gqaoa_mixer mixer,
                                      double q, size_t rounds, size_t starts,
                                      uint64_t seed, double *alphas_out,
                                      double *betas_out,
                                      gqaoa_optimize_result *result);

/* Published angles with the per-mixer sign convention already applied. */
GQAOA_API gqaoa_status gqaoa_paper_params(const char *graph, gqaoa_problem kind,
                                          gqaoa_family family, size_t rounds,
                                          double *alphas_out, double *betas_out);
GQAOA_API gqaoa_status gqaoa_paper_weight(const char *graph, double *q);

/* sampling and statistics */
GQAOA_API gqaoa_status gqaoa_sample(const double *probs, size_t len, uint64_t shots,
                                    uint64_t seed, uint64_t *counts_out);
GQAOA_API gqaoa_status gqaoa_expected_draws_mc(const double *probs, size_t len,
                                               const uint64_t *ground, size_t n_ground_states,
                                               size_t n_g, size_t trials, uint64_t seed,
                                               double *mean, double *standard_error);
GQAOA_API gqaoa_status gqaoa_expected_draws_exact(const double *probs, size_t len,
                                                  const uint64_t *ground,
                                                  size_t n_ground_states, size_t n_g,
                                                  double *out);
GQAOA_API gqaoa_status gqaoa_chi2_upper_tail(double statistic, double dof, double *out);
GQAOA_API gqaoa_status gqaoa_chi2_pvalue(const uint64_t *observed,
                                         const double *expected, size_t len,
                                         double *out);
GQAOA_API gqaoa_status gqaoa_kl_divergence(const double *q1, const double *q2,
                                           size_t len, double *out);
GQAOA_API gqaoa_status gqaoa_shots_to_reject(const double *q1, const double *q2,
                                             size_t len, double significance,
                                             size_t sets, uint64_t cap,
                                             uint64_t seed, uint64_t *out);

typedef struct gqaoa_fairness_config {
    uint64_t shots;
    size_t repeats;
    size_t kl_resamples;
    double significance;
    size_t sets;
    uint64_t cap;
    int ideal_q1; /* nonzero: Q1 is the ideal distribution itself */
} gqaoa_fairness_config;

GQAOA_API gqaoa_fairness_config gqaoa_fairness_config_default(void);

typedef struct gqaoa_fairness_report gqaoa_fairness_report;

/* `full` is the measurement distribution over all basis states; `ideal`
 * holds one target probability per ground state. */
GQAOA_API gqaoa_status gqaoa_fairness(const double *full, size_t len,
                                      const uint64_t *ground, const double *ideal,
                                      size_t n_ground_states,
                                      const gqaoa_fairness_config *config,
                                      uint64_t seed, gqaoa_fairness_report **out);
GQAOA_API void gqaoa_fairness_report_free(gqaoa_fairness_report *r);

typedef struct gqaoa_fairness_summary {
    size_t uncapped_runs;
    size_t capped_runs;
    double n_star_mean;
    double n_star_std;
    double kl_mean;
    double kl_std;
} gqaoa_fairness_summary;

GQAOA_API gqaoa_fairness_summary gqaoa_fairness_report_summary(const gqaoa_fairness_report *r);
/* N* of each uncapped repeat. */
GQAOA_API gqaoa_status gqaoa_fairness_report_runs(const gqaoa_fairness_report *r,
                                                  uint64_t *out, size_t *len);
/* Q1 of the first repeat, in ground-set order. */
GQAOA_API gqaoa_status gqaoa_fairness_report_sampled(const gqaoa_fairness_report *r,
                                                     double *out, size_t *len);

/* compiler */
GQAOA_API gqaoa_status gqaoa_compile_separator(const gqaoa_graph *g, gqaoa_problem kind,
                                               double alpha, gqaoa_sequence **out);
GQAOA_API gqaoa_status gqaoa_compile_grover_mixer(size_t n, double q, double beta,
                                                  int use_ancilla,
                                                  gqaoa_sequence **out);
GQAOA_API void gqaoa_sequence_free(gqaoa_sequence *s);
GQAOA_API size_t gqaoa_sequence_num_gates(const gqaoa_sequence *s);
GQAOA_API size_t gqaoa_sequence_two_qubit_count(const gqaoa_sequence *s);
GQAOA_API gqaoa_status gqaoa_sequence_emit(const gqaoa_sequence *s, char **out);
/* Max elementwise deviation from the exact separator of `h` at `alpha`. */
GQAOA_API gqaoa_status gqaoa_sequence_deviation_separator(const gqaoa_sequence *s,
                                                          const gqaoa_hamiltonian *h,
                                                          double alpha, double *out);
/* Max elementwise deviation from the exact Grover mixer. */
GQAOA_API gqaoa_status gqaoa_sequence_deviation_grover(const gqaoa_sequence *s,
                                                       size_t n, double q, double beta,
                                                       double *out);

#ifdef __cplusplus
}
#endif

#endif
