#pragma once

#include "gqaoa/nelder_mead.hpp"
#include "gqaoa/problems.hpp"
#include "gqaoa/statevector.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace gqaoa {

/// Round angles in radians; alphas drive the phase separator, betas the mixer.
class QaoaParams {
public:
    QaoaParams() = default;
    /// Throws unless both lists are non-empty, equally long and finite.
    QaoaParams(std::vector<double> alphas, std::vector<double> betas);

    std::size_t rounds() const noexcept { return alphas_.size(); }
    const std::vector<double> &alphas() const noexcept { return alphas_; }
    const std::vector<double> &betas() const noexcept { return betas_; }

    /// (alpha_1, beta_1, alpha_2, beta_2, ...)
    std::vector<double> flatten() const;
    static QaoaParams unflatten(std::span<const double> x);

    friend bool operator==(const QaoaParams &, const QaoaParams &) = default;

private:
    std::vector<double> alphas_;
    std::vector<double> betas_;
};

enum class MixerKind { Transverse, Grover };

struct MixerSpec {
    MixerKind kind = MixerKind::Transverse;
    double q = 0.5; ///< only meaningful for Grover

    static MixerSpec transverse() { return {MixerKind::Transverse, 0.5}; }
    /// Throws unless q lies in (0, 1).
    static MixerSpec grover(double q);
};

const char *to_string(MixerKind kind) noexcept;

/// |+>^n for the transverse mixer, |G(q)> for the Grover mixer.
StateVector mixer_initial_state(std::size_t num_qubits, const MixerSpec &mixer);

/// Prepares the mixer's initial state, then for each round applies the phase
/// separator with alpha_i followed by the mixer with beta_i.
StateVector run_qaoa(const DiagonalHamiltonian &h, const MixerSpec &mixer,
                     const QaoaParams &params);

double expectation_energy(const StateVector &s, const DiagonalHamiltonian &h);
double ground_state_probability(const StateVector &s, const DiagonalHamiltonian &h);
/// Probabilities of the ground states in ground_set() order.
std::vector<double> ground_state_probabilities(const StateVector &s,
                                               const DiagonalHamiltonian &h);

struct OptimizerConfig {
    std::size_t starts = 50;
    NelderMeadOptions simplex{};
    /// Extra starting points (flattened), tried before the random ones.
    std::vector<std::vector<double>> warm_starts;
};

struct OptimizeResult {
    QaoaParams params;
    double expectation = 0.0;
    double ground_probability = 0.0;
    std::size_t best_start = 0;
    std::size_t converged_starts = 0;
};

inline constexpr std::size_t kMaxOptimizeRounds = 4;

/// Multi-start Nelder-Mead on the expected energy. Random starts are uniform
/// in [-pi, pi]^{2p}, drawn from stream (seed, start index). Ties resolve to
/// the lowest start index.
OptimizeResult optimize_parameters(const DiagonalHamiltonian &h,
                                   const MixerSpec &mixer, std::size_t rounds,
                                   const OptimizerConfig &config,
                                   std::uint64_t seed);

/// The three published parameter tables.
enum class ParameterFamily { StandardQaoa, GroverUnweighted, GroverWeighted };

const char *to_string(ParameterFamily family) noexcept;

/// Published angles, verbatim. Only edge-cover entries on the triangle,
/// square and paw graphs are available.
QaoaParams paper_parameters(std::string_view graph, ProblemKind kind,
                            ParameterFamily family, std::size_t rounds);

/// q used with the weighted parameter table (paw 0.7, square 0.75).
double paper_weight_q(std::string_view graph);

/// Signs applied to published angles before simulation.
struct SignConvention {
    double alpha_sign = 1.0;
    double beta_sign = 1.0;
};

/// Standard-mixer angles are used verbatim; Grover-mixer angles are used with
/// beta negated, which matches the published probabilities for e^{-i beta H_B}.
SignConvention paper_sign_convention(MixerKind kind) noexcept;

QaoaParams apply_convention(const QaoaParams &params, SignConvention convention);

} // namespace gqaoa
