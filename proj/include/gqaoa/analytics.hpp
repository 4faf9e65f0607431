#pragma once

#include "gqaoa/problems.hpp"
#include "gqaoa/statevector.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gqaoa {

/// Probability table over labelled outcomes (basis indices).
class Distribution {
public:
    Distribution() = default;
    /// Labels default to 0..k-1. Throws on negative entries, a sum off one by
    /// more than 1e-10, or a label list of the wrong length.
    explicit Distribution(std::vector<double> probabilities,
                          std::vector<BasisIndex> labels = {});

    /// Measurement distribution of a state, labelled by basis index.
    static Distribution from_state(const StateVector &s);

    std::size_t size() const noexcept { return probs_.size(); }
    std::span<const double> probabilities() const noexcept { return probs_; }
    std::span<const BasisIndex> labels() const noexcept { return labels_; }
    double operator[](std::size_t k) const { return probs_[k]; }

    /// Position of `label`; throws if absent.
    std::size_t position(BasisIndex label) const;

private:
    std::vector<double> probs_;
    std::vector<BasisIndex> labels_;
};

struct SampleSet {
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::vector<BasisIndex> labels;
    std::vector<std::uint64_t> counts; ///< aligned with labels
};

/// `shots` independent categorical draws. Counts come from a chain of
/// conditional binomial draws over the outcomes in order, fed by the
/// (seed) stream of random.hpp.
SampleSet sample(const Distribution &d, std::uint64_t shots, std::uint64_t seed);

/// Counts restricted to `ground` (in that order) and renormalized.
Distribution postselect_ground(const SampleSet &s, std::span<const BasisIndex> ground);

struct DrawStatistics {
    double mean = 0.0;
    double standard_error = 0.0;
};

/// Monte Carlo estimate of the number of draws from `d` needed to see
/// `n_ground` distinct members of `ground`. Trial t uses stream (seed, t).
DrawStatistics expected_draws_mc(const Distribution &d,
                                 std::span<const BasisIndex> ground,
                                 std::size_t n_ground, std::size_t trials,
                                 std::uint64_t seed);

inline constexpr std::size_t kMaxExactGround = 16;

/// Same expectation computed exactly over the chain of collected subsets.
double expected_draws_exact(const Distribution &d,
                            std::span<const BasisIndex> ground,
                            std::size_t n_ground);

/// Regularized upper incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

/// P(X >= statistic) for X ~ chi-squared with `dof` degrees of freedom.
double chi2_upper_tail(double statistic, double dof);

struct ChiSquaredTest {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
};

/// Pearson goodness of fit of `observed` counts against `expected`, with
/// dof = (outcomes with positive expectation) - 1.
ChiSquaredTest chi2_test(std::span<const std::uint64_t> observed,
                         const Distribution &expected);

double chi2_pvalue(std::span<const std::uint64_t> observed,
                   const Distribution &expected);

struct ShotsToRejectConfig {
    double significance = 0.05;
    std::size_t sets = 1000;
    std::uint64_t cap = std::uint64_t{1} << 26;
};

/// Median chi-squared p-value over `sets` samples of size m drawn from q1.
/// Set s uses stream (seed, m, s).
double median_pvalue(const Distribution &q1, const Distribution &q2,
                     std::uint64_t m, std::size_t sets, std::uint64_t seed);

/// Smallest sample size m at which the median p-value drops below the
/// significance level: doubling from m = 2, then bisection. Throws
/// ErrorKind::CapExceeded once m would pass config.cap.
std::uint64_t shots_to_reject(const Distribution &q1, const Distribution &q2,
                              const ShotsToRejectConfig &config,
                              std::uint64_t seed);

/// sum q1 ln(q1 / q2) in nats, with 0 ln 0 = 0.
double kl_divergence(const Distribution &q1, const Distribution &q2);

struct FairnessDeviation {
    double value = 0.0;
    bool defined = true; ///< false when some ground state has zero probability
};

/// max over ground pairs (x, y) of |(P(x)/P(y)) / (w(x)/w(y)) - 1|.
FairnessDeviation fairness_deviation(const StateVector &s,
                                     const DiagonalHamiltonian &h,
                                     const WeightTable &w);

struct FairnessConfig {
    std::uint64_t shots = 4000;
    std::size_t repeats = 10;
    std::size_t kl_resamples = 300;
    ShotsToRejectConfig reject{};
    /// Use the ideal distribution itself as Q1 (no sampling noise); the
    /// shots-to-reject search then runs into the cap.
    bool ideal_q1 = false;
};

struct FairnessReport {
    std::vector<BasisIndex> ground;
    std::vector<double> ideal;   ///< Q2
    std::vector<double> sampled; ///< Q1 of the first repeat
    std::vector<std::uint64_t> n_star_runs; ///< one per uncapped repeat
    std::size_t capped_runs = 0;
    double n_star_mean = 0.0;
    double n_star_std = 0.0;
    double kl_mean = 0.0;
    double kl_std = 0.0;
};

/**
 * Synthetic-data fairness study: each repeat draws `shots` outcomes from the
 * full distribution, post-selects the ground states into Q1 and runs the
 * shots-to-reject test against `ideal`; KL is averaged over kl_resamples
 * independent draws. Errors are sample standard deviations.
 */
FairnessReport synthetic_fairness(const Distribution &full,
                                  std::span<const BasisIndex> ground,
                                  std::span<const double> ideal,
                                  const FairnessConfig &config,
                                  std::uint64_t seed);

} // namespace gqaoa
