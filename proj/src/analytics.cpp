#include "gqaoa/analytics.hpp"

#include "gqaoa/error.hpp"
#include "gqaoa/random.hpp"

#include <boost/random/binomial_distribution.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace gqaoa {

namespace {

constexpr double kSumTolerance = 1e-10;

/// Counts of `shots` categorical draws via conditional binomials.
std::vector<std::uint64_t> multinomial(std::span<const double> p,
                                       std::uint64_t shots, Rng &rng) {
    if (shots > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
        fail(ErrorKind::Domain, "sample size exceeds 2^31 - 1");
    }
    std::vector<std::uint64_t> counts(p.size(), 0);
    std::uint64_t remaining = shots;
    double mass = 1.0;
    for (std::size_t k = 0; k + 1 < p.size() && remaining > 0; ++k) {
        if (p[k] <= 0.0) {
            mass -= p[k];
            continue;
        }
        const double frac = mass > 0.0 ? p[k] / mass : 1.0;
        std::uint64_t c = 0;
        if (frac >= 1.0) {
            c = remaining;
        } else {
            boost::random::binomial_distribution<int, double> binom(
                static_cast<int>(remaining), frac);
            c = static_cast<std::uint64_t>(binom(rng));
        }
        counts[k] = c;
        remaining -= c;
        mass -= p[k];
    }
    if (!p.empty()) {
        counts.back() += remaining;
    }
    return counts;
}

double sample_std(std::span<const double> xs, double mean) {
    if (xs.size() < 2) {
        return 0.0;
    }
    double acc = 0.0;
    for (double x : xs) {
        acc += (x - mean) * (x - mean);
    }
    return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

double mean_of(std::span<const double> xs) {
    if (xs.empty()) {
        return 0.0;
    }
    double acc = 0.0;
    for (double x : xs) {
        acc += x;
    }
    return acc / static_cast<double>(xs.size());
}

std::vector<std::size_t> ground_positions(const Distribution &d,
                                          std::span<const BasisIndex> ground) {
    require(!ground.empty(), "ground set is empty");
    std::vector<std::size_t> pos;
    pos.reserve(ground.size());
    for (BasisIndex g : ground) {
        pos.push_back(d.position(g));
    }
    return pos;
}

void check_reachable(const Distribution &d, std::span<const std::size_t> pos,
                     std::size_t n_ground) {
    require(n_ground >= 1, "n_g must be at least 1");
    if (n_ground > pos.size()) {
        fail(ErrorKind::Domain, "n_g = " + std::to_string(n_ground) +
                                    " exceeds the " + std::to_string(pos.size()) +
                                    " ground states");
    }
    const auto positive = std::count_if(pos.begin(), pos.end(),
                                        [&](std::size_t k) { return d[k] > 0.0; });
    if (static_cast<std::size_t>(positive) < n_ground) {
        fail(ErrorKind::Domain, "only " + std::to_string(positive) +
                                    " ground states have nonzero probability; "
                                    "n_g = " + std::to_string(n_ground) +
                                    " is never reached");
    }
}

/// Upper incomplete gamma by Lentz's continued fraction, valid for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

/// Lower incomplete gamma by its power series, valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < 10000; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

Distribution::Distribution(std::vector<double> probabilities,
                           std::vector<BasisIndex> labels)
    : probs_(std::move(probabilities)), labels_(std::move(labels)) {
    require(!probs_.empty(), "distribution has no outcomes");
    if (labels_.empty()) {
        labels_.resize(probs_.size());
        std::iota(labels_.begin(), labels_.end(), BasisIndex{0});
    }
    require(labels_.size() == probs_.size(),
            "distribution label count does not match probability count");
    double total = 0.0;
    for (double p : probs_) {
        require(std::isfinite(p) && p >= 0.0, "probabilities must be non-negative");
        total += p;
    }
    require(std::abs(total - 1.0) <= kSumTolerance,
            "probabilities must sum to 1 within 1e-10");
}

Distribution Distribution::from_state(const StateVector &s) {
    std::vector<double> p = measure_distribution(s);
    // absorb rounding so the sum check holds exactly as stated
    double total = 0.0;
    for (double v : p) {
        total += v;
    }
    for (double &v : p) {
        v /= total;
    }
    return Distribution(std::move(p));
}

std::size_t Distribution::position(BasisIndex label) const {
    // labels are usually 0..k-1
    if (label < labels_.size() && labels_[label] == label) {
        return static_cast<std::size_t>(label);
    }
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        fail(ErrorKind::InvalidArgument,
             "outcome " + std::to_string(label) + " is not in the distribution");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

SampleSet sample(const Distribution &d, std::uint64_t shots, std::uint64_t seed) {
    require(shots >= 1, "need at least one shot");
    Rng rng = make_stream(seed, {});
    SampleSet out;
    out.seed = seed;
    out.shots = shots;
    out.labels.assign(d.labels().begin(), d.labels().end());
    out.counts = multinomial(d.probabilities(), shots, rng);
    return out;
}

Distribution postselect_ground(const SampleSet &s, std::span<const BasisIndex> ground) {
    require(!ground.empty(), "ground set is empty");
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    for (BasisIndex g : ground) {
        auto it = std::find(s.labels.begin(), s.labels.end(), g);
        require(it != s.labels.end(),
                "ground state " + std::to_string(g) + " is not a sampled outcome");
        counts.push_back(s.counts[static_cast<std::size_t>(it - s.labels.begin())]);
        total += counts.back();
    }
    if (total == 0) {
        fail(ErrorKind::Domain, "no ground state observed in " +
                                    std::to_string(s.shots) + " shots");
    }
    std::vector<double> p;
    p.reserve(counts.size());
    for (std::uint64_t c : counts) {
        p.push_back(static_cast<double>(c) / static_cast<double>(total));
    }
    // exact fractions can still miss 1 by an ulp or two
    double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (double &v : p) {
        v /= sum;
    }
    return Distribution(std::move(p), std::vector<BasisIndex>(ground.begin(), ground.end()));
}

DrawStatistics expected_draws_mc(const Distribution &d,
                                 std::span<const BasisIndex> ground,
                                 std::size_t n_ground, std::size_t trials,
                                 std::uint64_t seed) {
    const auto pos = ground_positions(d, ground);
    check_reachable(d, pos, n_ground);
    require(trials >= 1, "need at least one trial");

    std::vector<double> cumulative(pos.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < pos.size(); ++k) {
        acc += d[pos[k]];
        cumulative[k] = acc;
    }

    std::vector<double> draws(trials);
    std::vector<char> seen(pos.size());
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = make_stream(seed, {t});
        std::fill(seen.begin(), seen.end(), 0);
        std::size_t distinct = 0;
        std::uint64_t count = 0;
        while (distinct < n_ground) {
            ++count;
            const double u = uniform01(rng);
            if (u >= acc) {
                continue; // non-ground outcome
            }
            const auto k = static_cast<std::size_t>(
                std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                cumulative.begin());
            if (!seen[k]) {
                seen[k] = 1;
                ++distinct;
            }
        }
        draws[t] = static_cast<double>(count);
    }
    DrawStatistics stats;
    stats.mean = mean_of(draws);
    stats.standard_error =
        sample_std(draws, stats.mean) / std::sqrt(static_cast<double>(trials));
    return stats;
}

double expected_draws_exact(const Distribution &d,
                            std::span<const BasisIndex> ground,
                            std::size_t n_ground) {
    const auto pos = ground_positions(d, ground);
    if (pos.size() > kMaxExactGround) {
        fail(ErrorKind::Domain, "exact draw count supports at most " +
                                    std::to_string(kMaxExactGround) +
                                    " ground states");
    }
    check_reachable(d, pos, n_ground);

    const std::size_t k = pos.size();
    std::vector<double> p(k);
    for (std::size_t i = 0; i < k; ++i) {
        p[i] = d[pos[i]];
    }
    // visit[S]: probability that the collected set ever equals S. Adding an
    // element only increases the mask, so index order is a topological order.
    std::vector<double> visit(std::size_t{1} << k, 0.0);
    visit[0] = 1.0;
    double expected = 0.0;
    for (std::size_t s = 0; s < visit.size(); ++s) {
        if (visit[s] == 0.0 ||
            static_cast<std::size_t>(std::popcount(s)) >= n_ground) {
            continue;
        }
        double leave = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(s >> i & 1U)) {
                leave += p[i];
            }
        }
        expected += visit[s] / leave; // geometric holding time in S
        for (std::size_t i = 0; i < k; ++i) {
            if (!(s >> i & 1U)) {
                visit[s | (std::size_t{1} << i)] += visit[s] * p[i] / leave;
            }
        }
    }
    return expected;
}

double regularized_gamma_q(double a, double x) {
    require(a > 0.0, "incomplete gamma needs a > 0");
    require(x >= 0.0, "incomplete gamma needs x >= 0");
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_continued_fraction(a, x);
}

double chi2_upper_tail(double statistic, double dof) {
    require(dof > 0.0, "chi-squared needs positive degrees of freedom");
    if (statistic <= 0.0) {
        return 1.0;
    }
    return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

ChiSquaredTest chi2_test(std::span<const std::uint64_t> observed,
                         const Distribution &expected) {
    require(observed.size() == expected.size(),
            "observed counts and expected distribution differ in size");
    std::uint64_t total = 0;
    for (auto c : observed) {
        total += c;
    }
    require(total >= 1, "chi-squared test needs at least one count");
    const double m = static_cast<double>(total);
    ChiSquaredTest t;
    std::size_t outcomes = 0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        const double e = m * expected[k];
        if (expected[k] <= 0.0) {
            if (observed[k] > 0) {
                fail(ErrorKind::Domain,
                     "outcome " + std::to_string(expected.labels()[k]) +
                         " observed but has zero expected probability");
            }
            continue;
        }
        ++outcomes;
        const double diff = static_cast<double>(observed[k]) - e;
        t.statistic += diff * diff / e;
    }
    if (outcomes < 2) {
        t.dof = 0;
        t.p_value = 1.0;
        return t;
    }
    t.dof = outcomes - 1;
    t.p_value = chi2_upper_tail(t.statistic, static_cast<double>(t.dof));
    return t;
}

double chi2_pvalue(std::span<const std::uint64_t> observed,
                   const Distribution &expected) {
    return chi2_test(observed, expected).p_value;
}

double median_pvalue(const Distribution &q1, const Distribution &q2,
                     std::uint64_t m, std::size_t sets, std::uint64_t seed) {
    require(sets >= 1, "need at least one resampled set");
    std::vector<double> p(sets);
    for (std::size_t s = 0; s < sets; ++s) {
        Rng rng = make_stream(seed, {m, s});
        const auto counts = multinomial(q1.probabilities(), m, rng);
        p[s] = chi2_pvalue(counts, q2);
    }
    std::sort(p.begin(), p.end());
    const std::size_t mid = sets / 2;
    return sets % 2 == 1 ? p[mid] : 0.5 * (p[mid - 1] + p[mid]);
}

std::uint64_t shots_to_reject(const Distribution &q1, const Distribution &q2,
                              const ShotsToRejectConfig &config,
                              std::uint64_t seed) {
    require(q1.size() == q2.size(), "Q1 and Q2 must share the outcome set");
    for (std::size_t k = 0; k < q1.size(); ++k) {
        require(q1.labels()[k] == q2.labels()[k],
                "Q1 and Q2 must list outcomes in the same order");
        require(q2[k] > 0.0, "Q2 must be strictly positive");
    }
    require(config.significance > 0.0 && config.significance < 1.0,
            "significance must lie in (0, 1)");
    require(config.cap >= 2, "cap must be at least 2");

    auto rejects = [&](std::uint64_t m) {
        return median_pvalue(q1, q2, m, config.sets, seed) < config.significance;
    };
    std::uint64_t m = 2;
    while (!rejects(m)) {
        if (m > config.cap / 2) {
            fail(ErrorKind::CapExceeded,
                 "null hypothesis not rejected up to M = " + std::to_string(m) +
                     " (cap " + std::to_string(config.cap) + ")");
        }
        m *= 2;
    }
    if (m == 2) {
        return m;
    }
    std::uint64_t lo = m / 2;
    std::uint64_t hi = m;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (rejects(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

double kl_divergence(const Distribution &q1, const Distribution &q2) {
    require(q1.size() == q2.size(), "KL divergence needs equal outcome sets");
    double acc = 0.0;
    for (std::size_t k = 0; k < q1.size(); ++k) {
        if (q1[k] == 0.0) {
            continue;
        }
        if (q2[k] <= 0.0) {
            fail(ErrorKind::Domain,
                 "Q2 vanishes on outcome " + std::to_string(q1.labels()[k]) +
                     " where Q1 is positive");
        }
        acc += q1[k] * std::log(q1[k] / q2[k]);
    }
    return std::max(acc, 0.0);
}

FairnessDeviation fairness_deviation(const StateVector &s,
                                     const DiagonalHamiltonian &h,
                                     const WeightTable &w) {
    require(s.dimension() == h.dimension(), "state/Hamiltonian dimension mismatch");
    require(w.weights().size() == h.dimension(),
            "weight table does not match the Hamiltonian");
    const auto &ground = h.ground_set();
    require(!ground.empty(), "ground set is empty");
    // max over pairs of |r_x / r_y - 1| with r = P / w is r_max / r_min - 1
    double r_min = std::numeric_limits<double>::infinity();
    double r_max = 0.0;
    for (BasisIndex x : ground) {
        const double p = std::norm(s[x]);
        if (p == 0.0) {
            return {std::numeric_limits<double>::infinity(), false};
        }
        const double r = p / w(x);
        r_min = std::min(r_min, r);
        r_max = std::max(r_max, r);
    }
    return {r_max / r_min - 1.0, true};
}

FairnessReport synthetic_fairness(const Distribution &full,
                                  std::span<const BasisIndex> ground,
                                  std::span<const double> ideal,
                                  const FairnessConfig &config,
                                  std::uint64_t seed) {
    require(ground.size() == ideal.size(), "ideal distribution does not match ground set");
    require(config.repeats >= 1, "need at least one repeat");
    FairnessReport report;
    report.ground.assign(ground.begin(), ground.end());
    report.ideal.assign(ideal.begin(), ideal.end());
    const Distribution q2(report.ideal, report.ground);

    auto draw_q1 = [&](std::uint64_t stream) {
        if (config.ideal_q1) {
            return q2;
        }
        return postselect_ground(sample(full, config.shots, stream), ground);
    };

    std::vector<double> n_star;
    for (std::size_t r = 0; r < config.repeats; ++r) {
        const Distribution q1 = draw_q1(stream_key(seed, {1, r}));
        if (r == 0) {
            report.sampled.assign(q1.probabilities().begin(), q1.probabilities().end());
        }
        try {
            const auto ns = shots_to_reject(q1, q2, config.reject,
                                            stream_key(seed, {2, r}));
            report.n_star_runs.push_back(ns);
            n_star.push_back(static_cast<double>(ns));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::CapExceeded) {
                throw;
            }
            ++report.capped_runs;
        }
    }
    report.n_star_mean = mean_of(n_star);
    report.n_star_std = sample_std(n_star, report.n_star_mean);

    std::vector<double> kl;
    kl.reserve(config.kl_resamples);
    for (std::size_t i = 0; i < config.kl_resamples; ++i) {
        kl.push_back(kl_divergence(draw_q1(stream_key(seed, {3, i})), q2));
    }
    report.kl_mean = mean_of(kl);
    report.kl_std = sample_std(kl, report.kl_mean);
    return report;
}

} // namespace gqaoa
