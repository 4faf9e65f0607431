#include "gqaoa/qaoa.hpp"

#include "gqaoa/error.hpp"
#include "gqaoa/random.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gqaoa {

QaoaParams::QaoaParams(std::vector<double> alphas, std::vector<double> betas)
    : alphas_(std::move(alphas)), betas_(std::move(betas)) {
    require(!alphas_.empty(), "QAOA needs at least one round");
    require(alphas_.size() == betas_.size(),
            "alpha and beta lists must have the same length");
    for (std::size_t k = 0; k < alphas_.size(); ++k) {
        require(std::isfinite(alphas_[k]) && std::isfinite(betas_[k]),
                "QAOA angles must be finite");
    }
}

std::vector<double> QaoaParams::flatten() const {
    std::vector<double> x;
    x.reserve(2 * rounds());
    for (std::size_t k = 0; k < rounds(); ++k) {
        x.push_back(alphas_[k]);
        x.push_back(betas_[k]);
    }
    return x;
}

QaoaParams QaoaParams::unflatten(std::span<const double> x) {
    require(x.size() % 2 == 0, "flattened parameters need an even length");
    std::vector<double> a;
    std::vector<double> b;
    for (std::size_t k = 0; k < x.size(); k += 2) {
        a.push_back(x[k]);
        b.push_back(x[k + 1]);
    }
    return QaoaParams(std::move(a), std::move(b));
}

MixerSpec MixerSpec::grover(double q) {
    if (!(q > 0.0 && q < 1.0)) {
        fail(ErrorKind::InvalidArgument,
             "Grover mixer q must lie in the open interval (0, 1)");
    }
    return {MixerKind::Grover, q};
}

const char *to_string(MixerKind kind) noexcept {
    return kind == MixerKind::Transverse ? "transverse" : "grover";
}

StateVector mixer_initial_state(std::size_t num_qubits, const MixerSpec &mixer) {
    return prepare_initial_state(num_qubits,
                                 mixer.kind == MixerKind::Grover ? mixer.q : 0.5);
}

StateVector run_qaoa(const DiagonalHamiltonian &h, const MixerSpec &mixer,
                     const QaoaParams &params) {
    StateVector s = mixer_initial_state(h.num_qubits(), mixer);
    for (std::size_t k = 0; k < params.rounds(); ++k) {
        apply_phase_separator(s, h, params.alphas()[k]);
        if (mixer.kind == MixerKind::Grover) {
            apply_grover_mixer(s, mixer.q, params.betas()[k]);
        } else {
            apply_transverse_mixer(s, params.betas()[k]);
        }
    }
    return s;
}

double expectation_energy(const StateVector &s, const DiagonalHamiltonian &h) {
    require(s.dimension() == h.dimension(), "state/Hamiltonian dimension mismatch");
    auto amps = s.amplitudes();
    auto e = h.energies();
    double acc = 0.0;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        acc += std::norm(amps[x]) * e[x];
    }
    return acc;
}

std::vector<double> ground_state_probabilities(const StateVector &s,
                                               const DiagonalHamiltonian &h) {
    require(s.dimension() == h.dimension(), "state/Hamiltonian dimension mismatch");
    std::vector<double> p;
    p.reserve(h.ground_set().size());
    for (BasisIndex x : h.ground_set()) {
        p.push_back(std::norm(s[x]));
    }
    return p;
}

double ground_state_probability(const StateVector &s, const DiagonalHamiltonian &h) {
    double acc = 0.0;
    for (double p : ground_state_probabilities(s, h)) {
        acc += p;
    }
    return acc;
}

OptimizeResult optimize_parameters(const DiagonalHamiltonian &h,
                                   const MixerSpec &mixer, std::size_t rounds,
                                   const OptimizerConfig &config,
                                   std::uint64_t seed) {
    require(rounds >= 1, "optimization needs at least one round");
    if (rounds > kMaxOptimizeRounds) {
        fail(ErrorKind::Domain, "optimization supports at most " +
                                    std::to_string(kMaxOptimizeRounds) +
                                    " rounds, got " + std::to_string(rounds));
    }
    require(config.starts + config.warm_starts.size() >= 1,
            "optimizer needs at least one start");
    const std::size_t dim = 2 * rounds;
    auto objective = [&](std::span<const double> x) {
        return expectation_energy(run_qaoa(h, mixer, QaoaParams::unflatten(x)), h);
    };

    std::vector<std::vector<double>> starts = config.warm_starts;
    for (const auto &w : starts) {
        require(w.size() == dim, "warm start has the wrong number of angles");
    }
    for (std::size_t k = 0; k < config.starts; ++k) {
        Rng rng = make_stream(seed, {k});
        std::vector<double> x(dim);
        for (double &v : x) {
            v = std::numbers::pi * (2.0 * uniform01(rng) - 1.0);
        }
        starts.push_back(std::move(x));
    }

    OptimizeResult best;
    bool have_best = false;
    double best_value = 0.0;
    for (std::size_t k = 0; k < starts.size(); ++k) {
        NelderMeadResult r = nelder_mead(objective, starts[k], config.simplex);
        best.converged_starts += r.converged;
        if (!have_best || r.value < best_value) {
            have_best = true;
            best_value = r.value;
            best.params = QaoaParams::unflatten(r.x);
            best.best_start = k;
        }
    }
    const StateVector s = run_qaoa(h, mixer, best.params);
    best.expectation = expectation_energy(s, h);
    best.ground_probability = ground_state_probability(s, h);
    return best;
}

const char *to_string(ParameterFamily family) noexcept {
    switch (family) {
    case ParameterFamily::StandardQaoa:
        return "standard";
    case ParameterFamily::GroverUnweighted:
        return "grover-unweighted";
    case ParameterFamily::GroverWeighted:
        return "grover-weighted";
    }
    return "unknown";
}

namespace {

struct PublishedEntry {
    const char *graph;
    ParameterFamily family;
    std::vector<double> alphas;
    std::vector<double> betas;
};

const std::vector<PublishedEntry> &published_table() {
    using F = ParameterFamily;
    static const std::vector<PublishedEntry> table = {
        {"triangle", F::StandardQaoa, {-0.95}, {1.00}},
        {"triangle", F::StandardQaoa, {-0.83, 0.85}, {3.14, -1.66}},
        {"square", F::StandardQaoa, {-0.87}, {-2.60}},
        {"square", F::StandardQaoa, {0.80, -0.82}, {-1.58, -2.28}},
        {"paw", F::StandardQaoa, {1.04}, {-0.61}},
        {"paw", F::StandardQaoa, {0.62, 0.88}, {0.75, -1.04}},
        {"paw", F::StandardQaoa, {0.5, -0.5, -0.5}, {1.6, 0.5, 0.3}},

        {"triangle", F::GroverUnweighted, {2.48}, {1.37}},
        {"triangle", F::GroverUnweighted, {0.69, 1.22}, {1.32, 0.92}},
        {"square", F::GroverUnweighted, {0.65}, {1.46}},
        {"square", F::GroverUnweighted, {0.48, 0.91}, {1.52, 0.92}},
        {"paw", F::GroverUnweighted, {0.79}, {1.60}},
        {"paw", F::GroverUnweighted, {0.56, 0.98}, {1.47, 1.17}},

        {"square", F::GroverWeighted, {2.67}, {-2.30}},
        {"square", F::GroverWeighted, {0.68, 1.05}, {2.20, 1.95}},
        {"paw", F::GroverWeighted, {-2.85}, {2.81}},
        {"paw", F::GroverWeighted, {2.05, 1.98}, {2.80, 2.98}},
    };
    return table;
}

} // namespace

QaoaParams paper_parameters(std::string_view graph, ProblemKind kind,
                            ParameterFamily family, std::size_t rounds) {
    if (kind == ProblemKind::EdgeCover) {
        for (const auto &e : published_table()) {
            if (graph == e.graph && e.family == family && e.alphas.size() == rounds) {
                return QaoaParams(e.alphas, e.betas);
            }
        }
    }
    std::string available;
    for (const auto &e : published_table()) {
        available += (available.empty() ? "" : ", ");
        available += std::string(e.graph) + "/" + to_string(e.family) +
                     "/p=" + std::to_string(e.alphas.size());
    }
    fail(ErrorKind::InvalidArgument,
         "no published parameters for " + std::string(graph) + "/" +
             to_string(kind) + "/" + to_string(family) +
             "/p=" + std::to_string(rounds) +
             " (edge cover only; available: " + available + ")");
}

double paper_weight_q(std::string_view graph) {
    if (graph == "paw") {
        return 0.7;
    }
    if (graph == "square") {
        return 0.75;
    }
    fail(ErrorKind::InvalidArgument,
         "no published weight for graph '" + std::string(graph) +
             "' (available: paw, square)");
}

SignConvention paper_sign_convention(MixerKind kind) noexcept {
    return kind == MixerKind::Grover ? SignConvention{1.0, -1.0}
                                     : SignConvention{1.0, 1.0};
}

QaoaParams apply_convention(const QaoaParams &params, SignConvention convention) {
    std::vector<double> a = params.alphas();
    std::vector<double> b = params.betas();
    for (double &v : a) {
        v *= convention.alpha_sign;
    }
    for (double &v : b) {
        v *= convention.beta_sign;
    }
    return QaoaParams(std::move(a), std::move(b));
}

} // namespace gqaoa
