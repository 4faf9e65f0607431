// gqaoa command-line driver. Talks to the library only through gqaoa.h.

#include "gqaoa/gqaoa.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kDomain = 3, kCap = 4 };

struct CliError {
    int code;
    std::string message;
};

int exit_code_of(gqaoa_status s) {
    switch (s) {
    case GQAOA_OK:
        return kOk;
    case GQAOA_INVALID_ARGUMENT:
    case GQAOA_PARSE_ERROR:
        return kUsage;
    case GQAOA_DOMAIN_ERROR:
    case GQAOA_UNSUPPORTED:
        return kDomain;
    case GQAOA_CAP_EXCEEDED:
        return kCap;
    default:
        return kInternal;
    }
}

void check(gqaoa_status s) {
    if (s != GQAOA_OK) {
        throw CliError{exit_code_of(s), gqaoa_last_error()};
    }
}

[[noreturn]] void usage_error(const std::string &what) { throw CliError{kUsage, what}; }

template <class T, void (*Free)(T *)>
struct Handle {
    T *ptr = nullptr;
    Handle() = default;
    Handle(const Handle &) = delete;
    Handle &operator=(const Handle &) = delete;
    ~Handle() { Free(ptr); }
    T **out() { return &ptr; }
    T *get() const { return ptr; }
};

using GraphHandle = Handle<gqaoa_graph, gqaoa_graph_free>;
using HamiltonianHandle = Handle<gqaoa_hamiltonian, gqaoa_hamiltonian_free>;
using StateHandle = Handle<gqaoa_state, gqaoa_state_free>;
using SequenceHandle = Handle<gqaoa_sequence, gqaoa_sequence_free>;
using ReportHandle = Handle<gqaoa_fairness_report, gqaoa_fairness_report_free>;

std::string take_string(char *s) {
    std::string out(s);
    gqaoa_string_free(s);
    return out;
}

template <class T, class Fn>
std::vector<T> fetch_array(Fn &&fn) {
    size_t len = 0;
    check(fn(static_cast<T *>(nullptr), &len));
    std::vector<T> out(len);
    check(fn(out.data(), &len));
    return out;
}

std::string fnv1a_hex(const std::string &bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Basis index as a bit string with qubit 0 first.
std::string bits_of(std::uint64_t x, size_t n) {
    std::string s(n, '0');
    for (size_t i = 0; i < n; ++i) {
        if (x >> i & 1U) {
            s[i] = '1';
        }
    }
    return s;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        usage_error("cannot read graph file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes to `path`, or to the first free `path.N` if it exists already.
std::string write_versioned(const std::string &path, const std::string &content) {
    namespace fs = std::filesystem;
    std::string target = path;
    for (int n = 1; fs::exists(target); ++n) {
        target = path + "." + std::to_string(n);
    }
    std::ofstream out(target, std::ios::binary);
    out << content;
    if (!out) {
        throw CliError{kInternal, "cannot write '" + target + "'"};
    }
    return target;
}

struct Options {
    std::string graph;
    std::string problem = "edgecover";
    std::string mixer = "transverse";
    std::optional<double> q;
    size_t p = 1;
    std::string params;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::string out;
    std::string csv;
};

struct Problem {
    GraphHandle graph;
    HamiltonianHandle h;
    std::string name;  ///< preset name, empty for files
    json identity;
    gqaoa_problem kind = GQAOA_EDGECOVER;
    gqaoa_mixer mixer = GQAOA_TRANSVERSE;
    double q = 0.5;    ///< effective mixer/weight parameter
    size_t qubits = 0;
    std::vector<std::uint64_t> ground;
};

void add_problem_flags(CLI::App *cmd, Options &o, bool with_mixer) {
    cmd->add_option("--graph", o.graph, "preset name or graph file")->required();
    cmd->add_option("--problem", o.problem, "maxcut or edgecover")
        ->check(CLI::IsMember({"maxcut", "edgecover"}));
    if (with_mixer) {
        cmd->add_option("--mixer", o.mixer, "transverse or grover")
            ->check(CLI::IsMember({"transverse", "grover"}));
        cmd->add_option("--q", o.q, "Grover weight parameter in (0, 1)");
    }
}

void load_problem(const Options &o, Problem &pr) {
    if (o.problem == "maxcut") {
        pr.kind = GQAOA_MAXCUT;
    }
    pr.mixer = o.mixer == "grover" ? GQAOA_GROVER : GQAOA_TRANSVERSE;

    const std::string presets = std::string(",") + gqaoa_preset_names() + ",";
    if (presets.find("," + o.graph + ",") != std::string::npos) {
        check(gqaoa_graph_preset(o.graph.c_str(), pr.graph.out()));
        pr.name = o.graph;
        pr.identity = {{"preset", o.graph}};
    } else {
        if (!std::filesystem::exists(o.graph)) {
            usage_error("'" + o.graph + "' is neither a preset (" + gqaoa_preset_names() +
                        ") nor a readable file");
        }
        const std::string text = read_file(o.graph);
        check(gqaoa_graph_parse(text.c_str(), pr.graph.out()));
        pr.identity = {{"fnv1a", fnv1a_hex(text)}};
    }
    pr.identity["vertices"] = gqaoa_graph_num_vertices(pr.graph.get());
    pr.identity["edges"] = gqaoa_graph_num_edges(pr.graph.get());

    int has_q = 0;
    double graph_q = 0.0;
    check(gqaoa_graph_weight(pr.graph.get(), &has_q, &graph_q));
    if (o.q && pr.mixer == GQAOA_TRANSVERSE) {
        usage_error("--q only applies to the grover mixer");
    }
    if (o.q) {
        if (!(*o.q > 0.0 && *o.q < 1.0)) {
            usage_error("--q must lie in the open interval (0, 1)");
        }
        pr.q = *o.q;
    } else if (has_q && pr.mixer == GQAOA_GROVER) {
        pr.q = graph_q;
    }
    check(gqaoa_hamiltonian_build(pr.graph.get(), pr.kind, pr.h.out()));
    pr.qubits = gqaoa_hamiltonian_num_qubits(pr.h.get());
    pr.ground = fetch_array<std::uint64_t>([&](std::uint64_t *out, size_t *len) {
        return gqaoa_hamiltonian_ground_set(pr.h.get(), out, len);
    });
}

struct Angles {
    std::vector<double> alphas;
    std::vector<double> betas;
    std::string source;
};

std::vector<double> parse_reals(const std::string &text, const char *flag) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(field, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != field.size() || !std::isfinite(x)) {
            usage_error(std::string(flag) + ": '" + field + "' is not a real number");
        }
        v.push_back(x);
    }
    return v;
}

Angles resolve_angles(const Options &o, const Problem &pr) {
    Angles a;
    a.alphas.resize(o.p);
    a.betas.resize(o.p);
    if (o.params == "paper") {
        if (pr.name.empty()) {
            usage_error("--params paper needs a preset graph");
        }
        gqaoa_family family = GQAOA_STANDARD;
        if (pr.mixer == GQAOA_GROVER) {
            family = pr.q == 0.5 ? GQAOA_GROVER_UNWEIGHTED : GQAOA_GROVER_WEIGHTED;
        }
        if (family == GQAOA_GROVER_WEIGHTED) {
            double published = 0.0;
            check(gqaoa_paper_weight(pr.name.c_str(), &published));
            if (std::abs(published - pr.q) > 1e-12) {
                std::ostringstream msg;
                msg << "published weighted angles for " << pr.name << " assume q = "
                    << published << ", got " << pr.q;
                usage_error(msg.str());
            }
        }
        check(gqaoa_paper_params(pr.name.c_str(), pr.kind, family, o.p, a.alphas.data(),
                                 a.betas.data()));
        a.source = "paper";
        return a;
    }
    const auto flat = parse_reals(o.params, "--params");
    if (flat.size() != 2 * o.p) {
        usage_error("--params needs 2p = " + std::to_string(2 * o.p) +
                    " comma-separated angles (alpha_1,beta_1,...), got " +
                    std::to_string(flat.size()));
    }
    for (size_t k = 0; k < o.p; ++k) {
        a.alphas[k] = flat[2 * k];
        a.betas[k] = flat[2 * k + 1];
    }
    a.source = "explicit";
    return a;
}

json base_record(const std::string &command, const std::vector<std::string> &argv) {
    return {{"tool", "gqaoa"},
            {"version", gqaoa_version()},
            {"command", command},
            {"argv", argv}};
}

void describe_problem(json &rec, const Problem &pr) {
    rec["graph"] = pr.identity;
    rec["problem"] = pr.kind == GQAOA_MAXCUT ? "maxcut" : "edgecover";
    rec["mixer"] = {{"kind", pr.mixer == GQAOA_GROVER ? "grover" : "transverse"}};
    if (pr.mixer == GQAOA_GROVER) {
        rec["mixer"]["q"] = pr.q;
    }
}

std::vector<double> state_probabilities(const StateHandle &s) {
    return fetch_array<double>(
        [&](double *out, size_t *len) { return gqaoa_state_probabilities(s.get(), out, len); });
}

std::vector<double> ideal_distribution(const Problem &pr) {
    return fetch_array<double>([&](double *out, size_t *len) {
        return gqaoa_ideal_ground_distribution(pr.h.get(), pr.q, out, len);
    });
}

void run_state(const Problem &pr, const std::vector<double> &alphas,
               const std::vector<double> &betas, size_t rounds, StateHandle &s) {
    check(gqaoa_run(pr.h.get(), pr.mixer, pr.q, alphas.data(), betas.data(), rounds,
                    s.out()));
}

void emit(const json &rec, const Options &o, const std::string &csv) {
    const std::string text = rec.dump(2) + "\n";
    std::cout << text;
    if (!o.out.empty()) {
        std::cerr << "wrote " << write_versioned(o.out, text) << "\n";
    }
    if (!o.csv.empty()) {
        std::cerr << "wrote " << write_versioned(o.csv, csv) << "\n";
    }
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void cmd_solve(const Options &o, const std::vector<std::string> &argv) {
    Problem pr;
    load_problem(o, pr);
    const Angles a = resolve_angles(o, pr);
    StateHandle s;
    run_state(pr, a.alphas, a.betas, o.p, s);

    json rec = base_record("solve", argv);
    describe_problem(rec, pr);
    rec["p"] = o.p;
    rec["params"] = {{"alphas", a.alphas}, {"betas", a.betas}, {"source", a.source}};
    rec["seed"] = o.seed;
    rec["shots"] = o.shots;

    double expectation = 0.0;
    double ground_probability = 0.0;
    check(gqaoa_expectation(s.get(), pr.h.get(), &expectation));
    check(gqaoa_ground_probability(s.get(), pr.h.get(), &ground_probability));
    const auto probs = state_probabilities(s);
    const auto target = ideal_distribution(pr);

    json result;
    result["ground_energy"] = gqaoa_hamiltonian_ground_energy(pr.h.get());
    result["expectation"] = expectation;
    result["ground_probability"] = ground_probability;
    std::string csv = "index,bits,probability,target_share\n";
    json table = json::array();
    for (size_t k = 0; k < pr.ground.size(); ++k) {
        const auto x = pr.ground[k];
        table.push_back({{"index", x},
                         {"bits", bits_of(x, pr.qubits)},
                         {"probability", probs[x]},
                         {"target_share", target[k]}});
        csv += std::to_string(x) + "," + bits_of(x, pr.qubits) + "," + fmt(probs[x]) +
               "," + fmt(target[k]) + "\n";
    }
    result["ground_states"] = table;
    if (o.shots > 0) {
        std::vector<std::uint64_t> counts(probs.size());
        check(gqaoa_sample(probs.data(), probs.size(), o.shots, o.seed, counts.data()));
        json sampled = json::array();
        for (size_t x = 0; x < counts.size(); ++x) {
            if (counts[x] > 0) {
                sampled.push_back({{"index", x},
                                   {"bits", bits_of(x, pr.qubits)},
                                   {"count", counts[x]}});
            }
        }
        result["counts"] = sampled;
    }
    rec["result"] = result;
    emit(rec, o, csv);
}

void cmd_optimize(const Options &o, size_t starts, const std::vector<std::string> &argv) {
    Problem pr;
    load_problem(o, pr);
    std::vector<double> alphas(o.p);
    std::vector<double> betas(o.p);
    gqaoa_optimize_result r{};
    check(gqaoa_optimize(pr.h.get(), pr.mixer, pr.q, o.p, starts, o.seed, alphas.data(),
                         betas.data(), &r));

    json rec = base_record("optimize", argv);
    describe_problem(rec, pr);
    rec["p"] = o.p;
    rec["seed"] = o.seed;
    rec["starts"] = starts;
    rec["result"] = {{"alphas", alphas},
                     {"betas", betas},
                     {"expectation", r.expectation},
                     {"ground_probability", r.ground_probability},
                     {"best_start", r.best_start},
                     {"converged_starts", r.converged_starts}};

    // ground probability after each prefix of the optimized schedule
    std::string csv = "round,ground_probability\n";
    for (size_t k = 1; k <= o.p; ++k) {
        StateHandle s;
        run_state(pr, alphas, betas, k, s);
        double gp = 0.0;
        check(gqaoa_ground_probability(s.get(), pr.h.get(), &gp));
        csv += std::to_string(k) + "," + fmt(gp) + "\n";
    }
    emit(rec, o, csv);
}

struct FairnessFlags {
    gqaoa_fairness_config config = gqaoa_fairness_config_default();
    std::string data = "synthetic";
};

void cmd_fairness(const Options &o, const FairnessFlags &f,
                  const std::vector<std::string> &argv) {
    Problem pr;
    load_problem(o, pr);
    const Angles a = resolve_angles(o, pr);
    StateHandle s;
    run_state(pr, a.alphas, a.betas, o.p, s);
    const auto probs = state_probabilities(s);
    const auto ideal = ideal_distribution(pr);

    gqaoa_fairness_config config = f.config;
    config.ideal_q1 = f.data == "ideal" ? 1 : 0;
    ReportHandle report;
    check(gqaoa_fairness(probs.data(), probs.size(), pr.ground.data(), ideal.data(),
                         pr.ground.size(), &config, o.seed, report.out()));
    const auto summary = gqaoa_fairness_report_summary(report.get());
    const auto runs = fetch_array<std::uint64_t>([&](std::uint64_t *out, size_t *len) {
        return gqaoa_fairness_report_runs(report.get(), out, len);
    });
    const auto sampled = fetch_array<double>([&](double *out, size_t *len) {
        return gqaoa_fairness_report_sampled(report.get(), out, len);
    });
    double deviation = 0.0;
    int defined = 0;
    check(gqaoa_fairness_deviation(s.get(), pr.h.get(), pr.q, &deviation, &defined));

    json rec = base_record("fairness", argv);
    describe_problem(rec, pr);
    const bool weighted = pr.q != 0.5;
    rec["weighting"] = weighted ? "weighted" : "unweighted";
    rec["p"] = o.p;
    rec["params"] = {{"alphas", a.alphas}, {"betas", a.betas}, {"source", a.source}};
    rec["seed"] = o.seed;
    rec["shots"] = config.shots;
    rec["data"] = f.data;
    rec["config"] = {{"repeats", config.repeats},
                     {"kl_resamples", config.kl_resamples},
                     {"significance", config.significance},
                     {"sets", config.sets},
                     {"cap", config.cap}};

    json table = json::array();
    double ground_mass = 0.0;
    for (auto x : pr.ground) {
        ground_mass += probs[x];
    }
    for (size_t k = 0; k < pr.ground.size(); ++k) {
        const auto x = pr.ground[k];
        table.push_back({{"index", x},
                         {"bits", bits_of(x, pr.qubits)},
                         {"ideal", ideal[k]},
                         {"exact", probs[x] / ground_mass},
                         {"sampled", sampled[k]}});
    }
    json n_star = {{"runs", runs}, {"capped_runs", summary.capped_runs}};
    if (summary.uncapped_runs > 0) {
        n_star["mean"] = summary.n_star_mean;
        n_star["std"] = summary.n_star_std;
    } else {
        n_star["mean"] = nullptr;
        n_star["std"] = nullptr;
    }
    json result = {{"ground_states", table},
                   {"n_star", n_star},
                   {"kl", {{"mean", summary.kl_mean}, {"std", summary.kl_std}}}};
    result["fairness_deviation"] = defined ? json(deviation) : json(nullptr);
    rec["result"] = result;

    std::string csv =
        "graph,weighting,p,n_star_mean,n_star_std,capped_runs,kl_mean,kl_std\n";
    csv += (pr.name.empty() ? pr.identity["fnv1a"].get<std::string>() : pr.name) + "," +
           (weighted ? "weighted" : "unweighted") + "," + std::to_string(o.p) + "," +
           (summary.uncapped_runs ? fmt(summary.n_star_mean) : "") + "," +
           (summary.uncapped_runs ? fmt(summary.n_star_std) : "") + "," +
           std::to_string(summary.capped_runs) + "," + fmt(summary.kl_mean) + "," +
           fmt(summary.kl_std) + "\n";
    emit(rec, o, csv);

    if (summary.capped_runs > 0) {
        std::cerr << "notice: " << summary.capped_runs << " of " << config.repeats
                  << " repeats did not reject below M = " << config.cap
                  << "; N* is reported over the remaining repeats\n";
    }
    if (summary.uncapped_runs == 0) {
        throw CliError{kCap, "the null hypothesis was never rejected within the cap "
                             "of " + std::to_string(config.cap) + " shots"};
    }
}

void cmd_draws(const Options &o, bool baseline, const std::string &ng, size_t trials,
               const std::vector<std::string> &argv) {
    Problem pr;
    load_problem(o, pr);
    std::vector<double> probs;
    json rec = base_record("draws", argv);
    describe_problem(rec, pr);
    std::string algorithm = "uniform";
    if (baseline) {
        if (!o.params.empty()) {
            usage_error("--baseline and --params are mutually exclusive");
        }
        probs.assign(std::size_t{1} << pr.qubits, 1.0 / static_cast<double>(1ULL << pr.qubits));
        rec.erase("mixer");
    } else {
        if (o.params.empty()) {
            usage_error("draws needs --params or --baseline");
        }
        const Angles a = resolve_angles(o, pr);
        StateHandle s;
        run_state(pr, a.alphas, a.betas, o.p, s);
        probs = state_probabilities(s);
        algorithm = pr.mixer == GQAOA_GROVER ? "g-qaoa" : "qaoa";
        rec["p"] = o.p;
        rec["params"] = {{"alphas", a.alphas}, {"betas", a.betas}, {"source", a.source}};
    }
    rec["algorithm"] = algorithm;
    rec["seed"] = o.seed;
    rec["trials"] = trials;

    std::vector<size_t> levels;
    if (ng == "all") {
        for (size_t k = 1; k <= pr.ground.size(); ++k) {
            levels.push_back(k);
        }
    } else {
        for (double v : parse_reals(ng, "--ng")) {
            if (v < 1 || v != std::floor(v)) {
                usage_error("--ng entries must be positive integers");
            }
            levels.push_back(static_cast<size_t>(v));
        }
    }

    const std::string graph_key =
        pr.name.empty() ? pr.identity["fnv1a"].get<std::string>() : pr.name;
    std::string csv = "graph,algorithm,p,n_g,mean,standard_error,exact\n";
    json rows = json::array();
    for (size_t n_g : levels) {
        double mean = 0.0;
        double se = 0.0;
        check(gqaoa_expected_draws_mc(probs.data(), probs.size(), pr.ground.data(),
                                      pr.ground.size(), n_g, trials, o.seed, &mean, &se));
        json row = {{"n_g", n_g}, {"mean", mean}, {"standard_error", se}};
        double exact = 0.0;
        const gqaoa_status st = gqaoa_expected_draws_exact(
            probs.data(), probs.size(), pr.ground.data(), pr.ground.size(), n_g, &exact);
        if (st == GQAOA_OK) {
            row["exact"] = exact;
        } else if (st == GQAOA_DOMAIN_ERROR) {
            row["exact"] = nullptr; // too many ground states for the exact chain
        } else {
            check(st);
        }
        rows.push_back(row);
        csv += graph_key + "," + algorithm + "," + (baseline ? "" : std::to_string(o.p)) +
               "," + std::to_string(n_g) + "," + fmt(mean) + "," + fmt(se) + "," +
               (st == GQAOA_OK ? fmt(exact) : "") + "\n";
    }
    rec["result"] = {{"ground_states", pr.ground.size()}, {"rows", rows}};
    emit(rec, o, csv);
}

struct CompileFlags {
    std::string target = "separator";
    double alpha = 0.0;
    double beta = 0.0;
    bool ancilla = false;
    size_t n = 0;
};

void cmd_compile(const Options &o, const CompileFlags &c,
                 const std::vector<std::string> &argv) {
    SequenceHandle seq;
    double deviation = 0.0;
    json rec = base_record("compile", argv);
    rec["target"] = c.target;
    if (c.target == "separator") {
        if (o.graph.empty()) {
            usage_error("--target separator needs --graph");
        }
        Problem pr;
        load_problem(o, pr);
        check(gqaoa_compile_separator(pr.graph.get(), pr.kind, c.alpha, seq.out()));
        check(gqaoa_sequence_deviation_separator(seq.get(), pr.h.get(), c.alpha, &deviation));
        rec["graph"] = pr.identity;
        rec["problem"] = pr.kind == GQAOA_MAXCUT ? "maxcut" : "edgecover";
        rec["alpha"] = c.alpha;
    } else {
        const double q = o.q.value_or(0.5);
        if (!(q > 0.0 && q < 1.0)) {
            usage_error("--q must lie in the open interval (0, 1)");
        }
        if (c.n == 0) {
            usage_error("--target grover-mixer needs --n");
        }
        check(gqaoa_compile_grover_mixer(c.n, q, c.beta, c.ancilla ? 1 : 0, seq.out()));
        check(gqaoa_sequence_deviation_grover(seq.get(), c.n, q, c.beta, &deviation));
        rec["n"] = c.n;
        rec["q"] = q;
        rec["beta"] = c.beta;
        rec["ancilla"] = c.ancilla;
    }
    char *raw = nullptr;
    check(gqaoa_sequence_emit(seq.get(), &raw));
    const std::string circuit = take_string(raw);
    const size_t two_qubit = gqaoa_sequence_two_qubit_count(seq.get());
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.3e", deviation);

    std::cout << circuit << "two_qubit_gates: " << two_qubit << "\n"
              << "max_deviation: " << dev << "\n";
    rec["result"] = {{"circuit", circuit},
                     {"gates", gqaoa_sequence_num_gates(seq.get())},
                     {"two_qubit_gates", two_qubit},
                     {"max_deviation", deviation}};
    if (!o.out.empty()) {
        std::cerr << "wrote " << write_versioned(o.out, rec.dump(2) + "\n") << "\n";
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"QAOA and Grover-mixer QAOA on small graph problems"};
    app.set_version_flag("--version", gqaoa_version());
    app.require_subcommand(1);

    Options o;
    auto common = [&](CLI::App *cmd) {
        cmd->add_option("--seed", o.seed, "random seed");
        cmd->add_option("--out", o.out, "write the JSON record (never overwrites)");
        cmd->add_option("--csv", o.csv, "write a CSV table (never overwrites)");
    };

    auto *solve = app.add_subcommand("solve", "simulate QAOA at given angles");
    add_problem_flags(solve, o, true);
    solve->add_option("--p", o.p, "number of rounds")->check(CLI::PositiveNumber);
    solve->add_option("--params", o.params, "alpha_1,beta_1,... or 'paper'")->required();
    solve->add_option("--shots", o.shots, "sampled shots (0 = none)");
    common(solve);

    size_t starts = 50;
    auto *optimize = app.add_subcommand("optimize", "multi-start angle optimization");
    add_problem_flags(optimize, o, true);
    optimize->add_option("--p", o.p, "number of rounds")->check(CLI::PositiveNumber);
    optimize->add_option("--starts", starts, "random starts")->check(CLI::PositiveNumber);
    common(optimize);

    FairnessFlags ff;
    auto *fairness = app.add_subcommand("fairness", "fair-sampling statistics");
    add_problem_flags(fairness, o, true);
    fairness->add_option("--p", o.p, "number of rounds")->check(CLI::PositiveNumber);
    fairness->add_option("--params", o.params, "alpha_1,beta_1,... or 'paper'")->required();
    fairness->add_option("--shots", ff.config.shots, "shots per synthetic run")
        ->check(CLI::PositiveNumber);
    fairness->add_option("--significance", ff.config.significance, "rejection level");
    fairness->add_option("--repeats", ff.config.repeats, "shots-to-reject repeats");
    fairness->add_option("--kl-resamples", ff.config.kl_resamples, "KL resamples");
    fairness->add_option("--sets", ff.config.sets, "resampled sets per sample size");
    fairness->add_option("--cap", ff.config.cap, "largest sample size tried");
    fairness->add_option("--data", ff.data, "synthetic or ideal")
        ->check(CLI::IsMember({"synthetic", "ideal"}));
    common(fairness);

    bool baseline = false;
    std::string ng = "all";
    size_t trials = 100000;
    auto *draws = app.add_subcommand("draws", "expected draws to collect ground states");
    add_problem_flags(draws, o, true);
    draws->add_option("--p", o.p, "number of rounds")->check(CLI::PositiveNumber);
    draws->add_option("--params", o.params, "alpha_1,beta_1,... or 'paper'");
    draws->add_flag("--baseline", baseline, "uniform random guessing");
    draws->add_option("--ng", ng, "comma-separated n_g values or 'all'");
    draws->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    common(draws);

    CompileFlags cf;
    auto *compile = app.add_subcommand("compile", "lower to the native gate set");
    compile->add_option("--target", cf.target, "separator or grover-mixer")
        ->check(CLI::IsMember({"separator", "grover-mixer"}));
    compile->add_option("--graph", o.graph, "preset name or graph file");
    compile->add_option("--problem", o.problem, "maxcut or edgecover")
        ->check(CLI::IsMember({"maxcut", "edgecover"}));
    compile->add_option("--alpha", cf.alpha, "separator angle");
    compile->add_option("--beta", cf.beta, "mixer angle");
    compile->add_option("--q", o.q, "Grover weight parameter (default 0.5)");
    compile->add_option("--n", cf.n, "Grover mixer qubits");
    compile->add_flag("--ancilla", cf.ancilla, "allow one ancilla qubit");
    compile->add_option("--out", o.out, "write the JSON record (never overwrites)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (*solve) {
            cmd_solve(o, args);
        } else if (*optimize) {
            cmd_optimize(o, starts, args);
        } else if (*fairness) {
            cmd_fairness(o, ff, args);
        } else if (*draws) {
            cmd_draws(o, baseline, ng, trials, args);
        } else if (*compile) {
            cmd_compile(o, cf, args);
        }
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
