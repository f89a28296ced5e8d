// Command-line front end: classification, forward transforms, ensemble
// simulation, and the two linear-space representations, all over JSON files.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "contextprob/complex_rep.hpp"
#include "contextprob/hyperbolic.hpp"
#include "contextprob/hyperbolic_rep.hpp"
#include "contextprob/json_io.hpp"
#include "contextprob/probability.hpp"
#include "contextprob/simulator.hpp"

namespace cp = contextprob;
using nlohmann::json;

namespace {

// Exit codes shared with the test suite.
constexpr int kOk = 0;
constexpr int kGoldenMismatch = 1;
constexpr int kParseError = 2;
constexpr int kDomainError = 3;
constexpr int kSimulationDegenerate = 4;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cp::SchemaError("cannot open input file: " + path);
    return json::parse(in);  // json::parse_error maps to the parse exit code
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cp::Error("cannot open output file: " + path);
    out << text;
}

class Tolerances {
public:
    explicit Tolerances(const std::vector<std::string>& specs) {
        static const std::set<std::string> known = {
            "lambda_zero", "lambda_boundary", "orthogonality",
            "born",        "unitarity",       "behaviour"};
        for (const std::string& spec : specs) {
            const auto eq = spec.find('=');
            if (eq == std::string::npos) {
                throw cp::SchemaError("--tol expects NAME=VALUE, got: " + spec);
            }
            const std::string name = spec.substr(0, eq);
            if (!known.count(name)) throw cp::SchemaError("unknown tolerance name: " + name);
            double value = 0.0;
            try {
                value = std::stod(spec.substr(eq + 1));
            } catch (const std::exception&) {
                throw cp::SchemaError("cannot parse tolerance value in: " + spec);
            }
            if (!(value > 0.0)) throw cp::SchemaError("tolerances must be positive: " + spec);
            values_[name] = value;
        }
    }

    double get(const std::string& name, double fallback) const {
        const auto it = values_.find(name);
        return it == values_.end() ? fallback : it->second;
    }

private:
    std::map<std::string, double> values_;
};

struct CommonOpts {
    std::string input;
    std::string output;
    std::string format;  // resolved per command when left empty
    std::vector<std::string> tol_specs;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input) {
    if (needs_input) {
        cmd->add_option("--input", opts.input, "input JSON file")
            ->required()
            ->check(CLI::ExistingFile);
    }
    cmd->add_option("--output", opts.output, "output file (stdout when omitted)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol", opts.tol_specs, "tolerance override NAME=VALUE")
        ->take_all();
}

std::string resolve_format(const CommonOpts& opts, const std::string& fallback) {
    return opts.format.empty() ? fallback : opts.format;
}

void require_json_format(const CommonOpts& opts) {
    if (resolve_format(opts, "json") != "json") {
        throw cp::SchemaError("csv output is only available for simulate");
    }
}

void emit_json(const CommonOpts& opts, const json& doc) {
    write_text(opts.output, doc.dump(2) + "\n");
}

// ---------------------------------------------------------------- classify

int run_classify(const CommonOpts& opts) {
    require_json_format(opts);
    const Tolerances tols(opts.tol_specs);
    const cp::ProblemInput problem = cp::load_problem(read_json_file(opts.input));
    if (!problem.q) throw cp::SchemaError("classify needs outcome probabilities \"q\"");

    const cp::ClassifyTolerances ct{tols.get("lambda_zero", 1e-9),
                                    tols.get("lambda_boundary", 1e-9)};
    json out{{"schema_version", cp::kSchemaVersion}};
    if (problem.p.size() == 2) {
        const cp::InterferenceProfile profile =
            cp::interference_coefficients(problem.p, problem.P, *problem.q, ct);
        const double coupling = cp::coupling_coefficient(problem.P);
        const cp::LambdaInterval interval =
            cp::lambda_admissible_interval(problem.p, problem.P);
        out["K"] = coupling;
        out["orthogonal"] =
            cp::check_orthogonality(profile, coupling, tols.get("orthogonality", 1e-9));
        out["admissible_lambda1"] = {interval.lo, interval.hi};
        out["profile"] = cp::profile_to_json(profile);
    } else {
        out["profile"] = cp::profile_to_json(
            cp::multi_valued_decomposition(problem.p, problem.P, *problem.q, ct));
    }
    emit_json(opts, out);
    return kOk;
}

// ---------------------------------------------------------------- transform

int run_transform(const CommonOpts& opts) {
    require_json_format(opts);
    const Tolerances tols(opts.tol_specs);
    const cp::ProblemInput problem = cp::load_problem(read_json_file(opts.input));

    std::array<double, 2> lambdas{};
    if (problem.lambdas) {
        lambdas = *problem.lambdas;
    } else if (problem.phases) {
        lambdas = {cp::lambda_from_phase((*problem.phases)[0]),
                   cp::lambda_from_phase((*problem.phases)[1])};
    } else {
        throw cp::SchemaError("transform needs \"lambdas\" or \"phases\"");
    }

    const cp::ClassifyTolerances ct{tols.get("lambda_zero", 1e-9),
                                    tols.get("lambda_boundary", 1e-9)};
    const cp::InterferenceProfile profile =
        cp::profile_from_lambdas(problem.p, problem.P, lambdas[0], lambdas[1], ct);
    const cp::OutcomeDistribution q = cp::forward_transform(
        problem.p, problem.P, profile, tols.get("orthogonality", 1e-9));

    emit_json(opts, json{{"schema_version", cp::kSchemaVersion},
                         {"q", q.probs()},
                         {"profile", cp::profile_to_json(profile)}});
    return kOk;
}

// ---------------------------------------------------------------- simulate

std::vector<std::uint64_t> parse_schedule(const std::string& text) {
    std::vector<std::uint64_t> schedule;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        std::uint64_t value = 0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
        if (res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
            throw cp::SchemaError("--schedule expects comma-separated integers, got: " + text);
        }
        schedule.push_back(value);
        pos = comma + 1;
    }
    return schedule;
}

json trace_point_to_json(const cp::TracePoint& pt) {
    return json{{"N", pt.ensemble_size}, {"replication", pt.replication},
                {"p1", pt.p1},           {"p11", pt.p11},
                {"p12", pt.p12},         {"p21", pt.p21},
                {"p22", pt.p22},         {"q1", pt.q1},
                {"q2", pt.q2},           {"delta1", pt.delta1},
                {"delta2", pt.delta2},   {"lambda1", pt.lambda1},
                {"lambda2", pt.lambda2}, {"valid", pt.valid}};
}

int run_simulate(const CommonOpts& opts, bool seed_given, std::uint64_t seed,
                 bool reps_given, int replications, const std::string& schedule_text) {
    cp::EnsembleScenario scenario = cp::load_scenario(read_json_file(opts.input));
    if (seed_given) {
        scenario.seed = seed;
    } else if (const char* env = std::getenv("CONTEXTPROB_SEED")) {
        std::uint64_t env_seed = 0;
        const std::string text(env);
        const auto res = std::from_chars(text.data(), text.data() + text.size(), env_seed);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
            throw cp::SchemaError("CONTEXTPROB_SEED must be an unsigned integer");
        }
        scenario.seed = env_seed;
    }
    if (reps_given) scenario.replications = replications;

    const std::vector<std::uint64_t> schedule =
        schedule_text.empty() ? std::vector<std::uint64_t>{scenario.n}
                              : parse_schedule(schedule_text);

    const cp::ConvergenceTrace trace = cp::convergence_study(scenario, schedule);

    if (resolve_format(opts, "csv") == "csv") {
        write_text(opts.output, cp::trace_to_csv(trace));
    } else {
        json points = json::array();
        for (const cp::TracePoint& pt : trace.points) points.push_back(trace_point_to_json(pt));
        json summaries = json::array();
        for (const cp::ConvergenceSummary& s : trace.summaries) {
            summaries.push_back(json{{"N", s.ensemble_size},
                                     {"lambda_mean", s.lambda_mean},
                                     {"lambda_stddev", s.lambda_stddev},
                                     {"valid_points", s.valid_points}});
        }
        emit_json(opts, json{{"schema_version", cp::kSchemaVersion},
                             {"schedule", trace.schedule},
                             {"points", std::move(points)},
                             {"summaries", std::move(summaries)}});
    }

    // Human-readable convergence summary; kept on stderr so the data stream
    // stays byte-stable.
    const cp::ConvergenceSummary& last = trace.summaries.back();
    std::cerr << "N=" << last.ensemble_size << ": mean lambda = ("
              << format_double(last.lambda_mean[0]) << ", "
              << format_double(last.lambda_mean[1]) << ")";
    try {
        const cp::InterferenceProfile target = cp::analytic_profile(scenario);
        std::cerr << ", analytic lambda = (" << format_double(target.lambdas[0]) << ", "
                  << format_double(target.lambdas[1]) << ")";
    } catch (const cp::Error&) {
        // No analytic target (e.g. an outcome marginal vanishes); summary
        // stays purely empirical.
    }
    std::cerr << "\n";
    return kOk;
}

// ---------------------------------------------------------------- rep-c

int run_rep_c(const CommonOpts& opts) {
    require_json_format(opts);
    const Tolerances tols(opts.tol_specs);
    const json doc = read_json_file(opts.input);
    cp::require_schema_version(doc);

    const cp::ContextDistribution p(doc.at("p").get<std::vector<double>>());
    const auto xi = doc.at("xi").get<std::array<double, 2>>();
    const cp::TransitionMatrix P(doc.at("P").get<std::vector<std::vector<double>>>());
    const auto gamma = doc.at("gamma").get<std::array<std::array<double, 2>, 2>>();

    const cp::AmplitudeVector alpha = cp::amplitudes_from_context(p, xi);
    const cp::TransitionAmplitudeMatrix U = cp::matrix_from_probabilities(P, gamma);
    const cp::AmplitudeVector beta = cp::compose(alpha, U);

    json out{{"schema_version", cp::kSchemaVersion},
             {"alpha", alpha.components},
             {"beta", beta.components},
             {"eta", cp::normalize_phase(xi[0] - xi[1])},
             {"gamma1", cp::normalize_phase(gamma[0][0] - gamma[1][0])},
             {"gamma2", cp::normalize_phase(gamma[0][1] - gamma[1][1])},
             {"defect", cp::normalization_defect(alpha, U)},
             {"unitary", cp::is_unitary(U, tols.get("unitarity", 1e-10))},
             {"invertible", U.is_invertible()}};
    try {
        out["born"] = cp::born(beta, tols.get("born", 1e-9)).probs();
    } catch (const cp::NotDecomposable& e) {
        out["born_error"] = e.what();
    }
    emit_json(opts, out);
    return kOk;
}

// ---------------------------------------------------------------- rep-g

int run_rep_g(const CommonOpts& opts) {
    require_json_format(opts);
    const Tolerances tols(opts.tol_specs);
    const json doc = read_json_file(opts.input);
    cp::require_schema_version(doc);

    const cp::ContextDistribution p(doc.at("p").get<std::vector<double>>());
    const auto signs = doc.at("signs").get<std::array<int, 2>>();
    const auto xi = doc.at("xi").get<std::array<double, 2>>();
    const cp::TransitionMatrix P(doc.at("P").get<std::vector<std::vector<double>>>());
    const auto entry_signs = doc.at("entry_signs").get<std::array<std::array<int, 2>, 2>>();
    const auto gamma = doc.at("gamma").get<std::array<std::array<double, 2>, 2>>();

    const cp::GAmplitudeVector alpha = cp::g_amplitudes_from_context(p, signs, xi);
    const cp::GTransitionMatrix U = cp::g_matrix_from_probabilities(P, entry_signs, gamma);
    const cp::GAmplitudeVector beta = cp::g_compose(alpha, U);
    const cp::GUnitarityReport report =
        cp::g_unitary_characterization(U, tols.get("unitarity", 1e-10));

    json out{{"schema_version", cp::kSchemaVersion},
             {"alpha", alpha.components},
             {"beta", beta.components},
             {"sq_norms", {cp::sq_norm(beta.components[0]), cp::sq_norm(beta.components[1])}},
             {"sigma", U.sigma()},
             {"characterization",
              json{{"double_stochastic", report.double_stochastic},
                   {"sigma_ok", report.sigma_ok},
                   {"phase_ok", report.phase_ok},
                   {"unitary", report.unitary}}}};
    try {
        out["born"] = cp::g_born(beta, tols.get("born", 1e-9)).probs();
    } catch (const cp::Error& e) {
        out["born_error"] = e.what();
    }
    emit_json(opts, out);
    return kOk;
}

// ---------------------------------------------------------------- examples

struct Report {
    bool all_pass = true;
    std::string text;

    void check_close(const std::string& name, double expected, double computed, double tol) {
        const bool ok = std::abs(expected - computed) <= tol;
        all_pass = all_pass && ok;
        text += std::string(ok ? "PASS " : "FAIL ") + name +
                " expected=" + format_double(expected) + " computed=" + format_double(computed) +
                "\n";
    }

    void check(const std::string& name, bool ok, const std::string& expected,
               const std::string& computed) {
        all_pass = all_pass && ok;
        text += std::string(ok ? "PASS " : "FAIL ") + name + " expected=" + expected +
                " computed=" + computed + "\n";
    }
};

int run_examples(const CommonOpts& opts) {
    using std::numbers::pi;
    Report rep;

    // A: trigonometric interference with an asymmetric transition matrix.
    {
        const cp::ContextDistribution p({0.5, 0.5});
        const cp::TransitionMatrix P({{0.5, 0.5}, {1.0 / 3.0, 2.0 / 3.0}});
        rep.check_close("A.coupling", std::sqrt(2.0), cp::coupling_coefficient(P), 1e-12);

        const double l1 = std::cos(3.0 * pi / 4.0);
        const double l2 = std::cos(pi / 3.0);
        const cp::OutcomeDistribution q =
            cp::forward_transform(p, P, cp::profile_from_lambdas(p, P, l1, l2));
        rep.check_close("A.forward.q1", 5.0 / 12.0 + std::cos(3.0 * pi / 4.0) / std::sqrt(6.0),
                        q[0], 1e-12);
        rep.check_close("A.forward.q2", 7.0 / 12.0 + std::cos(pi / 3.0) / std::sqrt(3.0), q[1],
                        1e-12);

        const cp::InterferenceProfile profile = cp::interference_coefficients(p, P, q);
        rep.check("A.behaviour", profile.behaviour == cp::Behaviour::Trigonometric, "T",
                  cp::to_string(profile.behaviour));
        rep.check_close("A.phase1", 3.0 * pi / 4.0, profile.phases[0].theta, 1e-9);
        rep.check_close("A.phase2", pi / 3.0, profile.phases[1].theta, 1e-9);

        const cp::AmplitudeVector alpha = cp::amplitudes_from_context(p, {0.0, 0.0});
        const cp::TransitionAmplitudeMatrix U =
            cp::matrix_from_probabilities(P, {{{3.0 * pi / 4.0, pi / 3.0}, {0.0, 0.0}}});
        rep.check_close("A.rep.defect", 0.0, cp::normalization_defect(alpha, U), 1e-12);
        const cp::OutcomeDistribution born_q = cp::born(cp::compose(alpha, U));
        rep.check_close("A.rep.q1", q[0], born_q[0], 1e-9);
        rep.check_close("A.rep.q2", q[1], born_q[1], 1e-9);
    }

    // B: hyperbolic phases saturating the admissible bound.
    {
        const cp::ContextDistribution p({0.25, 0.75});
        const cp::TransitionMatrix half({{0.5, 0.5}, {0.5, 0.5}});
        const double bound = cp::admissible_h_phase_bound(0.25, 0.5);
        rep.check_close("B.phase_bound", 2.0 / std::sqrt(3.0), bound, 1e-12);

        const double theta_max = std::acosh(bound);
        const cp::OutcomeDistribution q = cp::forward_transform(
            p, half, cp::profile_from_lambdas(p, half, -std::cosh(theta_max), std::cosh(theta_max)));
        rep.check_close("B.saturated.q1", 0.0, q[0], 1e-12);
        rep.check_close("B.saturated.q2", 1.0, q[1], 1e-12);

        bool rejected = false;
        try {
            cp::forward_transform(p, half,
                                  cp::profile_from_lambdas(p, half, -std::cosh(theta_max + 1e-3),
                                                           std::cosh(theta_max + 1e-3)));
        } catch (const cp::NonphysicalResult&) {
            rejected = true;
        }
        rep.check("B.overshoot_rejected", rejected, "NonphysicalResult", rejected ? "NonphysicalResult" : "accepted");

        // Same bound through the G-linear representation.
        const cp::GTransitionMatrix had = cp::g_matrix_from_probabilities(
            half, {{{1, 1}, {1, -1}}}, {{{0.0, 0.0}, {0.0, 0.0}}});
        const cp::GAmplitudeVector alpha =
            cp::g_amplitudes_from_context(p, {1, 1}, {0.0, theta_max});
        const cp::OutcomeDistribution gq = cp::g_born(cp::g_compose(alpha, had));
        rep.check_close("B.g_saturated.q1", 1.0, gq[0], 1e-9);
        rep.check_close("B.g_saturated.q2", 0.0, gq[1], 1e-9);

        bool state_rejected = false;
        try {
            cp::g_born(cp::g_compose(
                cp::g_amplitudes_from_context(p, {1, 1}, {0.0, theta_max + 0.5}), had));
        } catch (const cp::NonphysicalState&) {
            state_rejected = true;
        }
        rep.check("B.g_overshoot_rejected", state_rejected, "NonphysicalState",
                  state_rejected ? "NonphysicalState" : "accepted");
    }

    // C: hypertrigonometric statistics from a disturbing selection.
    {
        const cp::ContextDistribution p({0.5, 0.5});
        const cp::TransitionMatrix P({{0.8, 0.2}, {0.8, 0.2}});
        const cp::OutcomeDistribution q({0.4, 0.6});
        rep.check_close("C.coupling", 0.25, cp::coupling_coefficient(P), 1e-12);

        const cp::InterferenceProfile profile = cp::interference_coefficients(p, P, q);
        rep.check_close("C.lambda1", -0.5, profile.lambdas[0], 1e-12);
        rep.check_close("C.lambda2", 2.0, profile.lambdas[1], 1e-12);
        rep.check("C.behaviour", profile.behaviour == cp::Behaviour::HyperTrigonometric, "HT",
                  cp::to_string(profile.behaviour));
        rep.check("C.phase1.kind", profile.phases[0].kind == cp::PhaseKind::Cos, "cos",
                  profile.phases[0].kind == cp::PhaseKind::Cos ? "cos" : "cosh");
        rep.check_close("C.phase1", 2.0 * pi / 3.0, profile.phases[0].theta, 1e-12);
        rep.check("C.phase2.kind", profile.phases[1].kind == cp::PhaseKind::Cosh, "cosh",
                  profile.phases[1].kind == cp::PhaseKind::Cosh ? "cosh" : "cos");
        rep.check_close("C.phase2", std::log(2.0 + std::sqrt(3.0)), profile.phases[1].theta, 1e-10);

        const cp::OutcomeDistribution back =
            cp::forward_transform(p, P, cp::profile_from_lambdas(p, P, -0.5, 2.0));
        rep.check_close("C.forward.q1", 0.4, back[0], 1e-12);
        rep.check_close("C.forward.q2", 0.6, back[1], 1e-12);
    }

    // Algebra spot checks.
    {
        const cp::HyperbolicNumber zero = cp::HyperbolicNumber{1.0, 1.0} * cp::HyperbolicNumber{1.0, -1.0};
        rep.check("G.zero_divisor", zero == cp::HyperbolicNumber{0.0, 0.0}, "(0, 0)",
                  "(" + format_double(zero.x) + ", " + format_double(zero.y) + ")");
        const cp::HyperbolicNumber unit = cp::h_exp(std::log(2.0 + std::sqrt(3.0)));
        rep.check_close("G.unit.x", 2.0, unit.x, 1e-12);
        rep.check_close("G.unit.y", std::sqrt(3.0), unit.y, 1e-12);
    }

    write_text(opts.output, rep.text);
    return rep.all_pass ? kOk : kGoldenMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"context-transition probability transformations"};
    app.require_subcommand(1);

    CommonOpts classify_opts, transform_opts, simulate_opts, repc_opts, repg_opts, examples_opts;

    CLI::App* classify = app.add_subcommand(
        "classify", "interference coefficients, behaviour, and phases of (p, P, q)");
    add_common(classify, classify_opts, true);

    CLI::App* transform = app.add_subcommand(
        "transform", "forward transform q from (p, P) and prescribed lambdas or phases");
    add_common(transform, transform_opts, true);

    CLI::App* simulate = app.add_subcommand(
        "simulate", "frequency simulation of a two-stage counting scenario");
    add_common(simulate, simulate_opts, true);
    std::uint64_t seed = 0;
    int replications = 0;
    std::string schedule_text;
    CLI::Option* seed_opt =
        simulate->add_option("--seed", seed, "override the scenario seed");
    CLI::Option* reps_opt =
        simulate->add_option("--replications", replications, "override the replication count")
            ->check(CLI::PositiveNumber);
    simulate->add_option("--schedule", schedule_text,
                         "comma-separated ensemble sizes (default: the scenario's n)");

    CLI::App* repc = app.add_subcommand(
        "rep-c", "complex linear-space representation of a context/transition pair");
    add_common(repc, repc_opts, true);

    CLI::App* repg = app.add_subcommand(
        "rep-g", "hyperbolic linear-space representation of a context/transition pair");
    add_common(repg, repg_opts, true);

    CLI::App* examples = app.add_subcommand(
        "examples", "run the built-in worked examples against their expected values");
    add_common(examples, examples_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (classify->parsed()) return run_classify(classify_opts);
        if (transform->parsed()) return run_transform(transform_opts);
        if (simulate->parsed()) {
            return run_simulate(simulate_opts, seed_opt->count() > 0, seed,
                                reps_opt->count() > 0, replications, schedule_text);
        }
        if (repc->parsed()) return run_rep_c(repc_opts);
        if (repg->parsed()) return run_rep_g(repg_opts);
        if (examples->parsed()) return run_examples(examples_opts);
    } catch (const cp::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const cp::EmptyContext& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSimulationDegenerate;
    } catch (const cp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}
