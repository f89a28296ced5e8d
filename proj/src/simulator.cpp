#include "contextprob/simulator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>

#include "contextprob/rng.hpp"

namespace contextprob {

namespace {

void require_two_contexts(const ContextDistribution& p, const TransitionMatrix& rows) {
    if (p.size() != 2 || rows.size() != 2) {
        throw Error("ensemble scenarios are dichotomic: two contexts, two outcomes");
    }
}

}  // namespace

void validate(const EnsembleScenario& scenario) {
    double sum = 0.0;
    for (const auto& row : scenario.joint) {
        for (double v : row) {
            if (!(std::isfinite(v) && v >= 0.0)) {
                throw DegenerateProbability("joint probabilities must be finite and nonnegative");
            }
            sum += v;
        }
    }
    if (std::abs(sum - 1.0) > kDistributionSumTol) {
        throw DegenerateProbability("joint probabilities must sum to 1");
    }
    for (const auto& row : scenario.joint) {
        if (row[0] + row[1] < kProbabilityFloor) {
            throw DegenerateProbability("every context needs positive marginal probability");
        }
    }
    if (scenario.disturbed.size() != 2) {
        throw DegenerateProbability("disturbed transition matrix must be 2x2");
    }
    if (scenario.n == 0) throw DegenerateProbability("ensemble size n must be at least 1");
    if (scenario.replications < 1) throw DegenerateProbability("replications must be at least 1");
}

std::array<double, 2> context_marginals(const EnsembleScenario& scenario) {
    return {scenario.joint[0][0] + scenario.joint[0][1],
            scenario.joint[1][0] + scenario.joint[1][1]};
}

std::array<double, 2> outcome_marginals(const EnsembleScenario& scenario) {
    return {scenario.joint[0][0] + scenario.joint[1][0],
            scenario.joint[0][1] + scenario.joint[1][1]};
}

EnsembleScenario scenario_from_conditionals(const ContextDistribution& p,
                                            const TransitionMatrix& conditional,
                                            const TransitionMatrix& disturbed,
                                            std::uint64_t n, std::uint64_t seed,
                                            int replications, bool pass_through) {
    require_two_contexts(p, conditional);
    EnsembleScenario scenario{
        {{{p[0] * conditional(0, 0), p[0] * conditional(0, 1)},
          {p[1] * conditional(1, 0), p[1] * conditional(1, 1)}}},
        disturbed, n, seed, replications, pass_through};
    validate(scenario);
    return scenario;
}

EnsembleScenario make_pass_through_scenario(const ContextDistribution& p,
                                            const TransitionMatrix& conditional,
                                            std::uint64_t n, std::uint64_t seed,
                                            int replications) {
    return scenario_from_conditionals(p, conditional, conditional, n, seed, replications, true);
}

EnsembleScenario make_decoherence_scenario(const ContextDistribution& p,
                                           const TransitionMatrix& conditional,
                                           double shift, std::uint64_t n,
                                           std::uint64_t seed, int replications) {
    require_two_contexts(p, conditional);
    if (!std::isfinite(shift)) throw InvalidShift("decoherence shift must be finite");
    if (shift == 0.0) return make_pass_through_scenario(p, conditional, n, seed, replications);

    // Row 2 compensates row 1 so the outcome marginals stay where they were:
    // p_1 * shift + p_2 * offset = 0.
    const double offset = -shift * p[0] / p[1];
    const std::vector<std::vector<double>> rows = {
        {conditional(0, 0) + shift, conditional(0, 1) - shift},
        {conditional(1, 0) + offset, conditional(1, 1) - offset}};
    for (const auto& row : rows) {
        for (double v : row) {
            if (!(v >= kProbabilityFloor && v < 1.0)) {
                throw InvalidShift("decoherence shift pushes a transition probability out of (0, 1)");
            }
        }
    }
    return scenario_from_conditionals(p, conditional, TransitionMatrix(rows), n, seed,
                                      replications, false);
}

CountTable simulate_counts(const EnsembleScenario& scenario, std::uint64_t stream) {
    validate(scenario);
    rng::UnitUniform uniform(rng::derive_stream_seed(scenario.seed, stream));

    CountTable table{};
    table.total = scenario.n;

    // Stage one: N draws from the joint, categories in row-major order.
    const double c0 = scenario.joint[0][0];
    const double c1 = c0 + scenario.joint[0][1];
    const double c2 = c1 + scenario.joint[1][0];
    for (std::uint64_t k = 0; k < scenario.n; ++k) {
        const double v = uniform.next();
        if (v < c0) ++table.n_counts[0][0];
        else if (v < c1) ++table.n_counts[0][1];
        else if (v < c2) ++table.n_counts[1][0];
        else ++table.n_counts[1][1];
    }
    for (std::size_t i = 0; i < 2; ++i) {
        table.context_totals[i] = table.n_counts[i][0] + table.n_counts[i][1];
        if (table.context_totals[i] == 0) {
            throw EmptyContext("context " + std::to_string(i + 1) +
                               " received no elements; increase the ensemble size n");
        }
    }

    if (scenario.pass_through) {
        table.m_counts = table.n_counts;
        return table;
    }

    // Stage two: per context, redraw the N_i selected elements from the
    // disturbed row (a Bernoulli split between the two outcomes).
    for (std::size_t i = 0; i < 2; ++i) {
        const double first = scenario.disturbed(i, 0);
        std::uint64_t hits = 0;
        for (std::uint64_t k = 0; k < table.context_totals[i]; ++k) {
            hits += uniform.next() < first ? 1 : 0;
        }
        table.m_counts[i][0] = hits;
        table.m_counts[i][1] = table.context_totals[i] - hits;
    }
    return table;
}

namespace {

TracePoint point_from_counts(const CountTable& c, std::uint64_t size, int replication) {
    TracePoint pt;
    pt.ensemble_size = size;
    pt.replication = replication;

    const double n_total = static_cast<double>(c.total);
    const auto& n = c.n_counts;
    const auto& m = c.m_counts;
    const double n1 = static_cast<double>(c.context_totals[0]);
    const double n2 = static_cast<double>(c.context_totals[1]);

    pt.p1 = n1 / n_total;
    pt.p11 = static_cast<double>(m[0][0]) / n1;
    pt.p12 = static_cast<double>(m[0][1]) / n1;
    pt.p21 = static_cast<double>(m[1][0]) / n2;
    pt.p22 = static_cast<double>(m[1][1]) / n2;
    pt.q1 = static_cast<double>(n[0][0] + n[1][0]) / n_total;
    pt.q2 = static_cast<double>(n[0][1] + n[1][1]) / n_total;

    pt.valid = true;
    double* deltas[2] = {&pt.delta1, &pt.delta2};
    double* lambdas[2] = {&pt.lambda1, &pt.lambda2};
    for (std::size_t j = 0; j < 2; ++j) {
        // Counts are unsigned; go through double before subtracting.
        const double diff = (static_cast<double>(n[0][j]) - static_cast<double>(m[0][j])) +
                            (static_cast<double>(n[1][j]) - static_cast<double>(m[1][j]));
        *deltas[j] = diff / n_total;
        if (m[0][j] == 0 || m[1][j] == 0) {
            *lambdas[j] = std::numeric_limits<double>::quiet_NaN();
            pt.valid = false;
        } else {
            *lambdas[j] =
                diff / (2.0 * std::sqrt(static_cast<double>(m[0][j]) * static_cast<double>(m[1][j])));
        }
    }
    return pt;
}

// Pairwise summation keeps the reduction order independent of how many
// threads produced the points, so serial and parallel studies match bitwise.
double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

}  // namespace

InterferenceProfile empirical_profile(const CountTable& counts, double behaviour_tol) {
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (counts.m_counts[i][j] == 0) {
                throw UndefinedCoefficient("empirical lambda undefined: count m_" +
                                           std::to_string(i + 1) + std::to_string(j + 1) +
                                           " is zero");
            }
        }
    }
    const TracePoint pt = point_from_counts(counts, counts.total, 0);
    InterferenceProfile profile;
    profile.lambdas = {pt.lambda1, pt.lambda2};
    profile.deltas = {pt.delta1, pt.delta2};
    const ClassifyTolerances tol{behaviour_tol, behaviour_tol};
    profile.behaviour = classify_lambdas(profile.lambdas, tol);
    for (std::size_t j = 0; j < 2; ++j) {
        profile.phases.push_back(phase_from_lambda(profile.lambdas[j], tol.lambda_boundary));
        profile.family.push_back({j, 0, 1, profile.deltas[j], profile.lambdas[j]});
    }
    return profile;
}

ConvergenceTrace convergence_study(const EnsembleScenario& scenario,
                                   const std::vector<std::uint64_t>& schedule,
                                   RunMode mode) {
    validate(scenario);
    if (schedule.empty()) throw Error("convergence schedule must not be empty");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] == 0) throw Error("convergence schedule entries must be positive");
        if (i > 0 && schedule[i] <= schedule[i - 1]) {
            throw Error("convergence schedule must be strictly increasing");
        }
    }

    ConvergenceTrace trace;
    trace.schedule = schedule;

    const int reps = scenario.replications;
    const long long total = static_cast<long long>(schedule.size()) * reps;
    trace.points.resize(static_cast<std::size_t>(total));

    std::exception_ptr failure = nullptr;
    const bool parallel = mode == RunMode::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
    (void)parallel;
#endif
    for (long long t = 0; t < total; ++t) {
        try {
            const std::size_t size_index = static_cast<std::size_t>(t) / reps;
            EnsembleScenario cell = scenario;
            cell.n = schedule[size_index];
            // Stream ids are laid out schedule-major, replication-minor, so
            // the id equals the flat task index; each cell is reproducible
            // on its own no matter which thread runs it.
            const CountTable counts = simulate_counts(cell, static_cast<std::uint64_t>(t));
            trace.points[static_cast<std::size_t>(t)] =
                point_from_counts(counts, cell.n, static_cast<int>(t % reps));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t si = 0; si < schedule.size(); ++si) {
        ConvergenceSummary summary;
        summary.ensemble_size = schedule[si];
        for (std::size_t j = 0; j < 2; ++j) {
            std::vector<double> values;
            values.reserve(static_cast<std::size_t>(reps));
            for (int r = 0; r < reps; ++r) {
                const TracePoint& pt = trace.points[si * reps + r];
                if (pt.valid) values.push_back(j == 0 ? pt.lambda1 : pt.lambda2);
            }
            summary.valid_points = static_cast<int>(values.size());
            if (values.empty()) {
                summary.lambda_mean[j] = std::numeric_limits<double>::quiet_NaN();
                summary.lambda_stddev[j] = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            const double mean = pairwise_sum(values.data(), values.size()) /
                                static_cast<double>(values.size());
            summary.lambda_mean[j] = mean;
            if (values.size() < 2) {
                summary.lambda_stddev[j] = 0.0;
            } else {
                for (double& v : values) v = (v - mean) * (v - mean);
                summary.lambda_stddev[j] =
                    std::sqrt(pairwise_sum(values.data(), values.size()) /
                              static_cast<double>(values.size() - 1));
            }
        }
        trace.summaries.push_back(summary);
    }
    return trace;
}

InterferenceProfile analytic_profile(const EnsembleScenario& scenario) {
    validate(scenario);
    const auto pm = context_marginals(scenario);
    const ContextDistribution p({pm[0], pm[1]});
    if (scenario.pass_through) {
        // Stage two copies stage one, so every delta is identically zero.
        const TransitionMatrix conditional({{scenario.joint[0][0] / pm[0], scenario.joint[0][1] / pm[0]},
                                            {scenario.joint[1][0] / pm[1], scenario.joint[1][1] / pm[1]}});
        return profile_from_lambdas(p, conditional, 0.0, 0.0);
    }
    const auto qm = outcome_marginals(scenario);
    return interference_coefficients(p, scenario.disturbed, OutcomeDistribution({qm[0], qm[1]}));
}

namespace {

void append_number(std::string& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

void append_number(std::string& out, std::uint64_t v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

}  // namespace

std::string trace_to_csv(const ConvergenceTrace& trace) {
    std::string out = "N,replication,p1,p11,p12,p21,p22,q1,q2,delta1,delta2,lambda1,lambda2,valid\n";
    for (const TracePoint& pt : trace.points) {
        append_number(out, pt.ensemble_size);
        out += ',';
        append_number(out, static_cast<std::uint64_t>(pt.replication));
        for (double v : {pt.p1, pt.p11, pt.p12, pt.p21, pt.p22, pt.q1, pt.q2, pt.delta1,
                         pt.delta2, pt.lambda1, pt.lambda2}) {
            out += ',';
            append_number(out, v);
        }
        out += ',';
        out += pt.valid ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace contextprob
