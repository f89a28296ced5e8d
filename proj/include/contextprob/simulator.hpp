#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "contextprob/probability.hpp"

namespace contextprob {

/// A two-stage counting experiment.  Stage one draws N elements from the
/// joint distribution pi over (context, outcome) and records counts n_ij.
/// Stage two takes the N_i elements selected into context i and redraws
/// their outcomes from the disturbed row i, giving counts m_ij.  With
/// pass_through set the redraw is skipped and m := n, modelling a selection
/// that does not disturb the system.
struct EnsembleScenario {
    std::array<std::array<double, 2>, 2> joint;  // pi[i][j] = P(context i, outcome j)
    TransitionMatrix disturbed;                  // rows drive the stage-two redraw
    std::uint64_t n = 0;                         // ensemble size N
    std::uint64_t seed = 0;
    int replications = 1;
    bool pass_through = false;
};

/// Validates entries, marginals, and sizes; throws DegenerateProbability.
void validate(const EnsembleScenario& scenario);

/// Context marginals p_i = sum_j pi[i][j].
std::array<double, 2> context_marginals(const EnsembleScenario& scenario);

/// Outcome marginals q_j = sum_i pi[i][j], the "no selection" statistics.
std::array<double, 2> outcome_marginals(const EnsembleScenario& scenario);

/// Joint built from p and per-context conditional rows.
EnsembleScenario scenario_from_conditionals(const ContextDistribution& p,
                                            const TransitionMatrix& conditional,
                                            const TransitionMatrix& disturbed,
                                            std::uint64_t n, std::uint64_t seed,
                                            int replications, bool pass_through = false);

/// Scenario whose stage two repeats stage one exactly (m = n), so every
/// empirical interference coefficient is identically zero.
EnsembleScenario make_pass_through_scenario(const ContextDistribution& p,
                                            const TransitionMatrix& conditional,
                                            std::uint64_t n, std::uint64_t seed,
                                            int replications);

/// Selection that shifts outcome mass inside each context without moving the
/// outcome marginals: row 1 gains `shift` on outcome 1, row 2 compensates
/// with -shift * p_1 / p_2.  The deltas stay macroscopic while the lambdas
/// vanish, the signature of decoherence.  Throws InvalidShift when a shifted
/// entry leaves (0, 1).  shift = 0 degenerates to the pass-through scenario.
EnsembleScenario make_decoherence_scenario(const ContextDistribution& p,
                                           const TransitionMatrix& conditional,
                                           double shift, std::uint64_t n,
                                           std::uint64_t seed, int replications);

/// Raw counts of one replication.
struct CountTable {
    std::array<std::array<std::uint64_t, 2>, 2> n_counts;  // stage one
    std::array<std::array<std::uint64_t, 2>, 2> m_counts;  // stage two
    std::uint64_t total = 0;                               // N
    std::array<std::uint64_t, 2> context_totals{};         // N_i
};

/// Runs one replication on the given stream (stream 0 by default).  All
/// draws come from one generator in a fixed order - N joint draws, then the
/// context-1 redraws, then the context-2 redraws - so a (seed, stream) pair
/// fully determines the table.  Throws EmptyContext when some N_i = 0; rerun
/// with a larger n.
CountTable simulate_counts(const EnsembleScenario& scenario, std::uint64_t stream = 0);

/// Empirical interference profile of a count table:
///   delta_j  = [(n_1j - m_1j) + (n_2j - m_2j)] / N
///   lambda_j = [(n_1j - m_1j) + (n_2j - m_2j)] / (2 sqrt(m_1j m_2j))
/// Behaviour is classified with a loose zero band (finite-N noise makes an
/// exact zero unobservable).  Throws UndefinedCoefficient if some m_ij = 0.
InterferenceProfile empirical_profile(const CountTable& counts, double behaviour_tol = 0.02);

/// Per-replication row of a convergence study.  `valid` is false when some
/// m_ij = 0 made the lambdas undefined (the row then carries NaN lambdas and
/// is excluded from the summary statistics).
struct TracePoint {
    std::uint64_t ensemble_size = 0;
    int replication = 0;
    double p1 = 0, p11 = 0, p12 = 0, p21 = 0, p22 = 0;
    double q1 = 0, q2 = 0;
    double delta1 = 0, delta2 = 0;
    double lambda1 = 0, lambda2 = 0;
    bool valid = false;
};

struct ConvergenceSummary {
    std::uint64_t ensemble_size = 0;
    std::array<double, 2> lambda_mean{};
    std::array<double, 2> lambda_stddev{};  // sample stddev across replications
    int valid_points = 0;
};

struct ConvergenceTrace {
    std::vector<std::uint64_t> schedule;
    std::vector<TracePoint> points;  // schedule-major, replication-minor
    std::vector<ConvergenceSummary> summaries;
};

enum class RunMode { Serial, Parallel };

/// Runs `replications` tables at every ensemble size in `schedule`
/// (strictly increasing).  Each (size, replication) cell owns the stream
/// size_index * replications + replication, which makes the serial and the
/// OpenMP-parallel runs bit-identical; Serial mode is kept as the reference
/// the parallel path is tested against.
ConvergenceTrace convergence_study(const EnsembleScenario& scenario,
                                   const std::vector<std::uint64_t>& schedule,
                                   RunMode mode = RunMode::Parallel);

/// Interference coefficients the study should converge to, computed
/// analytically from the scenario's marginals and disturbed rows.  For a
/// pass-through scenario the target is lambda = 0 regardless of the rows.
InterferenceProfile analytic_profile(const EnsembleScenario& scenario);

/// CSV with header
///   N,replication,p1,p11,p12,p21,p22,q1,q2,delta1,delta2,lambda1,lambda2,valid
/// one row per trace point, '.' decimal separator, shortest round-trip
/// number formatting; byte-identical across runs and platforms for a fixed
/// seed.
std::string trace_to_csv(const ConvergenceTrace& trace);

}  // namespace contextprob
