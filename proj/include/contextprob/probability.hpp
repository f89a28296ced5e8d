#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "contextprob/errors.hpp"

namespace contextprob {

/// Entries below this are treated as zero and rejected where strict
/// positivity is required.
inline constexpr double kProbabilityFloor = 1e-300;

/// Absolute tolerance for "sums to one" checks on exact (non-sampled) input.
inline constexpr double kDistributionSumTol = 1e-12;

/// Probabilities p_i of the selection contexts.  Strictly positive, sum 1.
class ContextDistribution {
public:
    explicit ContextDistribution(std::vector<double> probs, double floor = kProbabilityFloor);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

/// Row-stochastic matrix of transition probabilities p_ij = P(a_j | c_i):
/// row = context, column = outcome.  Entries strictly positive, rows sum 1.
class TransitionMatrix {
public:
    explicit TransitionMatrix(std::vector<std::vector<double>> rows, double floor = kProbabilityFloor);

    std::size_t size() const { return rows_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    /// True when every column also sums to 1 within tol.
    bool is_double_stochastic(double tol = kDistributionSumTol) const;

private:
    std::vector<std::vector<double>> rows_;
};

/// Probabilities q_j of the outcomes without context selection.  Entries in
/// [0, 1] (zeros allowed: extreme interference can extinguish an outcome).
class OutcomeDistribution {
public:
    explicit OutcomeDistribution(std::vector<double> probs, double sum_tol = kDistributionSumTol);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

// ---------------------------------------------------------------------------
// Interference classification
// ---------------------------------------------------------------------------

enum class Behaviour { Classical, Trigonometric, Hyperbolic, HyperTrigonometric };

/// Short codes "C", "T", "H", "HT".
std::string to_string(Behaviour b);

struct ClassifyTolerances {
    double lambda_zero = 1e-9;      // |lambda| below => classical
    double lambda_boundary = 1e-9;  // |lambda| within 1 +/- this => trigonometric side
};

/// |lambda| <= 1 admits lambda = cos(theta); |lambda| > 1 needs
/// lambda = sign * cosh(theta).  The sign field is +1 for the cos kind.
enum class PhaseKind { Cos, Cosh };

struct PhaseRepresentation {
    PhaseKind kind;
    double theta;  // acos branch in [0, pi]; acosh branch with theta >= 0
    int sign;      // +1 or -1; meaningful for the cosh kind
};

/// One interference coefficient of the pairwise family: context pair (k, l)
/// acting on outcome `outcome` (all indices zero-based).
struct LambdaEntry {
    std::size_t outcome;
    std::size_t ctx_k;
    std::size_t ctx_l;
    double delta;
    double lambda;
};

struct InterferenceProfile {
    std::vector<double> lambdas;
    std::vector<double> deltas;
    Behaviour behaviour;
    std::vector<PhaseRepresentation> phases;  // filled for the dichotomic case
    std::vector<LambdaEntry> family;          // outcome-major, pairs (k < l) in order
};

/// C when all |lambda| are negligible, T when all fit the cos range, H when
/// all exceed it, HT when mixed.
Behaviour classify_lambdas(const std::vector<double>& lambdas,
                           const ClassifyTolerances& tol = {});

PhaseRepresentation phase_from_lambda(double lambda, double boundary_tol = 1e-9);
double lambda_from_phase(const PhaseRepresentation& phase);

// ---------------------------------------------------------------------------
// Dichotomic (two-context, two-outcome) calculus
// ---------------------------------------------------------------------------

/// Interference coefficients lambda_j of q relative to (p, P):
///   delta_j  = q_j - (p_1 p_1j + p_2 p_2j)
///   lambda_j = delta_j / (2 sqrt(p_1 p_1j p_2 p_2j))
/// Requires the dichotomic case and strictly positive q.
InterferenceProfile interference_coefficients(const ContextDistribution& p,
                                              const TransitionMatrix& P,
                                              const OutcomeDistribution& q,
                                              const ClassifyTolerances& tol = {});

/// K = sqrt(p_12 p_22 / (p_11 p_21)).  K = 1 exactly when P is double
/// stochastic.
double coupling_coefficient(const TransitionMatrix& P);

/// Normalization forces lambda_1 = -K lambda_2; true when
/// |lambda_1 + K lambda_2| <= tol.
bool check_orthogonality(const InterferenceProfile& profile, double coupling, double tol = 1e-9);

/// q_j = p_1 p_1j + p_2 p_2j + 2 sqrt(p_1 p_1j p_2 p_2j) lambda_j.
/// Throws OrthogonalityViolated when the profile cannot normalize and
/// NonphysicalResult when some q_j leaves [0, 1].
OutcomeDistribution forward_transform(const ContextDistribution& p,
                                      const TransitionMatrix& P,
                                      const InterferenceProfile& profile,
                                      double ortho_tol = 1e-9);

/// Closed interval of lambda_1 values (with lambda_2 = -lambda_1 / K) for
/// which the forward transform lands inside [0, 1]^2.
struct LambdaInterval {
    double lo;
    double hi;
};

LambdaInterval lambda_admissible_interval(const ContextDistribution& p,
                                          const TransitionMatrix& P);

/// Profile with prescribed coefficients (lambda_1, lambda_2); deltas and
/// phases are derived from (p, P).
InterferenceProfile profile_from_lambdas(const ContextDistribution& p,
                                         const TransitionMatrix& P,
                                         double lambda1, double lambda2,
                                         const ClassifyTolerances& tol = {});

// ---------------------------------------------------------------------------
// Multi-context generalization
// ---------------------------------------------------------------------------

/// Pairwise interference family for M >= 2 contexts over M outcomes:
///   delta_kl^(i)  = [p_k (q_i - p_ki) + p_l (q_i - p_li)] / (M - 1)
///   lambda_kl^(i) = delta_kl^(i) / (2 sqrt(p_k p_l p_ki p_li))
/// The deltas of each outcome sum to q_i - sum_k p_k p_ki exactly.  For
/// M = 2 this collapses to interference_coefficients.
InterferenceProfile multi_valued_decomposition(const ContextDistribution& p,
                                               const TransitionMatrix& P,
                                               const OutcomeDistribution& q,
                                               const ClassifyTolerances& tol = {});

}  // namespace contextprob
