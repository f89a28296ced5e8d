#include "contextprob/probability.hpp"

#include <algorithm>
#include <cmath>

namespace contextprob {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DegenerateProbability(msg);
}

// Two-outcome weight 2 sqrt(p_k p_l p_ki p_li) appearing under every lambda.
double interference_weight(double pk, double pl, double pki, double pli) {
    return 2.0 * std::sqrt(pk * pl * pki * pli);
}

}  // namespace

ContextDistribution::ContextDistribution(std::vector<double> probs, double floor)
    : probs_(std::move(probs)) {
    require(probs_.size() >= 2, "context distribution needs at least two contexts");
    double sum = 0.0;
    for (double p : probs_) {
        require(std::isfinite(p) && p >= floor, "context probabilities must be strictly positive");
        sum += p;
    }
    require(std::abs(sum - 1.0) <= kDistributionSumTol, "context probabilities must sum to 1");
}

TransitionMatrix::TransitionMatrix(std::vector<std::vector<double>> rows, double floor)
    : rows_(std::move(rows)) {
    const std::size_t m = rows_.size();
    require(m >= 2, "transition matrix needs at least two contexts");
    for (const auto& row : rows_) {
        require(row.size() == m, "transition matrix must be square");
        double sum = 0.0;
        for (double p : row) {
            require(std::isfinite(p) && p >= floor, "transition probabilities must be strictly positive");
            sum += p;
        }
        require(std::abs(sum - 1.0) <= kDistributionSumTol, "transition matrix rows must sum to 1");
    }
}

bool TransitionMatrix::is_double_stochastic(double tol) const {
    for (std::size_t j = 0; j < size(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < size(); ++i) col += rows_[i][j];
        if (std::abs(col - 1.0) > tol) return false;
    }
    return true;
}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs, double sum_tol)
    : probs_(std::move(probs)) {
    require(probs_.size() >= 2, "outcome distribution needs at least two outcomes");
    double sum = 0.0;
    for (double q : probs_) {
        require(std::isfinite(q) && q >= 0.0 && q <= 1.0, "outcome probabilities must lie in [0, 1]");
        sum += q;
    }
    require(std::abs(sum - 1.0) <= sum_tol, "outcome probabilities must sum to 1");
}

std::string to_string(Behaviour b) {
    switch (b) {
        case Behaviour::Classical: return "C";
        case Behaviour::Trigonometric: return "T";
        case Behaviour::Hyperbolic: return "H";
        case Behaviour::HyperTrigonometric: return "HT";
    }
    return "?";
}

Behaviour classify_lambdas(const std::vector<double>& lambdas, const ClassifyTolerances& tol) {
    bool all_zero = true, all_trig = true, all_hyper = true;
    for (double lambda : lambdas) {
        const double a = std::abs(lambda);
        all_zero = all_zero && a <= tol.lambda_zero;
        const bool trig = a <= 1.0 + tol.lambda_boundary;
        all_trig = all_trig && trig;
        all_hyper = all_hyper && !trig;
    }
    if (all_zero) return Behaviour::Classical;
    if (all_trig) return Behaviour::Trigonometric;
    if (all_hyper) return Behaviour::Hyperbolic;
    return Behaviour::HyperTrigonometric;
}

PhaseRepresentation phase_from_lambda(double lambda, double boundary_tol) {
    const double a = std::abs(lambda);
    if (a <= 1.0 + boundary_tol) {
        // Values straddling +/-1 by no more than the tolerance are clamped
        // onto the trigonometric branch.
        return {PhaseKind::Cos, std::acos(std::clamp(lambda, -1.0, 1.0)), 1};
    }
    const int sign = lambda > 0.0 ? 1 : -1;
    return {PhaseKind::Cosh, std::acosh(a), sign};
}

double lambda_from_phase(const PhaseRepresentation& phase) {
    if (phase.kind == PhaseKind::Cos) return std::cos(phase.theta);
    return static_cast<double>(phase.sign) * std::cosh(phase.theta);
}

namespace {

void require_dichotomic(const ContextDistribution& p, const TransitionMatrix& P) {
    if (p.size() != 2 || P.size() != 2) {
        throw Error("this operation is defined for the dichotomic (2x2) case only");
    }
}

std::vector<PhaseRepresentation> phases_for(const std::vector<double>& lambdas, double boundary_tol) {
    std::vector<PhaseRepresentation> phases;
    phases.reserve(lambdas.size());
    for (double lambda : lambdas) phases.push_back(phase_from_lambda(lambda, boundary_tol));
    return phases;
}

}  // namespace

InterferenceProfile interference_coefficients(const ContextDistribution& p,
                                              const TransitionMatrix& P,
                                              const OutcomeDistribution& q,
                                              const ClassifyTolerances& tol) {
    require_dichotomic(p, P);
    require(q.size() == 2, "outcome distribution must have two outcomes here");

    InterferenceProfile profile;
    for (std::size_t j = 0; j < 2; ++j) {
        require(q[j] >= kProbabilityFloor, "interference coefficients need strictly positive q");
        const double averaged = p[0] * P(0, j) + p[1] * P(1, j);
        const double delta = q[j] - averaged;
        const double lambda = delta / interference_weight(p[0], p[1], P(0, j), P(1, j));
        profile.deltas.push_back(delta);
        profile.lambdas.push_back(lambda);
        profile.family.push_back({j, 0, 1, delta, lambda});
    }
    profile.behaviour = classify_lambdas(profile.lambdas, tol);
    profile.phases = phases_for(profile.lambdas, tol.lambda_boundary);
    return profile;
}

double coupling_coefficient(const TransitionMatrix& P) {
    if (P.size() != 2) throw Error("coupling coefficient is defined for the 2x2 case only");
    return std::sqrt(P(0, 1) * P(1, 1) / (P(0, 0) * P(1, 0)));
}

bool check_orthogonality(const InterferenceProfile& profile, double coupling, double tol) {
    if (profile.lambdas.size() != 2) {
        throw Error("orthogonality check needs exactly two coefficients");
    }
    return std::abs(profile.lambdas[0] + coupling * profile.lambdas[1]) <= tol;
}

OutcomeDistribution forward_transform(const ContextDistribution& p,
                                      const TransitionMatrix& P,
                                      const InterferenceProfile& profile,
                                      double ortho_tol) {
    require_dichotomic(p, P);
    const double coupling = coupling_coefficient(P);
    if (!check_orthogonality(profile, coupling, ortho_tol)) {
        throw OrthogonalityViolated("forward transform: lambda_1 != -K lambda_2, result would not normalize");
    }

    std::vector<double> q(2);
    for (std::size_t j = 0; j < 2; ++j) {
        q[j] = p[0] * P(0, j) + p[1] * P(1, j) +
               interference_weight(p[0], p[1], P(0, j), P(1, j)) * profile.lambdas[j];
        // Tolerate pure rounding, reject anything larger.
        constexpr double slack = 1e-12;
        if (q[j] < -slack || q[j] > 1.0 + slack) {
            throw NonphysicalResult("forward transform: q_" + std::to_string(j + 1) +
                                    " = " + std::to_string(q[j]) + " leaves [0, 1]");
        }
        q[j] = std::clamp(q[j], 0.0, 1.0);
    }
    return OutcomeDistribution(q);
}

LambdaInterval lambda_admissible_interval(const ContextDistribution& p,
                                          const TransitionMatrix& P) {
    require_dichotomic(p, P);
    // q_1(lambda_1) = a + b lambda_1 must stay in [0, 1]; q_2 = 1 - q_1 is
    // then automatically fine because lambda_2 = -lambda_1 / K.
    const double a = p[0] * P(0, 0) + p[1] * P(1, 0);
    const double b = interference_weight(p[0], p[1], P(0, 0), P(1, 0));
    return {-a / b, (1.0 - a) / b};
}

InterferenceProfile profile_from_lambdas(const ContextDistribution& p,
                                         const TransitionMatrix& P,
                                         double lambda1, double lambda2,
                                         const ClassifyTolerances& tol) {
    require_dichotomic(p, P);
    InterferenceProfile profile;
    profile.lambdas = {lambda1, lambda2};
    for (std::size_t j = 0; j < 2; ++j) {
        const double delta =
            interference_weight(p[0], p[1], P(0, j), P(1, j)) * profile.lambdas[j];
        profile.deltas.push_back(delta);
        profile.family.push_back({j, 0, 1, delta, profile.lambdas[j]});
    }
    profile.behaviour = classify_lambdas(profile.lambdas, tol);
    profile.phases = phases_for(profile.lambdas, tol.lambda_boundary);
    return profile;
}

InterferenceProfile multi_valued_decomposition(const ContextDistribution& p,
                                               const TransitionMatrix& P,
                                               const OutcomeDistribution& q,
                                               const ClassifyTolerances& tol) {
    const std::size_t m = p.size();
    require(P.size() == m && q.size() == m,
            "contexts, transition matrix, and outcomes must share one dimension");
    for (std::size_t i = 0; i < m; ++i) {
        require(q[i] >= kProbabilityFloor, "multi-valued decomposition needs strictly positive q");
    }

    InterferenceProfile profile;
    const double pair_scale = 1.0 / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t l = k + 1; l < m; ++l) {
                const double delta =
                    pair_scale * (p[k] * (q[i] - P(k, i)) + p[l] * (q[i] - P(l, i)));
                const double lambda = delta / interference_weight(p[k], p[l], P(k, i), P(l, i));
                profile.deltas.push_back(delta);
                profile.lambdas.push_back(lambda);
                profile.family.push_back({i, k, l, delta, lambda});
            }
        }
    }
    profile.behaviour = classify_lambdas(profile.lambdas, tol);
    if (m == 2) profile.phases = phases_for(profile.lambdas, tol.lambda_boundary);
    return profile;
}

}  // namespace contextprob
