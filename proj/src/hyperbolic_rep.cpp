#include "contextprob/hyperbolic_rep.hpp"

#include <algorithm>
#include <cmath>

namespace contextprob {

namespace {

void check_form(const GStandardForm& form) {
    if (form.sign != 1 && form.sign != -1) {
        throw Error("standard-form sign must be +1 or -1");
    }
    if (!(std::isfinite(form.p) && form.p >= kProbabilityFloor)) {
        throw DegenerateProbability("standard-form squared modulus must be strictly positive");
    }
}

}  // namespace

HyperbolicNumber g_inner_product(const GAmplitudeVector& z, const GAmplitudeVector& w) {
    return z.components[0] * conj(w.components[0]) + z.components[1] * conj(w.components[1]);
}

bool g_is_decomposable(const GAmplitudeVector& alpha, double tol) {
    const double total = sq_norm(alpha.components[0]) + sq_norm(alpha.components[1]);
    return std::abs(total - 1.0) <= tol;
}

HyperbolicNumber materialize(const GStandardForm& form) {
    check_form(form);
    return static_cast<double>(form.sign) * std::sqrt(form.p) * h_exp(form.gamma);
}

GTransitionMatrix::GTransitionMatrix(std::array<std::array<GStandardForm, 2>, 2> entries)
    : entries_(entries) {
    for (const auto& row : entries_) {
        for (const auto& form : row) check_form(form);
        if (std::abs(row[0].p + row[1].p - 1.0) > kDistributionSumTol) {
            throw DegenerateProbability("squared moduli of each row must sum to 1");
        }
    }
}

int GTransitionMatrix::sigma() const {
    return entries_[0][0].sign * entries_[0][1].sign * entries_[1][0].sign * entries_[1][1].sign;
}

double GTransitionMatrix::gamma_diff(std::size_t j) const {
    return entries_[0][j].gamma - entries_[1][j].gamma;
}

TransitionMatrix GTransitionMatrix::probabilities() const {
    return TransitionMatrix({{entries_[0][0].p, entries_[0][1].p},
                             {entries_[1][0].p, entries_[1][1].p}});
}

GAmplitudeVector g_amplitudes_from_context(const ContextDistribution& p,
                                           const std::array<int, 2>& signs,
                                           const std::array<double, 2>& xi) {
    if (p.size() != 2) throw Error("G amplitude vectors are two-component here");
    GAmplitudeVector alpha;
    for (std::size_t i = 0; i < 2; ++i) {
        alpha.components[i] = materialize({signs[i], p[i], xi[i]});
    }
    return alpha;
}

GTransitionMatrix g_matrix_from_probabilities(const TransitionMatrix& P,
                                              const std::array<std::array<int, 2>, 2>& signs,
                                              const std::array<std::array<double, 2>, 2>& gamma) {
    if (P.size() != 2) throw Error("G transition matrices are 2x2 here");
    std::array<std::array<GStandardForm, 2>, 2> entries;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) entries[i][j] = {signs[i][j], P(i, j), gamma[i][j]};
    return GTransitionMatrix(entries);
}

GAmplitudeVector g_compose(const GAmplitudeVector& alpha, const GTransitionMatrix& U) {
    GAmplitudeVector beta;
    for (std::size_t j = 0; j < 2; ++j) {
        beta.components[j] = alpha.components[0] * U.entry(0, j) + alpha.components[1] * U.entry(1, j);
    }
    return beta;
}

OutcomeDistribution g_born(const GAmplitudeVector& beta, double tol) {
    std::vector<double> q(2);
    for (std::size_t j = 0; j < 2; ++j) {
        q[j] = sq_norm(beta.components[j]);
        if (q[j] < -tol) {
            throw NonphysicalState("g_born: component " + std::to_string(j + 1) +
                                   " has squared modulus " + std::to_string(q[j]) +
                                   " < 0; the state left the positive cone");
        }
        q[j] = std::clamp(q[j], 0.0, 1.0);
    }
    if (std::abs(q[0] + q[1] - 1.0) > tol) {
        throw NotDecomposable("g_born: squared moduli sum to " + std::to_string(q[0] + q[1]) +
                              ", state is not decomposable");
    }
    return OutcomeDistribution(q, tol);
}

bool g_is_unitary(const GTransitionMatrix& U, double tol) {
    const GAmplitudeVector row0 = {{U.entry(0, 0), U.entry(0, 1)}};
    const GAmplitudeVector row1 = {{U.entry(1, 0), U.entry(1, 1)}};
    const HyperbolicNumber n0 = g_inner_product(row0, row0);
    const HyperbolicNumber n1 = g_inner_product(row1, row1);
    const HyperbolicNumber cross = g_inner_product(row0, row1);
    return std::abs(n0.x - 1.0) <= tol && std::abs(n0.y) <= tol &&
           std::abs(n1.x - 1.0) <= tol && std::abs(n1.y) <= tol &&
           std::abs(cross.x) <= tol && std::abs(cross.y) <= tol;
}

GUnitarityReport g_unitary_characterization(const GTransitionMatrix& U, double tol) {
    GUnitarityReport report;
    report.double_stochastic = U.probabilities().is_double_stochastic(tol);
    report.sigma_ok = U.sigma() == -1;
    report.phase_ok = std::abs(U.gamma_diff(0) - U.gamma_diff(1)) <= tol;
    report.unitary = report.double_stochastic && report.sigma_ok && report.phase_ok;
    return report;
}

double admissible_h_phase_bound(double s, double t) {
    if (!(s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0)) {
        throw DegenerateProbability("h-phase bound needs s, t strictly inside (0, 1)");
    }
    return (s * t + (1.0 - s) * (1.0 - t)) / (2.0 * std::sqrt(s * (1.0 - s) * t * (1.0 - t)));
}

GPhaseConstraintFamilies g_solve_phase_constraint(const TransitionMatrix& P, int sigma,
                                                  double eta) {
    if (sigma != -1) {
        throw NoSolution("hyperbolic phase constraint: sigma must be -1, signs of the matrix "
                         "cannot cancel the direct terms otherwise");
    }
    GPhaseConstraintFamilies out;
    out.coupling = coupling_coefficient(P);
    out.double_stochastic = P.is_double_stochastic();
    if (out.double_stochastic) {
        // cosh(eta + gamma_1) = cosh(eta + gamma_2): equal or opposite arguments.
        out.families.push_back({GPhaseFamilyKind::Aligned, 1.0, 0.0});
        out.families.push_back({GPhaseFamilyKind::Memory, -1.0, -2.0 * eta});
    }
    return out;
}

std::pair<double, double> g_solve_phase_gamma1(const TransitionMatrix& P, int sigma,
                                               double eta, double gamma2) {
    if (sigma != -1) {
        throw NoSolution("hyperbolic phase constraint: sigma must be -1");
    }
    const double target = coupling_coefficient(P) * std::cosh(eta + gamma2);
    if (target < 1.0 - 1e-12) {
        throw NoSolution("hyperbolic phase constraint: K cosh(eta + gamma_2) < 1, no gamma_1 exists");
    }
    const double branch = std::acosh(std::max(target, 1.0));
    return {-eta + branch, -eta - branch};
}

}  // namespace contextprob
