#include "contextprob/complex_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace contextprob {

namespace {

constexpr double kRowNormTol = 1e-12;

ComplexAmplitude row_inner(const TransitionAmplitudeMatrix& U, std::size_t r, std::size_t s) {
    return U(r, 0) * std::conj(U(s, 0)) + U(r, 1) * std::conj(U(s, 1));
}

}  // namespace

double normalize_phase(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(phi + std::numbers::pi, two_pi);
    if (r <= 0.0) r += two_pi;
    return r - std::numbers::pi;
}

bool is_decomposable(const AmplitudeVector& alpha, double tol) {
    const double total = std::norm(alpha.components[0]) + std::norm(alpha.components[1]);
    return std::abs(total - 1.0) <= tol;
}

TransitionAmplitudeMatrix::TransitionAmplitudeMatrix(
    std::array<std::array<ComplexAmplitude, 2>, 2> entries)
    : entries_(entries) {
    for (const auto& row : entries_) {
        const double norm = std::norm(row[0]) + std::norm(row[1]);
        if (std::abs(norm - 1.0) > kRowNormTol) {
            throw Error("transition amplitude rows must have unit squared length");
        }
    }
}

ComplexAmplitude TransitionAmplitudeMatrix::determinant() const {
    return entries_[0][0] * entries_[1][1] - entries_[0][1] * entries_[1][0];
}

bool TransitionAmplitudeMatrix::is_invertible(double tol) const {
    return std::abs(determinant()) > tol;
}

AmplitudeVector amplitudes_from_context(const ContextDistribution& p,
                                        const std::array<double, 2>& xi) {
    if (p.size() != 2) throw Error("amplitude vectors are two-component here");
    return {{std::polar(std::sqrt(p[0]), xi[0]), std::polar(std::sqrt(p[1]), xi[1])}};
}

TransitionAmplitudeMatrix matrix_from_probabilities(
    const TransitionMatrix& P, const std::array<std::array<double, 2>, 2>& gamma) {
    if (P.size() != 2) throw Error("transition amplitude matrices are 2x2 here");
    std::array<std::array<ComplexAmplitude, 2>, 2> entries;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            entries[i][j] = std::polar(std::sqrt(P(i, j)), gamma[i][j]);
    return TransitionAmplitudeMatrix(entries);
}

AmplitudeVector compose(const AmplitudeVector& alpha, const TransitionAmplitudeMatrix& U) {
    AmplitudeVector beta;
    for (std::size_t j = 0; j < 2; ++j) {
        beta.components[j] = alpha.components[0] * U(0, j) + alpha.components[1] * U(1, j);
    }
    return beta;
}

OutcomeDistribution born(const AmplitudeVector& beta, double tol) {
    std::vector<double> q = {std::norm(beta.components[0]), std::norm(beta.components[1])};
    const double total = q[0] + q[1];
    if (std::abs(total - 1.0) > tol) {
        throw NotDecomposable("born: squared amplitudes sum to " + std::to_string(total) +
                              ", state is not decomposable");
    }
    for (double& v : q) v = std::min(v, 1.0);
    return OutcomeDistribution(q, tol);
}

double normalization_defect(const AmplitudeVector& alpha, const TransitionAmplitudeMatrix& U) {
    const ComplexAmplitude cross =
        alpha.components[0] * std::conj(alpha.components[1]) * row_inner(U, 0, 1);
    return 2.0 * cross.real();
}

bool is_unitary(const TransitionAmplitudeMatrix& U, double tol) {
    return std::abs(row_inner(U, 0, 0) - 1.0) <= tol &&
           std::abs(row_inner(U, 1, 1) - 1.0) <= tol && std::abs(row_inner(U, 0, 1)) <= tol;
}

PhaseConstraintFamilies solve_phase_constraint(const TransitionMatrix& P, double eta) {
    PhaseConstraintFamilies out;
    out.coupling = coupling_coefficient(P);
    out.double_stochastic = P.is_double_stochastic();
    if (out.double_stochastic) {
        // cos(eta + gamma_1) = -cos(eta + gamma_2) splits into the two lines
        // below; the first keeps eta out of the relation entirely.
        out.families.push_back({PhaseFamilyKind::Quantum, 1.0, std::numbers::pi});
        out.families.push_back(
            {PhaseFamilyKind::Memory, -1.0, std::numbers::pi - 2.0 * eta});
    }
    return out;
}

std::pair<double, double> solve_phase_gamma1(const TransitionMatrix& P, double eta,
                                             double gamma2) {
    const double target = -coupling_coefficient(P) * std::cos(eta + gamma2);
    if (std::abs(target) > 1.0 + 1e-12) {
        throw NoSolution("phase constraint: |K cos(eta + gamma_2)| > 1, no gamma_1 exists");
    }
    const double branch = std::acos(std::clamp(target, -1.0, 1.0));
    return {normalize_phase(-eta + branch), normalize_phase(-eta - branch)};
}

}  // namespace contextprob
