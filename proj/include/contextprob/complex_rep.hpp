#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "contextprob/probability.hpp"

namespace contextprob {

using ComplexAmplitude = std::complex<double>;

/// Normalize an angle to the principal interval (-pi, pi].
double normalize_phase(double phi);

/// State vector alpha = (sqrt(p_1) e^{i xi_1}, sqrt(p_2) e^{i xi_2}).
struct AmplitudeVector {
    std::array<ComplexAmplitude, 2> components;
};

/// True when |alpha_1|^2 + |alpha_2|^2 = 1 within tol.
bool is_decomposable(const AmplitudeVector& alpha, double tol = 1e-12);

/// Matrix of transition amplitudes beta_ij = sqrt(p_ij) e^{i gamma_ij}.
/// Row i collects the amplitudes leaving context i, so each row has unit
/// squared length; that is the type invariant, checked on construction.
class TransitionAmplitudeMatrix {
public:
    explicit TransitionAmplitudeMatrix(std::array<std::array<ComplexAmplitude, 2>, 2> entries);

    const ComplexAmplitude& operator()(std::size_t i, std::size_t j) const {
        return entries_[i][j];
    }

    ComplexAmplitude determinant() const;
    bool is_invertible(double tol = 1e-12) const;

private:
    std::array<std::array<ComplexAmplitude, 2>, 2> entries_;
};

AmplitudeVector amplitudes_from_context(const ContextDistribution& p,
                                        const std::array<double, 2>& xi);

TransitionAmplitudeMatrix matrix_from_probabilities(
    const TransitionMatrix& P, const std::array<std::array<double, 2>, 2>& gamma);

/// Row vector times matrix: beta_j = alpha_1 beta_1j + alpha_2 beta_2j.
AmplitudeVector compose(const AmplitudeVector& alpha, const TransitionAmplitudeMatrix& U);

/// q_j = |beta_j|^2.  Throws NotDecomposable when the squared moduli do not
/// sum to 1 within tol; no silent renormalization.
OutcomeDistribution born(const AmplitudeVector& beta, double tol = 1e-9);

/// How far born(compose(alpha, U)) is from summing to one:
///   defect = 2 Re[ alpha_1 conj(alpha_2) (beta_11 conj(beta_21) + beta_12 conj(beta_22)) ].
/// Zero for every alpha exactly when the rows of U are orthogonal.
double normalization_defect(const AmplitudeVector& alpha, const TransitionAmplitudeMatrix& U);

bool is_unitary(const TransitionAmplitudeMatrix& U, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Phase constraint gamma_1 = f(gamma_2) for representability
// ---------------------------------------------------------------------------
//
// Writing gamma_1 = gamma_11 - gamma_21, gamma_2 = gamma_12 - gamma_22, and
// eta = xi_1 - xi_2, decomposability of the composed state forces
//   cos(eta + gamma_1) = -K cos(eta + gamma_2).

enum class PhaseFamilyKind { Quantum, Memory };

/// One-parameter solution family gamma_1 = slope * gamma_2 + offset (mod 2 pi).
struct PhaseFamily {
    PhaseFamilyKind kind;
    double slope;
    double offset;
};

struct PhaseConstraintFamilies {
    double coupling;          // K of the underlying probability matrix
    bool double_stochastic;   // families exist only in this case
    std::vector<PhaseFamily> families;
};

/// For double stochastic P the constraint degenerates into two families:
/// the quantum one gamma_1 = gamma_2 + pi and the memory one
/// gamma_1 = -gamma_2 + (pi - 2 eta).  Otherwise `families` stays empty and
/// solve_phase_gamma1 gives the pointwise branches.
PhaseConstraintFamilies solve_phase_constraint(const TransitionMatrix& P, double eta);

/// Both branches gamma_1 = -eta +/- acos(-K cos(eta + gamma_2)), normalized
/// to (-pi, pi].  Throws NoSolution when |K cos(eta + gamma_2)| > 1.
std::pair<double, double> solve_phase_gamma1(const TransitionMatrix& P, double eta,
                                             double gamma2);

}  // namespace contextprob
