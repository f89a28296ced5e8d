#pragma once

#include <array>
#include <utility>
#include <vector>

#include "contextprob/hyperbolic.hpp"
#include "contextprob/probability.hpp"

namespace contextprob {

/// State vector over G: alpha_i = sign_i sqrt(p_i) e^{j xi_i}.
struct GAmplitudeVector {
    std::array<HyperbolicNumber, 2> components;
};

/// G-analogue of the inner product: <z, w> = z_1 conj(w_1) + z_2 conj(w_2).
/// G-valued because the algebra is not a field.
HyperbolicNumber g_inner_product(const GAmplitudeVector& z, const GAmplitudeVector& w);

/// True when sq_norm(alpha_1) + sq_norm(alpha_2) = 1 within tol.
bool g_is_decomposable(const GAmplitudeVector& alpha, double tol = 1e-12);

/// Amplitude in standard form sign * sqrt(p) * e^{j gamma}, kept factored so
/// that sign, modulus, and hyperbolic phase stay exact.
struct GStandardForm {
    int sign;      // +1 or -1
    double p;      // squared modulus, strictly positive
    double gamma;  // hyperbolic phase
};

HyperbolicNumber materialize(const GStandardForm& form);

/// 2x2 matrix of standard-form amplitudes whose squared moduli form a
/// row-stochastic probability matrix.
class GTransitionMatrix {
public:
    explicit GTransitionMatrix(std::array<std::array<GStandardForm, 2>, 2> entries);

    const GStandardForm& form(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    HyperbolicNumber entry(std::size_t i, std::size_t j) const { return materialize(entries_[i][j]); }

    /// Product of all four entry signs.
    int sigma() const;

    /// Column phase difference gamma_j = gamma_1j - gamma_2j.
    double gamma_diff(std::size_t j) const;

    /// The underlying probability matrix p_ij = |beta_ij|^2.
    TransitionMatrix probabilities() const;

private:
    std::array<std::array<GStandardForm, 2>, 2> entries_;
};

GAmplitudeVector g_amplitudes_from_context(const ContextDistribution& p,
                                           const std::array<int, 2>& signs,
                                           const std::array<double, 2>& xi);

GTransitionMatrix g_matrix_from_probabilities(const TransitionMatrix& P,
                                              const std::array<std::array<int, 2>, 2>& signs,
                                              const std::array<std::array<double, 2>, 2>& gamma);

GAmplitudeVector g_compose(const GAmplitudeVector& alpha, const GTransitionMatrix& U);

/// q_j = sq_norm(beta_j).  Unlike the complex case a squared G-modulus can go
/// negative; that raises NonphysicalState.  A sum away from 1 raises
/// NotDecomposable.  Default tol is looser than arithmetic precision because
/// composed entries chain square roots with cosh/sinh factors.
OutcomeDistribution g_born(const GAmplitudeVector& beta, double tol = 1e-9);

/// Rows G-orthonormal: <r_i, r_k> = delta_ik (a G-valued check).
bool g_is_unitary(const GTransitionMatrix& U, double tol = 1e-10);

/// G-unitarity decomposes into three independently testable conditions.
struct GUnitarityReport {
    bool double_stochastic;  // squared moduli doubly stochastic
    bool sigma_ok;           // sign product sigma = -1
    bool phase_ok;           // gamma_1 = gamma_2 (column phase differences)
    bool unitary;            // conjunction of the above
};

GUnitarityReport g_unitary_characterization(const GTransitionMatrix& U, double tol = 1e-10);

/// Largest |xi| a hyperbolic phase may take in a state composed with the
/// doubly stochastic matrix built from s and t before probabilities leave
/// [0, 1]:  cosh(xi) <= e(s, t) = (s t + (1-s)(1-t)) / (2 sqrt(s(1-s)t(1-t))).
double admissible_h_phase_bound(double s, double t);

// ---------------------------------------------------------------------------
// Hyperbolic phase constraint
// ---------------------------------------------------------------------------
//
// With gamma_j = gamma_1j - gamma_2j and eta = xi_1 - xi_2, decomposability
// of the composed state needs sigma = -1 together with
//   cosh(eta + gamma_1) = K cosh(eta + gamma_2).

enum class GPhaseFamilyKind { Aligned, Memory };

/// gamma_1 = slope * gamma_2 + offset (no wrapping: hyperbolic phases are
/// unbounded).
struct GPhaseFamily {
    GPhaseFamilyKind kind;
    double slope;
    double offset;
};

struct GPhaseConstraintFamilies {
    double coupling;
    bool double_stochastic;
    std::vector<GPhaseFamily> families;
};

/// Throws NoSolution when sigma = +1 (the magnitude equation then carries the
/// wrong sign for every phase choice).  For double stochastic P returns the
/// aligned family gamma_1 = gamma_2 and the memory family
/// gamma_1 = -gamma_2 - 2 eta.
GPhaseConstraintFamilies g_solve_phase_constraint(const TransitionMatrix& P, int sigma,
                                                  double eta);

/// Both branches gamma_1 = -eta +/- acosh(K cosh(eta + gamma_2)).  Throws
/// NoSolution when sigma = +1 or K cosh(eta + gamma_2) < 1.
std::pair<double, double> g_solve_phase_gamma1(const TransitionMatrix& P, int sigma,
                                               double eta, double gamma2);

}  // namespace contextprob
