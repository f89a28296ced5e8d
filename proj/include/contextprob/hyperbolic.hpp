#pragma once

#include <cmath>

#include "contextprob/errors.hpp"

namespace contextprob {

/// Element x + j*y of the two-dimensional real commutative algebra G whose
/// imaginary-like unit satisfies j^2 = +1.  Unlike the complex field, G has
/// zero divisors: (1 + j)(1 - j) = 0, so inverses exist only where the
/// signed square norm x^2 - y^2 is nonzero.
struct HyperbolicNumber {
    double x = 0.0;  // coefficient of 1
    double y = 0.0;  // coefficient of j

    constexpr HyperbolicNumber() = default;
    constexpr HyperbolicNumber(double x_, double y_) : x(x_), y(y_) {}

    friend constexpr bool operator==(const HyperbolicNumber&, const HyperbolicNumber&) = default;
};

constexpr HyperbolicNumber operator+(HyperbolicNumber a, HyperbolicNumber b) {
    return {a.x + b.x, a.y + b.y};
}

constexpr HyperbolicNumber operator-(HyperbolicNumber a, HyperbolicNumber b) {
    return {a.x - b.x, a.y - b.y};
}

constexpr HyperbolicNumber operator-(HyperbolicNumber a) { return {-a.x, -a.y}; }

// (x1 + j y1)(x2 + j y2) = (x1 x2 + y1 y2) + j (x1 y2 + x2 y1)
constexpr HyperbolicNumber operator*(HyperbolicNumber a, HyperbolicNumber b) {
    return {a.x * b.x + a.y * b.y, a.x * b.y + b.x * a.y};
}

constexpr HyperbolicNumber operator*(double s, HyperbolicNumber z) { return {s * z.x, s * z.y}; }
constexpr HyperbolicNumber operator*(HyperbolicNumber z, double s) { return s * z; }

constexpr HyperbolicNumber conj(HyperbolicNumber z) { return {z.x, -z.y}; }

/// Signed square norm z * conj(z) = x^2 - y^2.  Nonnegative on the
/// sub-semigroup G+, positive on the group G+*, negative outside.
constexpr double sq_norm(HyperbolicNumber z) { return z.x * z.x - z.y * z.y; }

/// Largest |theta| accepted by h_exp; beyond this cosh(theta) overflows double.
inline constexpr double kMaxHyperbolicPhase = 700.0;

/// Unit "circle" element e^{j theta} = cosh(theta) + j sinh(theta).
/// Throws PhaseOverflow for |theta| > kMaxHyperbolicPhase instead of
/// silently returning inf.
HyperbolicNumber h_exp(double theta);

/// Multiplicative inverse conj(z) / sq_norm(z); defined on G+* only.
HyperbolicNumber inverse(HyperbolicNumber z);

/// z = sign * modulus * e^{j phase}, the polar decomposition available on G+*.
struct PolarForm {
    int sign;        // sign of the x component, +1 or -1
    double modulus;  // sqrt(x^2 - y^2) > 0
    double phase;    // artanh(y / x)
};

/// Polar decomposition; throws NoPolarForm when sq_norm(z) <= 0 (that region
/// of G, including the zero-divisor cone |x| = |y|, has no such form).
PolarForm polar(HyperbolicNumber z);

HyperbolicNumber reconstruct(const PolarForm& form);

/// Componentwise comparison with mixed absolute/relative tolerance.
bool approx_equal(HyperbolicNumber a, HyperbolicNumber b,
                  double abs_tol = 1e-12, double rel_tol = 1e-10);

}  // namespace contextprob
