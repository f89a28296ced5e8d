#include "contextprob/hyperbolic.hpp"

#include <algorithm>

namespace contextprob {

HyperbolicNumber h_exp(double theta) {
    if (!(std::abs(theta) <= kMaxHyperbolicPhase)) {
        throw PhaseOverflow("h_exp: |theta| exceeds " + std::to_string(kMaxHyperbolicPhase) +
                            "; cosh would overflow");
    }
    return {std::cosh(theta), std::sinh(theta)};
}

HyperbolicNumber inverse(HyperbolicNumber z) {
    const double n = sq_norm(z);
    if (!(n > 0.0)) {
        throw NotInvertible("inverse: element has sq_norm <= 0 and lies outside G+*");
    }
    return {z.x / n, -z.y / n};
}

PolarForm polar(HyperbolicNumber z) {
    const double n = sq_norm(z);
    if (!(n > 0.0)) {
        throw NoPolarForm("polar: defined only where sq_norm > 0");
    }
    // x^2 > y^2 >= 0, so x != 0 and y/x lies strictly inside (-1, 1).  The
    // same branch works for x < 0 because the sign factors out in front.
    const int sign = z.x > 0.0 ? 1 : -1;
    return {sign, std::sqrt(n), std::atanh(z.y / z.x)};
}

HyperbolicNumber reconstruct(const PolarForm& form) {
    return static_cast<double>(form.sign) * form.modulus * h_exp(form.phase);
}

bool approx_equal(HyperbolicNumber a, HyperbolicNumber b, double abs_tol, double rel_tol) {
    const auto close = [&](double u, double v) {
        return std::abs(u - v) <= abs_tol + rel_tol * std::max(std::abs(u), std::abs(v));
    };
    return close(a.x, b.x) && close(a.y, b.y);
}

}  // namespace contextprob
