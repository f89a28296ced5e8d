#pragma once

#include <stdexcept>
#include <string>

namespace contextprob {

/// Base class of every domain error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A probability is zero, negative, non-finite, or a distribution does not sum to one.
class DegenerateProbability : public Error {
    using Error::Error;
};

/// Multiplicative inverse requested for an element outside the group G+*.
class NotInvertible : public Error {
    using Error::Error;
};

/// Polar decomposition requested for an element with sq_norm <= 0.
class NoPolarForm : public Error {
    using Error::Error;
};

/// Hyperbolic phase so large that cosh/sinh would overflow.
class PhaseOverflow : public Error {
    using Error::Error;
};

/// Interference coefficients do not satisfy lambda_1 = -K * lambda_2.
class OrthogonalityViolated : public Error {
    using Error::Error;
};

/// A transformed probability left [0, 1] beyond tolerance.
class NonphysicalResult : public Error {
    using Error::Error;
};

/// A sampled context received zero elements; the ensemble is too small.
class EmptyContext : public Error {
    using Error::Error;
};

/// Empirical lambda undefined because a disturbed count m_ij is zero.
class UndefinedCoefficient : public Error {
    using Error::Error;
};

/// A decoherence shift pushes some probability outside (0, 1).
class InvalidShift : public Error {
    using Error::Error;
};

/// A phase constraint has no solution for the requested parameters.
class NoSolution : public Error {
    using Error::Error;
};

/// A state's squared amplitudes do not sum to one; it is not decomposable.
class NotDecomposable : public Error {
    using Error::Error;
};

/// A G-state has a component with negative squared modulus.
class NonphysicalState : public Error {
    using Error::Error;
};

/// An input file is missing or carries an unsupported schema version.
class SchemaError : public Error {
    using Error::Error;
};

}  // namespace contextprob
