#pragma once

#include <stdexcept>
#include <string>

namespace livens {

// Argument vector/matrix sizes do not match the model dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The mass matrix has no inverse at the evaluation point, so quantities that
// need M(q)^{-1} (Hamiltonian, canonical equations) are undefined.
class SingularMassError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A dense factorization hit a pivot below the rank threshold.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A user-supplied callable produced NaN or Inf.
class NonFiniteValueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Initial state violates g(q0)=0, Dg(q0)v0=0, or constraint regularity.
class InconsistentInitialStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoConvergenceError : public std::runtime_error {
public:
    NoConvergenceError(const std::string& what, long step_index, int iterations,
                       double residual_norm)
        : std::runtime_error(what),
          step_index(step_index),
          iterations(iterations),
          residual_norm(residual_norm) {}

    long step_index;  // -1 when the failing step is not known
    int iterations;
    double residual_norm;
};

// Config document is not well-formed (syntax).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Config document is well-formed but semantically invalid.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace livens
