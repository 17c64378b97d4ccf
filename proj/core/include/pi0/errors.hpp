#pragma once

#include <stdexcept>
#include <string>

namespace pi0 {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input data: malformed matrices, non-involutive sigma, coroots not
/// sigma-stable, containment violations, unknown catalog names, degenerate
/// cubics, enumeration caps exceeded. The CLI maps this to exit code 1.
class validation_error : public error {
public:
    using error::error;
};

/// A state the mathematics rules out (sandwich inclusion violated, quotient
/// with an invariant factor outside {1,2}, oracle disagreement, three-route
/// mismatch). Always a bug or a broken build, never bad input. Exit code 2.
class consistency_error : public error {
public:
    using error::error;
};

/// A floating-point computation failed its own accuracy contract
/// (integer recognition residual too large, Eisenstein round-trip residual
/// above tolerance, AGM non-convergence). Exit code 2.
class numeric_error : public error {
public:
    using error::error;
};

} // namespace pi0
