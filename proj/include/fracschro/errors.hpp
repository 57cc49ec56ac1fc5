#pragma once

#include <stdexcept>
#include <string>

namespace fracschro {

// Base class for every numerical failure raised by this library.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A gamma-function argument landed on (or within pole_tolerance of) a
// non-positive integer where a finite value was required.
struct PoleError : NumericsError {
    using NumericsError::NumericsError;
};

// Left and right pole ladders of a Mellin-Barnes integrand touch, so no
// separating contour exists.
struct PoleCollisionError : NumericsError {
    using NumericsError::NumericsError;
};

// A residue expansion hit a pole of order >= 2.
struct NonSimplePoleError : NumericsError {
    using NumericsError::NumericsError;
};

// An iteration/series/quadrature failed to reach the requested tolerance
// within its budget.
struct ConvergenceError : NumericsError {
    using NumericsError::NumericsError;
};

// The integral defining the requested value does not converge for these
// arguments (argument outside the sector allowed by the decay exponent).
struct DivergenceError : NumericsError {
    using NumericsError::NumericsError;
};

// Parameters violate a documented validity window.  The message names the
// violated inequality.
struct ValidityError : NumericsError {
    using NumericsError::NumericsError;
};

// A spatial quadrature grid could not meet its tail budget.
struct GridError : NumericsError {
    using NumericsError::NumericsError;
};

} // namespace fracschro
