#ifndef PVI_ERRORS_HPP
#define PVI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pvi {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the open interval (margin, 1-margin) or otherwise invalid.
struct DomainError : Error {
    using Error::Error;
};

// agm() requires strictly positive inputs.
struct NonPositiveInput : Error {
    using Error::Error;
};

// Theta series hit the hard term cap without converging.
struct ConvergenceFailure : Error {
    using Error::Error;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

// Evaluation point too close to a pole (theta_4 zero, sn/dn zero, ...).
struct PoleProximity : Error {
    using Error::Error;
};

// q in {0, 1, t} or t in {0, 1}: the P_VI / Hamiltonian formulas are singular.
struct SingularConfiguration : Error {
    using Error::Error;
};

// Okamoto shift denominator too close to zero.
struct DegenerateShift : Error {
    using Error::Error;
};

// Toda recurrence bracket crossed zero at a grid point.
struct NonPositiveArgument : Error {
    using Error::Error;
};

// Grid too short for the finite-difference stencil.
struct StencilTooCoarse : Error {
    using Error::Error;
};

}  // namespace pvi

#endif
