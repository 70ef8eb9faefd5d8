#ifndef PVI_THETA_HPP
#define PVI_THETA_HPP

#include "pvi/elliptic.hpp"

namespace pvi {

// Index into the four Jacobi theta functions.  Only 1..4 are admissible.
enum class ThetaIndex : int { one = 1, two = 2, three = 3, four = 4 };

ThetaIndex theta_index(int i);  // throws DomainError outside {1,2,3,4}

// theta_i(v|tau) in the Whittaker-Watson convention (quasi-periods pi and
// pi*tau, theta_1 odd).  The argument is reduced modulo the quasi-periods
// before summation so the series runs in the fundamental strip; the exact
// multiplier factors are reapplied.  Series truncation: term magnitude below
// 1e-17 of the running sum, hard cap 200 terms (ConvergenceFailure).
cplx theta(ThetaIndex i, cplx v, const EllipticContext& ctx);

// First or second derivative in the argument v (order must be 1 or 2).
cplx theta_dv(ThetaIndex i, cplx v, const EllipticContext& ctx, int order = 1);

// Derivative in tau at fixed v, by term-by-term series differentiation.
// Satisfies the heat equation (4/(i pi)) d_tau theta + d^2_v theta = 0.
cplx theta_dtau(ThetaIndex i, cplx v, const EllipticContext& ctx);

// theta_4(x|tau) rebuilt from its integral representation:
//   theta_4(0|tau) exp{ -(2x^2/pi^2) E K + int_0^{2xK/pi} scriptE(y,t) dy },
// the integral by adaptive quadrature of the second-kind integral.
cplx theta4_integral_rep(cplx x, const EllipticContext& ctx);

// Defect between series theta_4(x|tau) and the x-expansion
//   theta_4(0) exp{-2x^2 EK/pi^2} [1 + 2x^2K^2/pi^2 + (2(3-2t)/3) x^4K^4/pi^4];
// the defect is O(x^6).
double theta4_expansion_check(double x, const EllipticContext& ctx);

}  // namespace pvi

#endif
