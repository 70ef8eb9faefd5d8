#ifndef PVI_JACOBI_HPP
#define PVI_JACOBI_HPP

#include <tuple>

#include "pvi/elliptic.hpp"

namespace pvi {

// sn, cn, dn at argument u via the theta quotients
//   sn = theta_1(v)/(k^{1/2} theta_4(v)),
//   cn = (k'/k)^{1/2} theta_2(v)/theta_4(v),
//   dn = k'^{1/2} theta_3(v)/theta_4(v),   v = pi u/(2K).
// Throws PoleProximity when |theta_4(v)| < 1e-10.
std::tuple<cplx, cplx, cplx> jacobi_sn_cn_dn(cplx u, const EllipticContext& ctx);

// Second-kind integral scriptE(u,t) = int_0^u dn^2, evaluated in closed form
//   u E/K + (pi/2K) [log theta_4]'_x at x = pi u/(2K).
cplx second_kind_E(cplx u, const EllipticContext& ctx);

// Incomplete first-kind integral int_0^s dx/sqrt((1-x^2)(1-t x^2)) by
// adaptive quadrature; inverse of sn on [0,1).
double incomplete_F(double s, const EllipticContext& ctx);

// Derivatives (d/dt sn, d/dt cn, d/dt dn) at fixed u.
std::tuple<cplx, cplx, cplx> jacobi_dt(cplx u, const EllipticContext& ctx);

}  // namespace pvi

#endif
