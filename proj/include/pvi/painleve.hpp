#ifndef PVI_PAINLEVE_HPP
#define PVI_PAINLEVE_HPP

#include <array>
#include <tuple>

#include "pvi/derivatives.hpp"
#include "pvi/elliptic.hpp"

namespace pvi {

// The P_VI parameter tuple in all three coordinate systems:
//   (alpha, beta, gamma, delta), (kappa0, kappa1, kappa_inf, theta), (b1..b4),
// plus the kappa entering the Hamiltonian.
struct PainleveParams {
    double alpha, beta, gamma, delta;
    double kappa0, kappa1, kappa_inf, theta;
    std::array<double, 4> b;
    double kappa;
};

// Fills all three coordinate systems from the b-parameterization.
PainleveParams params_from_b(const std::array<double, 4>& b);

// Picard preset b = (0,0,-1/2,-1/2), i.e. alpha=beta=gamma=0, delta=1/2.
PainleveParams picard_params();

// Solution labels for the Picard solution.  (x, y) is stored; (c1, c2) is
// derived through c_j = 2*/pi + 1.
struct PicardParams {
    cplx x, y;

    cplx c1() const;
    cplx c2() const;

    static PicardParams from_xy(cplx x, cplx y);
    static PicardParams from_c(cplx c1, cplx c2);
};

// z = (2K/pi)(x + tau y), the elliptic argument of the Picard solution.
cplx picard_z(const PicardParams& pp, const EllipticContext& ctx);

// q'' minus the right side of the P_VI equation at the jet (q, q1, q2);
// zero iff the triple lies on a solution.  Throws SingularConfiguration
// when q is within 1e-8 of {0, 1, t}.
cplx pvi_residual(double t, cplx q, cplx q1, cplx q2, const PainleveParams& p);

// The Hamiltonian H_VI(t; q, p).
cplx hamiltonian_H(double t, cplx q, cplx p_mom, const PainleveParams& p);

// Inverts Hamilton's first equation dq/dt = dH/dp (linear in p) for p.
cplx momentum_from_qprime(double t, cplx q, cplx q1, const PainleveParams& p);

// h = t(t-1) H + e2(b1,b3,b4) t - (1/2) e2(b1,b2,b3,b4).
cplx auxiliary_h(double t, cplx H, const std::array<double, 4>& b);

// Recovers H from h, inverting auxiliary_h.
cplx H_from_auxiliary(double t, cplx h, const std::array<double, 4>& b);

// LHS minus RHS of the E_VI equation at the jet (h, h1, h2):
//   h'[t(1-t)h'']^2 + [h'(2h-(2t-1)h') + b1b2b3b4]^2 - prod_k(h' + b_k^2).
cplx evi_residual(double t, cplx h, cplx h1, cplx h2,
                  const std::array<double, 4>& b);

enum class ShiftDirection { up, down };

// The parallel Okamoto shift b3 -> b3+1 acting on the auxiliary Hamiltonian.
// `up` maps the h-jet at parameters b to h_+; `down` takes the h_+-jet back
// to h.  Throws DegenerateShift when the denominator falls below 1e-10.
cplx okamoto_shift_h(double t, cplx h, cplx h1, cplx h2,
                     const std::array<double, 4>& b, ShiftDirection direction);

// The Picard solution q_0 = t cn^2(z,t)/dn^2(z,t).
cplx picard_q0(double t, const PicardParams& pp);

// Equivalent form 1/sn^2(c1 K + i c2 K', t).
cplx picard_q0_alt(double t, const PicardParams& pp);

// Weierstrass invariants (e1, e2, e3) for half-periods (K, iK').
std::tuple<double, double, double> weierstrass_invariants(double t);

// Closed-form q_0'(t):
//   1/dn^2 + (sn cn/dn^3) [ (pi/2K)[log theta_2(x+tau y)]'_x + i y/K ].
cplx picard_q0_dt(double t, const PicardParams& pp);

// scriptE(x,y,t) = (pi/2K)[log theta_1(x+tau y)]'_x + i y/K.
cplx script_E(double t, const PicardParams& pp);

// Hamiltonian of the Picard solution,
//   H_0 = -1/(4(t-1)) - cn^2/(4t(t-1)sn^2) + scriptE^2/(4t(t-1)).
cplx picard_H0(double t, const PicardParams& pp);

// Same H_0 through q_0 and q_0' only (the generic-parameter route).
cplx picard_H0_from_q(double t, const PicardParams& pp);

// Hamiltonian after one Okamoto shift, b_1-preset (0,0,1/2,-1/2):
//   H_1 = -sn^2/(4dn^2)
//         + (1/(4t(t-1))) [ (pi/2K)[log theta_4]'_x + iy/K - t sn cn/dn ]^2.
cplx picard_H1(double t, const PicardParams& pp);

}  // namespace pvi

#endif
