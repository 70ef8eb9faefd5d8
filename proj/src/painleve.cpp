#include "pvi/painleve.hpp"

#include <cassert>
#include <cmath>

#include "pvi/errors.hpp"
#include "pvi/jacobi.hpp"
#include "pvi/theta.hpp"

namespace pvi {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSingularGuard = 1e-8;
constexpr double kPoleGuard = 1e-10;
constexpr double kShiftGuard = 1e-10;
const cplx kI{0.0, 1.0};

void check_nonsingular_q(double t, cplx q) {
    if (std::abs(q) < kSingularGuard || std::abs(q - 1.0) < kSingularGuard ||
        std::abs(q - t) < kSingularGuard) {
        throw SingularConfiguration("q within 1e-8 of {0, 1, t}");
    }
}

void check_t(double t) {
    if (std::abs(t) < kSingularGuard || std::abs(t - 1.0) < kSingularGuard) {
        throw SingularConfiguration("t within 1e-8 of {0, 1}");
    }
}

double e2_3(double a, double b, double c) { return a * b + a * c + b * c; }

double e2_4(const std::array<double, 4>& b) {
    return b[0] * b[1] + b[0] * b[2] + b[0] * b[3] + b[1] * b[2] +
           b[1] * b[3] + b[2] * b[3];
}

cplx theta_log_dv(ThetaIndex i, cplx w, const EllipticContext& ctx) {
    const cplx val = theta(i, w, ctx);
    if (std::abs(val) < kPoleGuard) {
        throw PoleProximity("log-derivative at a theta zero");
    }
    return theta_dv(i, w, ctx, 1) / val;
}

}  // namespace

PainleveParams params_from_b(const std::array<double, 4>& b) {
    PainleveParams p;
    p.b = b;
    p.kappa0 = b[0] + b[1];
    p.kappa1 = b[0] - b[1];
    p.kappa_inf = b[2] - b[3];
    p.theta = b[2] + b[3] + 1.0;
    p.alpha = 0.5 * p.kappa_inf * p.kappa_inf;
    p.beta = -0.5 * p.kappa0 * p.kappa0;
    p.gamma = 0.5 * p.kappa1 * p.kappa1;
    p.delta = 0.5 * (1.0 - p.theta * p.theta);
    const double s = p.kappa0 + p.kappa1 + p.theta - 1.0;
    p.kappa = 0.25 * s * s - 0.25 * p.kappa_inf * p.kappa_inf;
    return p;
}

PainleveParams picard_params() {
    return params_from_b({0.0, 0.0, -0.5, -0.5});
}

cplx PicardParams::c1() const { return 2.0 * x / kPi + 1.0; }
cplx PicardParams::c2() const { return 2.0 * y / kPi + 1.0; }

PicardParams PicardParams::from_xy(cplx x, cplx y) { return {x, y}; }

PicardParams PicardParams::from_c(cplx c1, cplx c2) {
    return {(c1 - 1.0) * kPi / 2.0, (c2 - 1.0) * kPi / 2.0};
}

cplx picard_z(const PicardParams& pp, const EllipticContext& ctx) {
    return 2.0 * ctx.K / kPi * (pp.x + ctx.tau * pp.y);
}

cplx pvi_residual(double t, cplx q, cplx q1, cplx q2,
                  const PainleveParams& p) {
    check_t(t);
    check_nonsingular_q(t, q);
    const cplx rhs =
        0.5 * (1.0 / q + 1.0 / (q - 1.0) + 1.0 / (q - t)) * q1 * q1 -
        (1.0 / t + 1.0 / (t - 1.0) + 1.0 / (q - t)) * q1 +
        q * (q - 1.0) * (q - t) / (t * t * (t - 1.0) * (t - 1.0)) *
            (p.alpha + p.beta * t / (q * q) +
             p.gamma * (t - 1.0) / ((q - 1.0) * (q - 1.0)) +
             p.delta * t * (t - 1.0) / ((q - t) * (q - t)));
    return q2 - rhs;
}

cplx hamiltonian_H(double t, cplx q, cplx p_mom, const PainleveParams& p) {
    check_t(t);
    const cplx lin = p.kappa0 * (q - 1.0) * (q - t) + p.kappa1 * q * (q - t) +
                     (p.theta - 1.0) * q * (q - 1.0);
    return (q * (q - 1.0) * (q - t) * p_mom * p_mom - lin * p_mom +
            p.kappa * (q - t)) /
           (t * (t - 1.0));
}

cplx momentum_from_qprime(double t, cplx q, cplx q1, const PainleveParams& p) {
    check_t(t);
    const cplx denom = q * (q - 1.0) * (q - t);
    if (std::abs(denom) < kSingularGuard) {
        throw SingularConfiguration("q(q-1)(q-t) within 1e-8 of zero");
    }
    const cplx lin = p.kappa0 * (q - 1.0) * (q - t) + p.kappa1 * q * (q - t) +
                     (p.theta - 1.0) * q * (q - 1.0);
    return (t * (t - 1.0) * q1 + lin) / (2.0 * denom);
}

cplx auxiliary_h(double t, cplx H, const std::array<double, 4>& b) {
    return t * (t - 1.0) * H + e2_3(b[0], b[2], b[3]) * t - 0.5 * e2_4(b);
}

cplx H_from_auxiliary(double t, cplx h, const std::array<double, 4>& b) {
    check_t(t);
    return (h - e2_3(b[0], b[2], b[3]) * t + 0.5 * e2_4(b)) / (t * (t - 1.0));
}

cplx evi_residual(double t, cplx h, cplx h1, cplx h2,
                  const std::array<double, 4>& b) {
    const cplx w = t * (1.0 - t) * h2;
    const cplx lhs =
        h1 * w * w +
        std::pow(h1 * (2.0 * h - (2.0 * t - 1.0) * h1) +
                     b[0] * b[1] * b[2] * b[3],
                 2);
    cplx rhs = 1.0;
    for (double bk : b) rhs *= h1 + bk * bk;
    return lhs - rhs;
}

cplx okamoto_shift_h(double t, cplx h, cplx h1, cplx h2,
                     const std::array<double, 4>& b,
                     ShiftDirection direction) {
    const double b1 = b[0], b2 = b[1], b3 = b[2], b4 = b[3];
    if (direction == ShiftDirection::up) {
        const cplx denom = 2.0 * (h1 + b3 * b3);
        if (std::abs(denom) < kShiftGuard) {
            throw DegenerateShift("up-shift denominator 2(h'+b3^2) ~ 0");
        }
        return (t * (t - 1.0) * h2 + 2.0 * h * (b3 * (b3 + 1.0) + h1) +
                b3 * (1.0 - 2.0 * t) * h1 - b1 * b2 * b4) /
               denom;
    }
    const cplx denom = 2.0 * (h1 + (b3 + 1.0) * (b3 + 1.0));
    if (std::abs(denom) < kShiftGuard) {
        throw DegenerateShift("down-shift denominator 2(h'+(b3+1)^2) ~ 0");
    }
    return (t * (t - 1.0) * h2 + 2.0 * h * (b3 * (b3 + 1.0) + h1) -
            (b3 + 1.0) * (1.0 - 2.0 * t) * h1 + b1 * b2 * b4) /
           denom;
}

cplx picard_q0(double t, const PicardParams& pp) {
    const EllipticContext ctx = make_context(t);
    const auto [sn, cn, dn] = jacobi_sn_cn_dn(picard_z(pp, ctx), ctx);
    (void)sn;
    if (std::abs(dn) < kPoleGuard) {
        throw PoleProximity("picard_q0: dn zero");
    }
    const cplx q0 = t * cn * cn / (dn * dn);
#ifndef NDEBUG
    if (std::abs(sn) > 1e-6) {
        assert(std::abs(q0 - picard_q0_alt(t, pp)) < 1e-10 * (1.0 + std::abs(q0)));
    }
#endif
    return q0;
}

cplx picard_q0_alt(double t, const PicardParams& pp) {
    const EllipticContext ctx = make_context(t);
    const cplx u = pp.c1() * ctx.K + kI * pp.c2() * ctx.K_prime;
    const auto [sn, cn, dn] = jacobi_sn_cn_dn(u, ctx);
    (void)cn;
    (void)dn;
    if (std::abs(sn) < kPoleGuard) {
        throw PoleProximity("picard_q0_alt: sn zero");
    }
    return 1.0 / (sn * sn);
}

std::tuple<double, double, double> weierstrass_invariants(double t) {
    const double third = (t + 1.0) / 3.0;
    return {1.0 - third, t - third, -third};
}

cplx picard_q0_dt(double t, const PicardParams& pp) {
    const EllipticContext ctx = make_context(t);
    const cplx w = pp.x + ctx.tau * pp.y;
    const auto [sn, cn, dn] = jacobi_sn_cn_dn(picard_z(pp, ctx), ctx);
    if (std::abs(dn) < kPoleGuard) {
        throw PoleProximity("picard_q0_dt: dn zero");
    }
    const cplx bracket = kPi / (2.0 * ctx.K) * theta_log_dv(ThetaIndex::two, w, ctx) +
                         kI * pp.y / ctx.K;
    return 1.0 / (dn * dn) + sn * cn / (dn * dn * dn) * bracket;
}

cplx script_E(double t, const PicardParams& pp) {
    const EllipticContext ctx = make_context(t);
    const cplx w = pp.x + ctx.tau * pp.y;
    return kPi / (2.0 * ctx.K) * theta_log_dv(ThetaIndex::one, w, ctx) +
           kI * pp.y / ctx.K;
}

cplx picard_H0(double t, const PicardParams& pp) {
    const EllipticContext ctx = make_context(t);
    const auto [sn, cn, dn] = jacobi_sn_cn_dn(picard_z(pp, ctx), ctx);
    (void)dn;
    if (std::abs(sn) < kPoleGuard) {
        throw PoleProximity("picard_H0: sn zero");
    }
    const cplx sE = script_E(t, pp);
    return -1.0 / (4.0 * (t - 1.0)) -
           cn * cn / (4.0 * t * (t - 1.0) * sn * sn) +
           sE * sE / (4.0 * t * (t - 1.0));
}

cplx picard_H0_from_q(double t, const PicardParams& pp) {
    const cplx q = picard_q0(t, pp);
    const cplx q1 = picard_q0_dt(t, pp);
    return (t * t + (1.0 - 2.0 * t) * q) / (4.0 * t * (t - 1.0) * (q - t)) +
           t * (t - 1.0) * q1 * q1 /
               (4.0 * q * (q - 1.0) * (q - t));
}

cplx picard_H1(double t, const PicardParams& pp) {
    const EllipticContext ctx = make_context(t);
    const cplx w = pp.x + ctx.tau * pp.y;
    const auto [sn, cn, dn] = jacobi_sn_cn_dn(picard_z(pp, ctx), ctx);
    if (std::abs(dn) < kPoleGuard) {
        throw PoleProximity("picard_H1: dn zero");
    }
    const cplx bracket = kPi / (2.0 * ctx.K) * theta_log_dv(ThetaIndex::four, w, ctx) +
                         kI * pp.y / ctx.K - t * sn * cn / dn;
    return -sn * sn / (4.0 * dn * dn) +
           bracket * bracket / (4.0 * t * (t - 1.0));
}

}  // namespace pvi
