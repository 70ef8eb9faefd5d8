#include "pvi/jacobi.hpp"

#include <cmath>

#include "pvi/errors.hpp"
#include "pvi/quadrature.hpp"
#include "pvi/theta.hpp"

namespace pvi {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kPoleGuard = 1e-10;

cplx theta4_checked(cplx v, const EllipticContext& ctx) {
    const cplx t4 = theta(ThetaIndex::four, v, ctx);
    if (std::abs(t4) < kPoleGuard) {
        throw PoleProximity("jacobi: theta_4 within 1e-10 of zero");
    }
    return t4;
}
}  // namespace

std::tuple<cplx, cplx, cplx> jacobi_sn_cn_dn(cplx u,
                                             const EllipticContext& ctx) {
    const cplx v = kPi * u / (2.0 * ctx.K);
    const cplx t4 = theta4_checked(v, ctx);
    const double rk = std::sqrt(ctx.k);
    const double rkp = std::sqrt(ctx.k_prime);
    const cplx sn = theta(ThetaIndex::one, v, ctx) / (rk * t4);
    const cplx cn = (rkp / rk) * theta(ThetaIndex::two, v, ctx) / t4;
    const cplx dn = rkp * theta(ThetaIndex::three, v, ctx) / t4;
    return {sn, cn, dn};
}

cplx second_kind_E(cplx u, const EllipticContext& ctx) {
    const cplx x = kPi * u / (2.0 * ctx.K);
    const cplx t4 = theta4_checked(x, ctx);
    const cplx logdv = theta_dv(ThetaIndex::four, x, ctx, 1) / t4;
    return u * ctx.E / ctx.K + kPi / (2.0 * ctx.K) * logdv;
}

double incomplete_F(double s, const EllipticContext& ctx) {
    if (!(s >= 0.0) || !(s < 1.0)) {
        throw DomainError("incomplete_F: s must lie in [0, 1)");
    }
    // substitution x = sin(phi) removes the endpoint singularity
    const double t = ctx.t;
    const double phi = std::asin(s);
    return integrate(
        [t](double p) {
            const double sp = std::sin(p);
            return 1.0 / std::sqrt(1.0 - t * sp * sp);
        },
        0.0, phi, 1e-13);
}

std::tuple<cplx, cplx, cplx> jacobi_dt(cplx u, const EllipticContext& ctx) {
    const auto [sn, cn, dn] = jacobi_sn_cn_dn(u, ctx);
    const double t = ctx.t;
    const cplx bracket = u * (t - 1.0) + second_kind_E(u, ctx);
    const double d = 2.0 * t * (t - 1.0);
    const cplx dsn = -sn * cn * cn / (2.0 * (t - 1.0)) + cn * dn / d * bracket;
    const cplx dcn = sn * sn * cn / (2.0 * (t - 1.0)) - sn * dn / d * bracket;
    const cplx ddn = sn * sn * dn / (2.0 * (t - 1.0)) -
                     sn * cn / (2.0 * (t - 1.0)) * bracket;
    return {dsn, dcn, ddn};
}

}  // namespace pvi
