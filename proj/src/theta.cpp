#include "pvi/theta.hpp"

#include <cmath>
#include <sstream>

#include "pvi/errors.hpp"
#include "pvi/jacobi.hpp"
#include "pvi/quadrature.hpp"

namespace pvi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kTermCap = 200;
constexpr double kSeriesTol = 1e-17;
const cplx kI{0.0, 1.0};

// Raw series values (f, f_v, f_vv, f_tau) at an argument already reduced to
// the fundamental strip.  lq = log(nome) = i pi tau.
struct SeriesJet {
    cplx f{}, fv{}, fvv{}, ftau{};
};

// theta_1: 2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1)v)
// theta_2: 2 sum q^{(n+1/2)^2} cos((2n+1)v)
// theta_3: 1 + 2 sum_{n>=1} q^{n^2} cos(2nv)
// theta_4: 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2nv)
SeriesJet raw_series(ThetaIndex idx, cplx v, cplx lq) {
    SeriesJet s;
    const int i = static_cast<int>(idx);
    if (i >= 3) {
        s.f = 1.0;
    }
    double scale_f = 1.0;   // running magnitude floors for convergence tests
    double scale_d2 = 1.0;
    for (int n = 0; n < kTermCap; ++n) {
        cplx term_f, term_fv, term_fvv, term_ftau;
        if (i <= 2) {
            const double half = n + 0.5;
            const double m = 2.0 * n + 1.0;  // argument multiplier
            const cplx qpow = std::exp(half * half * lq);
            const cplx osc = (i == 1) ? std::sin(m * v) : std::cos(m * v);
            const cplx osc_d = (i == 1) ? std::cos(m * v) : -std::sin(m * v);
            double sign = (i == 1 && (n % 2 == 1)) ? -1.0 : 1.0;
            term_f = 2.0 * sign * qpow * osc;
            term_fv = 2.0 * sign * qpow * m * osc_d;
            term_fvv = -2.0 * sign * qpow * m * m * osc;
            term_ftau = kI * kPi * half * half * term_f;
        } else {
            const int nn = n + 1;
            const double m = 2.0 * nn;
            const cplx qpow = std::exp(double(nn) * nn * lq);
            double sign = (i == 4 && (nn % 2 == 1)) ? -1.0 : 1.0;
            term_f = 2.0 * sign * qpow * std::cos(m * v);
            term_fv = -2.0 * sign * qpow * m * std::sin(m * v);
            term_fvv = -2.0 * sign * qpow * m * m * std::cos(m * v);
            term_ftau = kI * kPi * double(nn) * double(nn) * term_f;
        }
        s.f += term_f;
        s.fv += term_fv;
        s.fvv += term_fvv;
        s.ftau += term_ftau;
        scale_f = std::max(scale_f, std::abs(s.f));
        scale_d2 = std::max(scale_d2, std::abs(s.fvv));
        if (std::abs(term_f) <= kSeriesTol * scale_f &&
            std::abs(term_fvv) <= kSeriesTol * scale_d2) {
            return s;
        }
    }
    throw ConvergenceFailure("theta series cap hit");
}

// v = v0 + m*pi + n*pi*tau with v0 in the fundamental strip, and the
// quasi-periodicity multiplier P = sign * q^{-n^2} exp(-2 i n v0) with
//   theta_1: sign = (-1)^{m+n},  theta_2: (-1)^m,
//   theta_3: +1,                 theta_4: (-1)^n.
struct Reduction {
    cplx v0;
    long m, n;
    cplx mult;
};

Reduction reduce(ThetaIndex idx, cplx v, const EllipticContext& ctx) {
    Reduction r;
    const double im_period = kPi * ctx.tau.imag();
    r.n = std::lround(v.imag() / im_period);
    cplx v1 = v - double(r.n) * kPi * ctx.tau;
    r.m = std::lround(v1.real() / kPi);
    r.v0 = v1 - double(r.m) * kPi;

    const cplx lq = kI * kPi * ctx.tau;
    double sign = 1.0;
    const int i = static_cast<int>(idx);
    if (i == 1 && ((r.m + r.n) & 1)) sign = -1.0;
    if (i == 2 && (r.m & 1)) sign = -1.0;
    if (i == 4 && (r.n & 1)) sign = -1.0;
    r.mult = sign * std::exp(-double(r.n) * double(r.n) * lq -
                             2.0 * kI * double(r.n) * r.v0);
    return r;
}

}  // namespace

ThetaIndex theta_index(int i) {
    if (i < 1 || i > 4) {
        std::ostringstream os;
        os << "theta index " << i << " not in {1,2,3,4}";
        throw DomainError(os.str());
    }
    return static_cast<ThetaIndex>(i);
}

cplx theta(ThetaIndex i, cplx v, const EllipticContext& ctx) {
    const Reduction r = reduce(i, v, ctx);
    const SeriesJet s = raw_series(i, r.v0, kI * kPi * ctx.tau);
    return r.mult * s.f;
}

cplx theta_dv(ThetaIndex i, cplx v, const EllipticContext& ctx, int order) {
    if (order != 1 && order != 2) {
        throw DomainError("theta_dv: order must be 1 or 2");
    }
    const Reduction r = reduce(i, v, ctx);
    const SeriesJet s = raw_series(i, r.v0, kI * kPi * ctx.tau);
    const double n = double(r.n);
    if (order == 1) {
        return r.mult * (s.fv - 2.0 * kI * n * s.f);
    }
    return r.mult * (s.fvv - 4.0 * kI * n * s.fv - 4.0 * n * n * s.f);
}

cplx theta_dtau(ThetaIndex i, cplx v, const EllipticContext& ctx) {
    const Reduction r = reduce(i, v, ctx);
    const SeriesJet s = raw_series(i, r.v0, kI * kPi * ctx.tau);
    // At fixed v the reduced argument v0 = v - m pi - n pi tau moves with
    // tau, and so does the multiplier: the chain rule gives
    //   d_tau theta(v) = P [ i pi n^2 f - n pi f_v + f_tau ].
    const double n = double(r.n);
    return r.mult * (kI * kPi * n * n * s.f - n * kPi * s.fv + s.ftau);
}

cplx theta4_integral_rep(cplx x, const EllipticContext& ctx) {
    const cplx theta40 = theta(ThetaIndex::four, 0.0, ctx);
    const cplx upper = 2.0 * x * ctx.K / kPi;
    // straight-line path 0 -> upper
    const cplx integral = integrate_complex(
        [&](double s) { return upper * second_kind_E(s * upper, ctx); }, 0.0,
        1.0, 1e-13);
    const cplx quad = -2.0 * x * x / (kPi * kPi) * ctx.E * ctx.K;
    return theta40 * std::exp(quad + integral);
}

double theta4_expansion_check(double x, const EllipticContext& ctx) {
    const double t = ctx.t;
    const double K2 = ctx.K * ctx.K / (kPi * kPi);
    const double series =
        theta(ThetaIndex::four, cplx(x, 0.0), ctx).real();
    const double approx =
        theta(ThetaIndex::four, 0.0, ctx).real() *
        std::exp(-2.0 * x * x / (kPi * kPi) * ctx.E * ctx.K) *
        (1.0 + 2.0 * x * x * K2 +
         2.0 * (3.0 - 2.0 * t) / 3.0 * x * x * x * x * K2 * K2);
    return series - approx;
}

}  // namespace pvi
