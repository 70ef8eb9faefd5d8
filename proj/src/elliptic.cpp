#include "pvi/elliptic.hpp"

#include <cmath>
#include <sstream>

#include "pvi/errors.hpp"

namespace pvi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxAgmIter = 64;

// AGM of (a, b) together with the companion sum S = sum 2^{n-1} c_n^2
// starting at c_0, so that E = K (1 - S).
struct AgmResult {
    double mean;
    double companion_sum;
};

AgmResult agm_with_sum(double a, double b, double c0) {
    double sum = 0.5 * c0 * c0;
    double pow2 = 0.5;
    for (int n = 0; n < kMaxAgmIter; ++n) {
        if (std::abs(a - b) < 1e-16 * a) break;
        const double an = 0.5 * (a + b);
        const double c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    return {a, sum};
}

}  // namespace

double agm(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw NonPositiveInput("agm: inputs must be strictly positive");
    }
    for (int n = 0; n < kMaxAgmIter; ++n) {
        if (std::abs(a - b) < 1e-16 * a) break;
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return a;
}

EllipticContext make_context(double t, double margin) {
    if (!(t > margin) || !(t < 1.0 - margin) || !std::isfinite(t)) {
        std::ostringstream os;
        os << "make_context: t = " << t << " outside (" << margin << ", "
           << 1.0 - margin << ")";
        throw DomainError(os.str());
    }
    EllipticContext ctx;
    ctx.t = t;
    ctx.k = std::sqrt(t);
    ctx.k_prime = std::sqrt(1.0 - t);

    const AgmResult m = agm_with_sum(1.0, ctx.k_prime, ctx.k);
    const AgmResult mc = agm_with_sum(1.0, ctx.k, ctx.k_prime);
    ctx.K = kPi / (2.0 * m.mean);
    ctx.K_prime = kPi / (2.0 * mc.mean);
    ctx.E = ctx.K * (1.0 - m.companion_sum);
    ctx.E_prime = ctx.K_prime * (1.0 - mc.companion_sum);

    ctx.tau = cplx(0.0, ctx.K_prime / ctx.K);
    ctx.nome = std::exp(cplx(0.0, kPi) * ctx.tau);
    ctx.omega1 = cplx(ctx.K, 0.0);
    ctx.omega2 = cplx(0.0, ctx.K_prime);
    return ctx;
}

double dK_dt(const EllipticContext& ctx) {
    const double t = ctx.t;
    return ctx.E / (2.0 * t * (1.0 - t)) - ctx.K / (2.0 * t);
}

double dE_dt(const EllipticContext& ctx) {
    return (ctx.E - ctx.K) / (2.0 * ctx.t);
}

double legendre_defect(const EllipticContext& ctx) {
    return ctx.E * ctx.K_prime + ctx.E_prime * ctx.K - ctx.K * ctx.K_prime -
           kPi / 2.0;
}

cplx dtau_dt(const EllipticContext& ctx) {
    const double t = ctx.t;
    return cplx(0.0, kPi) / (4.0 * t * (t - 1.0) * ctx.K * ctx.K);
}

}  // namespace pvi
