#include "pvi/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pvi/errors.hpp"

namespace pvi {

namespace {
using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
constexpr unsigned kMaxDepth = 15;
}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    double error = 0.0, l1 = 0.0;
    const double result = GK::integrate(f, a, b, kMaxDepth, tol, &error, &l1);
    if (error > tol * std::max(1.0, l1) * 10.0) {
        throw QuadratureFailure("adaptive quadrature did not converge");
    }
    return result;
}

std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol) {
    const double re = integrate([&](double s) { return f(s).real(); }, a, b, tol);
    const double im = integrate([&](double s) { return f(s).imag(); }, a, b, tol);
    return {re, im};
}

}  // namespace pvi
