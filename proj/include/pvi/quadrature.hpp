#ifndef PVI_QUADRATURE_HPP
#define PVI_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace pvi {

// Adaptive Gauss-Kronrod integration over a real interval [a, b].
// Throws QuadratureFailure if the error estimate exceeds the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

// Complex-valued integrand of a real variable (real and imaginary parts
// integrated separately).
std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol = 1e-12);

}  // namespace pvi

#endif
