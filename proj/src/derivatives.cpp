#include "pvi/derivatives.hpp"

#include <cmath>

namespace pvi {

namespace {

using cd = std::complex<double>;

// 5-point central first derivative at step h.
cd d1_5pt(const std::function<cd(double)>& f, double t, double h) {
    return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) /
           (12.0 * h);
}

}  // namespace

cd fd_derivative(const std::function<cd(double)>& f, double t) {
    const double h = 3e-5 * std::max(1.0, std::abs(t));
    const cd dh = d1_5pt(f, t, h);
    const cd dh2 = d1_5pt(f, t, h / 2.0);
    // one Richardson step on the O(h^4) stencil
    return (16.0 * dh2 - dh) / 15.0;
}

Jet make_jet(const std::function<cd(double)>& f, double t) {
    Jet j;
    j.value = f(t);
    j.d1 = fd_derivative(f, t);
    // larger step for f'': roundoff scales as eps/h^2
    const double h = 2e-3 * std::max(1.0, std::abs(t));
    j.d2 = (-f(t + 2 * h) + 16.0 * f(t + h) - 30.0 * j.value +
            16.0 * f(t - h) - f(t - 2 * h)) /
           (12.0 * h * h);
    return j;
}

}  // namespace pvi
