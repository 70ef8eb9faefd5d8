#ifndef PVI_DERIVATIVES_HPP
#define PVI_DERIVATIVES_HPP

#include <complex>
#include <functional>

namespace pvi {

// A jet (f, f', f'') at a point; the input shape of the residual evaluators.
struct Jet {
    std::complex<double> value;
    std::complex<double> d1;
    std::complex<double> d2;
};

// Builds a jet of f at t by 5-point central differences.  The first
// derivative uses step 3e-5*max(1,|t|) with one Richardson step; the second
// derivative uses a larger step 2e-3*max(1,|t|) to keep roundoff below
// truncation.
Jet make_jet(const std::function<std::complex<double>(double)>& f, double t);

// 5-point first derivative alone, same stepping as make_jet.
std::complex<double> fd_derivative(
    const std::function<std::complex<double>(double)>& f, double t);

}  // namespace pvi

#endif
