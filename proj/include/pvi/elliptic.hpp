#ifndef PVI_ELLIPTIC_HPP
#define PVI_ELLIPTIC_HPP

#include <complex>

namespace pvi {

using cplx = std::complex<double>;

// All modulus-level quantities for a given parameter t = k^2.
//
// Conventions: K' = K(1-t), E' = E(1-t), tau = i K'/K, nome = exp(i pi tau),
// half-periods omega1 = K, omega2 = i K'.  Valid for real t in
// (margin, 1-margin); tau is purely imaginary with positive imaginary part.
struct EllipticContext {
    double t;
    double k;        // sqrt(t)
    double k_prime;  // sqrt(1-t)
    double K;
    double K_prime;
    double E;
    double E_prime;
    cplx tau;
    cplx nome;
    cplx omega1;
    cplx omega2;
};

// Arithmetic-geometric mean of a, b > 0.  Iterates until |a_n - b_n| <
// 1e-16 * a_n.  Throws NonPositiveInput.
double agm(double a, double b);

// Populates a full EllipticContext at parameter t.  K = pi/(2 agm(1, k')),
// E by the AGM companion sum.  Throws DomainError if t is outside
// (margin, 1-margin).
EllipticContext make_context(double t, double margin = 1e-8);

// Closed-form t-derivatives of the complete integrals.
double dK_dt(const EllipticContext& ctx);
double dE_dt(const EllipticContext& ctx);

// E K' + E' K - K K' - pi/2; vanishes identically (Legendre relation).
double legendre_defect(const EllipticContext& ctx);

// d tau / dt = i pi / (4 t (t-1) K^2).
cplx dtau_dt(const EllipticContext& ctx);

}  // namespace pvi

#endif
