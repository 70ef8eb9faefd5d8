#include <cmath>
#include <doctest.h>

#include "pvi/derivatives.hpp"
#include "pvi/elliptic.hpp"
#include "pvi/errors.hpp"
#include "pvi/jacobi.hpp"
#include "pvi/painleve.hpp"
#include "pvi/theta.hpp"

using namespace pvi;

namespace {
constexpr double kPi = 3.14159265358979323846;
const std::array<double, 4> kB0{0.0, 0.0, -0.5, -0.5};
const std::array<double, 4> kB1{0.0, 0.0, 0.5, -0.5};

cplx h0_closed(double t, const PicardParams& pp) {
    return auxiliary_h(t, picard_H0(t, pp), kB0);
}
cplx h1_closed(double t, const PicardParams& pp) {
    return auxiliary_h(t, picard_H1(t, pp), kB1);
}
}  // namespace

TEST_CASE("parameter systems") {
    {
        const PainleveParams p = params_from_b(kB0);
        CHECK(p.alpha == 0.0);
        CHECK(p.beta == 0.0);
        CHECK(p.gamma == 0.0);
        CHECK(p.delta == 0.5);
    }
    {
        const PainleveParams p = params_from_b(kB1);
        CHECK(p.theta == 1.0);
        CHECK(p.kappa_inf == 1.0);
    }
    {
        const PainleveParams p = params_from_b({0.0, 0.0, 0.0, 0.0});
        CHECK(p.kappa0 == 0.0);
        CHECK(p.kappa1 == 0.0);
        CHECK(p.kappa_inf == 0.0);
        CHECK(p.theta == 1.0);
        CHECK(p.delta == 0.0);
    }
}

TEST_CASE("PicardParams representations") {
    const PicardParams pp = PicardParams::from_xy(0.7, 0.2);
    CHECK(std::abs(pp.c1() - (2.0 * 0.7 / kPi + 1.0)) < 1e-16);
    const PicardParams back = PicardParams::from_c(pp.c1(), pp.c2());
    CHECK(std::abs(back.x - pp.x) < 1e-15);
    CHECK(std::abs(back.y - pp.y) < 1e-15);
}

TEST_CASE("P_VI residual on the Picard jet") {
    const PainleveParams picard = picard_params();
    const double t = 0.4;
    const PicardParams pp = PicardParams::from_xy(0.7, 0.2);
    const cplx q = picard_q0(t, pp);
    const cplx q1 = picard_q0_dt(t, pp);
    const cplx q2 =
        fd_derivative([&](double s) { return picard_q0_dt(s, pp); }, t);
    CHECK(std::abs(pvi_residual(t, q, q1, q2, picard)) < 1e-6);
}

TEST_CASE("P_VI residual of the algebraic solution sqrt(t)") {
    const PainleveParams picard = picard_params();
    const double t = 0.4;
    const double rt = std::sqrt(t);
    CHECK(std::abs(pvi_residual(t, rt, 0.5 / rt, -0.25 / (t * rt), picard)) <
          1e-12);
}

TEST_CASE("P_VI residual nonzero off a solution") {
    const PainleveParams picard = picard_params();
    CHECK(std::abs(pvi_residual(0.5, 0.25, 0.0, 0.0, picard)) > 1e-3);
}

TEST_CASE("P_VI singular loci") {
    const PainleveParams picard = picard_params();
    CHECK_THROWS_AS(pvi_residual(0.4, 0.4, 0.0, 0.0, picard),
                    SingularConfiguration);
    CHECK_THROWS_AS(pvi_residual(0.4, 0.0, 0.0, 0.0, picard),
                    SingularConfiguration);
    CHECK_THROWS_AS(pvi_residual(0.4, 1.0, 0.0, 0.0, picard),
                    SingularConfiguration);
}

TEST_CASE("Hamiltonian is quadratic in momentum") {
    const PainleveParams p = params_from_b({0.3, -0.2, 0.7, 0.1});
    const double t = 0.4;
    const cplx q{0.6, 0.15};
    const cplx pm{0.8, -0.3};
    const cplx sym = hamiltonian_H(t, q, pm, p) + hamiltonian_H(t, q, -pm, p) -
                     2.0 * hamiltonian_H(t, q, 0.0, p);
    const cplx coeff = q * (q - 1.0) * (q - t) / (t * (t - 1.0));
    CHECK(std::abs(sym - 2.0 * coeff * pm * pm) < 1e-13);
}

TEST_CASE("momentum recovery round-trips through dH/dp") {
    const PainleveParams p = params_from_b({0.3, -0.2, 0.7, 0.1});
    const double t = 0.45;
    const cplx q{0.6, 0.15};
    const cplx q1{0.4, 0.2};
    const cplx pm = momentum_from_qprime(t, q, q1, p);
    const double h = 1e-6;
    const cplx dHdp =
        (hamiltonian_H(t, q, pm + h, p) - hamiltonian_H(t, q, pm - h, p)) /
        (2.0 * h);
    CHECK(std::abs(dHdp - q1) < 1e-9);
}

TEST_CASE("momentum formula collapse") {
    // kappa0 = kappa1 = 0, theta = 0, q1 = 0  =>  p = -1/(2(q-t))
    const PainleveParams p = params_from_b({0.0, 0.0, -0.5, -0.5});
    const double t = 0.3;
    const cplx q{0.8, 0.0};
    CHECK(std::abs(momentum_from_qprime(t, q, 0.0, p) +
                   1.0 / (2.0 * (q - t))) < 1e-14);
}

TEST_CASE("Hamiltonian route equals closed-form H0") {
    const double t = 0.3;
    const PicardParams pp = PicardParams::from_xy(0.5, 0.1);
    const PainleveParams picard = picard_params();
    const cplx q = picard_q0(t, pp);
    const cplx pm = momentum_from_qprime(t, q, picard_q0_dt(t, pp), picard);
    CHECK(std::abs(hamiltonian_H(t, q, pm, picard) - picard_H0(t, pp)) < 1e-9);
}

TEST_CASE("auxiliary Hamiltonian presets") {
    const double t = 0.37;
    const cplx H{0.9, -0.4};
    CHECK(std::abs(auxiliary_h(t, H, kB0) -
                   (t * (t - 1.0) * H + t / 4.0 - 0.125)) < 1e-15);
    CHECK(std::abs(auxiliary_h(t, H, kB1) -
                   (t * (t - 1.0) * H - t / 4.0 + 0.125)) < 1e-15);
    CHECK(auxiliary_h(0.5, 0.0, {0.0, 0.0, 0.0, 0.0}) == cplx(0.0, 0.0));
    CHECK(std::abs(H_from_auxiliary(t, auxiliary_h(t, H, kB1), kB1) - H) <
          1e-14);
}

TEST_CASE("E_VI residual") {
    // linear family h = a t + 1/8 solves E_VI exactly at the Picard preset
    for (double a : {-1.3, 0.4, 2.0}) {
        CHECK(std::abs(evi_residual(0.6, a * 0.6 + 0.125, a, 0.0, kB0)) <
              1e-13);
    }
    // trivial zero jet
    CHECK(std::abs(evi_residual(0.5, 0.0, 0.0, 0.0, kB0)) < 1e-16);
    // Picard h0 jet
    const PicardParams pp = PicardParams::from_xy(0.4, 0.15);
    const double t = 0.35;
    const Jet j = make_jet([&](double s) { return h0_closed(s, pp); }, t);
    CHECK(std::abs(evi_residual(t, j.value, j.d1, j.d2, kB0)) < 1e-6);
}

TEST_CASE("Okamoto shift") {
    const double t = 0.5;
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    const Jet j0 = make_jet([&](double s) { return h0_closed(s, pp); }, t);
    const cplx hp =
        okamoto_shift_h(t, j0.value, j0.d1, j0.d2, kB0, ShiftDirection::up);
    // up-shift of h0 is h1
    CHECK(std::abs(hp - h1_closed(t, pp)) < 1e-7);
    // round trip through the inverse map (h_+ jet = h1 closed-form jet)
    const Jet j1 = make_jet([&](double s) { return h1_closed(s, pp); }, t);
    const cplx back =
        okamoto_shift_h(t, j1.value, j1.d1, j1.d2, kB0, ShiftDirection::down);
    CHECK(std::abs(back - j0.value) < 1e-8);
    // momentum route to the shifted auxiliary Hamiltonian
    const PainleveParams picard = picard_params();
    const cplx q = picard_q0(t, pp);
    const cplx pm = momentum_from_qprime(t, q, picard_q0_dt(t, pp), picard);
    const cplx h_mom = j0.value - q * (q - 1.0) * pm - 0.5 * q + 0.25;
    CHECK(std::abs(h_mom - hp) < 1e-7);
}

TEST_CASE("degenerate Okamoto shift") {
    CHECK_THROWS_AS(okamoto_shift_h(0.5, 0.0, -0.25, 0.0, kB0,
                                    ShiftDirection::up),
                    DegenerateShift);
}

TEST_CASE("Picard solution forms agree") {
    const double t = 0.4;
    const PicardParams pp = PicardParams::from_xy(0.7, 0.2);
    CHECK(std::abs(picard_q0(t, pp) - picard_q0_alt(t, pp)) < 1e-10);
    // Weierstrass route
    const EllipticContext c = make_context(t);
    const auto [e1, e2, e3] = weierstrass_invariants(t);
    (void)e2;
    const cplx u = pp.c1() * c.omega1 + pp.c2() * c.omega2;
    const auto [sn, cn, dn] = jacobi_sn_cn_dn(u * std::sqrt(e1 - e3), c);
    (void)cn;
    (void)dn;
    const cplx wp = e3 + (e1 - e3) / (sn * sn);
    CHECK(std::abs(wp + (t + 1.0) / 3.0 - picard_q0(t, pp)) < 1e-9);
}

TEST_CASE("Picard solution at the lattice point x=y=0") {
    // z = 0: cn = dn = 1, so q0 = t, the singular locus of P_VI
    const PicardParams pp = PicardParams::from_xy(0.0, 0.0);
    const double t = 0.3;
    CHECK(std::abs(picard_q0(t, pp) - t) < 1e-14);
    CHECK_THROWS_AS(pvi_residual(t, picard_q0(t, pp), 0.0, 0.0,
                                 picard_params()),
                    SingularConfiguration);
}

TEST_CASE("weierstrass invariants") {
    for (double t : {0.17, 0.5, 0.83}) {
        const auto [e1, e2, e3] = weierstrass_invariants(t);
        CHECK(std::abs(e1 + e2 + e3) < 1e-15);
        CHECK(e1 - e3 == 1.0);
    }
    const auto [e1, e2, e3] = weierstrass_invariants(0.5);
    CHECK(e1 == 0.5);
    CHECK(e2 == 0.0);
    CHECK(e3 == -0.5);
}

TEST_CASE("q0 derivative closed form") {
    for (auto [t, x, y] : {std::tuple{0.4, 0.7, 0.2}, {0.6, 0.3, -0.1}}) {
        const PicardParams pp = PicardParams::from_xy(x, y);
        const cplx fd =
            fd_derivative([&](double s) { return picard_q0(s, pp); }, t);
        CHECK(std::abs(picard_q0_dt(t, pp) - fd) < 1e-7);
    }
    // real-analytic family at y = 0
    const PicardParams pr = PicardParams::from_xy(0.9, 0.0);
    CHECK(std::abs(picard_q0_dt(0.5, pr).imag()) < 1e-12);
}

TEST_CASE("script_E") {
    // theta_1' vanishes at pi/2
    const PicardParams pp = PicardParams::from_xy(kPi / 2.0, 0.0);
    CHECK(std::abs(script_E(0.4, pp)) < 1e-13);
    // odd under (x,y) -> (-x,-y)
    const PicardParams pa = PicardParams::from_xy(0.4, 0.1);
    const PicardParams pb = PicardParams::from_xy(-0.4, -0.1);
    CHECK(std::abs(script_E(0.3, pa) + script_E(0.3, pb)) < 1e-12);
    // relation between theta_1 and theta_4 log-derivatives
    const double t = 0.4;
    const PicardParams pc = PicardParams::from_xy(0.7, 0.2);
    const EllipticContext c = make_context(t);
    const cplx w = pc.x + c.tau * pc.y;
    const auto [sn, cn, dn] = jacobi_sn_cn_dn(picard_z(pc, c), c);
    const cplx l1 =
        theta_dv(ThetaIndex::one, w, c, 1) / theta(ThetaIndex::one, w, c);
    const cplx l4 =
        theta_dv(ThetaIndex::four, w, c, 1) / theta(ThetaIndex::four, w, c);
    CHECK(std::abs(l1 - l4 - 2.0 * c.K / kPi * cn * dn / sn) < 1e-10);
}

TEST_CASE("H0 dual routes") {
    {
        const PicardParams pp = PicardParams::from_xy(0.7, 0.2);
        CHECK(std::abs(picard_H0(0.4, pp) - picard_H0_from_q(0.4, pp)) < 1e-8);
    }
    {
        const PicardParams pp = PicardParams::from_xy(0.5, 0.0);
        const cplx a = picard_H0(0.25, pp);
        const cplx b = picard_H0_from_q(0.25, pp);
        CHECK(std::abs(a.imag()) < 1e-12);
        CHECK(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("H1 symmetries") {
    {
        const double t = 0.4;
        const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
        const PicardParams sh = PicardParams::from_xy(0.3 + kPi / 2.0,
                                                      0.1 + kPi / 2.0);
        CHECK(std::abs(picard_H1(t, pp) -
                       (picard_H0(t, sh) + 1.0 / (4.0 * t) +
                        1.0 / (4.0 * (t - 1.0)))) < 1e-10);
    }
    {
        const double t = 0.6;
        const PicardParams pp = PicardParams::from_xy(0.2, -0.3);
        const PicardParams sh = PicardParams::from_xy(0.2 + kPi / 2.0,
                                                      -0.3 + kPi / 2.0);
        CHECK(std::abs(h1_closed(t, pp) - h0_closed(t, sh)) < 1e-10);
    }
    // Okamoto route: auxiliary_h(H1) equals the up-shift of the h0 jet
    const double t = 0.5;
    const PicardParams pp = PicardParams::from_xy(0.4, 0.15);
    const Jet j0 = make_jet([&](double s) { return h0_closed(s, pp); }, t);
    const cplx hp =
        okamoto_shift_h(t, j0.value, j0.d1, j0.d2, kB0, ShiftDirection::up);
    CHECK(std::abs(auxiliary_h(t, picard_H1(t, pp), kB1) - hp) < 1e-7);
}

TEST_CASE("E_VI residual of the h1 jet") {
    const PicardParams pp = PicardParams::from_xy(0.4, 0.15);
    const double t = 0.35;
    const Jet j = make_jet([&](double s) { return h1_closed(s, pp); }, t);
    CHECK(std::abs(evi_residual(t, j.value, j.d1, j.d2, kB1)) < 1e-6);
}
