#include <cmath>
#include <doctest.h>

#include "pvi/derivatives.hpp"
#include "pvi/elliptic.hpp"
#include "pvi/errors.hpp"
#include "pvi/jacobi.hpp"
#include "pvi/painleve.hpp"
#include "pvi/tau.hpp"
#include "pvi/theta.hpp"

using namespace pvi;

namespace {
constexpr double kPi = 3.14159265358979323846;

// H_2 through the Okamoto route (independent of the Toda recurrence)
cplx okamoto_H2(double t, const PicardParams& pp) {
    const Jet j = make_jet(
        [&](double s) {
            return auxiliary_h(s, picard_H1(s, pp), {0.0, 0.0, 0.5, -0.5});
        },
        t);
    const cplx h2 = okamoto_shift_h(t, j.value, j.d1, j.d2,
                                    {0.0, 0.0, 0.5, -0.5}, ShiftDirection::up);
    return H_from_auxiliary(t, h2, {0.0, 0.0, 1.5, -0.5});
}

// H_{-1} through the down-shift from the h0 jet at b3 = -3/2
cplx okamoto_Hm1(double t, const PicardParams& pp) {
    const Jet j = make_jet(
        [&](double s) {
            return auxiliary_h(s, picard_H0(s, pp), {0.0, 0.0, -0.5, -0.5});
        },
        t);
    const cplx hm1 =
        okamoto_shift_h(t, j.value, j.d1, j.d2, {0.0, 0.0, -1.5, -0.5},
                        ShiftDirection::down);
    return H_from_auxiliary(t, hm1, {0.0, 0.0, -1.5, -0.5});
}
}  // namespace

TEST_CASE("d/dt log T0 = H0") {
    for (auto [t, x, y] : {std::tuple{0.4, 0.7, 0.2}, {0.5, 0.3, 0.1}}) {
        const PicardParams pp = PicardParams::from_xy(x, y);
        const cplx d =
            fd_derivative([&](double s) { return log_tau0(s, pp); }, t);
        CHECK(std::abs(d - picard_H0(t, pp)) < 1e-7);
    }
}

TEST_CASE("d/dt log T1 = H1") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    const double t = 0.4;
    const cplx d = fd_derivative([&](double s) { return log_tau1(s, pp); }, t);
    CHECK(std::abs(d - picard_H1(t, pp)) < 1e-7);
}

TEST_CASE("T0 alternative product form has the same log-derivative") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    const double t = 0.5;
    auto log_alt = [&](double s) {
        const EllipticContext c = make_context(s);
        const cplx w = pp.x + c.tau * pp.y;
        const auto [sn, cn, dn] = jacobi_sn_cn_dn(picard_z(pp, c), c);
        (void)cn;
        (void)dn;
        return pp.y * pp.y / (kPi * kPi) * std::log(c.nome) + std::log(sn) +
               std::log(theta(ThetaIndex::four, w, c)) -
               std::log(theta(ThetaIndex::four, 0.0, c));
    };
    const cplx da = fd_derivative(log_alt, t);
    const cplx d0 = fd_derivative([&](double s) { return log_tau0(s, pp); }, t);
    CHECK(std::abs(da - d0) < 1e-8);
}

TEST_CASE("T0 at y=0, t=1/2 against a direct series") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.0);
    // tau = i, nome e^{-pi}: direct 200-term sums
    const double q = std::exp(-kPi);
    double th1 = 0.0, th4 = 1.0;
    for (int n = 0; n < 200; ++n) {
        const double half = n + 0.5;
        th1 += 2.0 * ((n % 2) ? -1.0 : 1.0) * std::pow(q, half * half) *
               std::sin((2 * n + 1) * 0.3);
        const int m = n + 1;
        th4 += 2.0 * ((m % 2) ? -1.0 : 1.0) * std::pow(q, double(m) * m);
    }
    const double expected = std::pow(0.5, -0.25) * th1 / th4;
    const cplx got = tau0(0.5, pp);
    CHECK(got.real() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(got.imag()) < 1e-13);
}

TEST_CASE("T1 is nonzero for real x, y=0") {
    const PicardParams pp = PicardParams::from_xy(0.7, 0.0);
    for (double t : {0.1, 0.4, 0.8}) {
        CHECK(std::abs(tau1(t, pp)) > 1e-3);
    }
}

TEST_CASE("T1 shift consistency under the half-period symmetry") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    const PicardParams sh =
        PicardParams::from_xy(0.3 + kPi / 2.0, 0.1 + kPi / 2.0);
    const double t = 0.45;
    const cplx d1 = fd_derivative([&](double s) { return log_tau1(s, pp); }, t);
    const cplx d0 = fd_derivative([&](double s) { return log_tau0(s, sh); }, t);
    CHECK(std::abs(d1 - d0 - 1.0 / (4.0 * t) - 1.0 / (4.0 * (t - 1.0))) <
          1e-8);
}

TEST_CASE("tau at a lattice point") {
    const PicardParams pp = PicardParams::from_xy(0.0, 0.0);
    CHECK_THROWS_AS(tau0(0.4, pp), PoleProximity);
}

TEST_CASE("grid construction and bookkeeping") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    const TauGrid g = make_tau_grid(0.3, 0.7, 101, pp);
    CHECK(g.t_values.size() == 101);
    CHECK(g.valid_points() == 101);
    CHECK(g.log_tau.count(0) == 1);
    CHECK(g.log_tau.count(1) == 1);
    const auto b2 = g.b_for(2);
    CHECK(b2[2] == 1.5);
    CHECK(b2[3] == -0.5);
    CHECK_THROWS_AS(make_tau_grid(0.3, 0.7, 5, pp), StencilTooCoarse);
}

TEST_CASE("Toda extension upward matches the Okamoto route") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    const TauGrid g = make_tau_grid(0.3, 0.7, 401, pp);
    const TauGrid e = toda_extend(g, 2);
    CHECK(e.eroded_margin >= 2);
    CHECK(e.log_tau.at(2).size() ==
          401 - 2 * static_cast<std::size_t>(e.eroded_margin));
    const auto& l2 = e.log_tau.at(2);
    const double h = e.t_values[1] - e.t_values[0];
    double max_resid = 0.0;
    for (std::size_t i = 2; i + 2 < l2.size(); i += 7) {
        const cplx d =
            (-l2[i + 2] + 8.0 * l2[i + 1] - 8.0 * l2[i - 1] + l2[i - 2]) /
            (12.0 * h);
        max_resid = std::max(max_resid,
                             std::abs(d - okamoto_H2(e.t_at(i), pp)));
    }
    CHECK(max_resid < 1e-5);
}

TEST_CASE("Toda extension downward matches the Okamoto route") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    const TauGrid g = make_tau_grid(0.3, 0.7, 401, pp);
    const TauGrid e = toda_extend(g, -1);
    const auto& lm = e.log_tau.at(-1);
    const double h = e.t_values[1] - e.t_values[0];
    double max_resid = 0.0;
    for (std::size_t i = 2; i + 2 < lm.size(); i += 7) {
        const cplx d =
            (-lm[i + 2] + 8.0 * lm[i + 1] - 8.0 * lm[i - 1] + lm[i - 2]) /
            (12.0 * h);
        max_resid = std::max(max_resid,
                             std::abs(d - okamoto_Hm1(e.t_at(i), pp)));
    }
    CHECK(max_resid < 1e-5);
}

TEST_CASE("Toda stencil preconditions") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    const TauGrid g = make_tau_grid(0.3, 0.7, 9, pp);
    // one extension eats 2 points per edge, the next has too few
    CHECK_THROWS_AS(toda_extend(g, 3), StencilTooCoarse);
}

TEST_CASE("normalization invariance of grid log-derivatives") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    const TauGrid g = make_tau_grid(0.3, 0.7, 51, pp);
    const auto& l0 = g.log_tau.at(0);
    const double h = g.t_values[1] - g.t_values[0];
    const cplx shift{1.3, -2.2};
    for (std::size_t i = 2; i + 2 < l0.size(); i += 11) {
        const cplx a =
            (-l0[i + 2] + 8.0 * l0[i + 1] - 8.0 * l0[i - 1] + l0[i - 2]) /
            (12.0 * h);
        const cplx b = (-(l0[i + 2] + shift) + 8.0 * (l0[i + 1] + shift) -
                        8.0 * (l0[i - 1] + shift) + (l0[i - 2] + shift)) /
                       (12.0 * h);
        CHECK(std::abs(a - b) < 1e-12);
    }
}

TEST_CASE("JSON round trip") {
    const PicardParams pp = PicardParams::from_xy(0.3, 0.1);
    TauGrid g = toda_extend(make_tau_grid(0.25, 0.75, 64, pp), 2);
    const std::string j1 = tau_grid_to_json(g);
    const TauGrid back = tau_grid_from_json(j1);
    CHECK(back.t_values.size() == g.t_values.size());
    CHECK(back.eroded_margin == g.eroded_margin);
    CHECK(back.c_convention == g.c_convention);
    CHECK(back.x == g.x);
    CHECK(back.y == g.y);
    REQUIRE(back.log_tau.size() == g.log_tau.size());
    for (const auto& [m, vec] : g.log_tau) {
        const auto& bv = back.log_tau.at(m);
        REQUIRE(bv.size() == vec.size());
        for (std::size_t i = 0; i < vec.size(); ++i) {
            CHECK(bv[i] == vec[i]);  // bit-identical through the decimals
        }
    }
    CHECK(tau_grid_to_json(back) == j1);
}
