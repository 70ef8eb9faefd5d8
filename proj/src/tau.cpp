#include "pvi/tau.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pvi/errors.hpp"
#include "pvi/theta.hpp"

namespace pvi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPoleGuard = 1e-10;
constexpr double kBracketGuard = 1e-13;
constexpr double kBracketStep = 3e-3;
const cplx kI{0.0, 1.0};

// principal log of a theta value with pole guard
cplx log_theta(ThetaIndex i, cplx w, const EllipticContext& ctx) {
    const cplx val = theta(i, w, ctx);
    if (std::abs(val) < kPoleGuard) {
        throw PoleProximity("tau: theta argument at a lattice zero");
    }
    return std::log(val);
}

cplx log_tau_common(const EllipticContext& ctx, const PicardParams& pp) {
    const cplx lq = kI * kPi * ctx.tau;  // log nome
    return pp.y * pp.y / (kPi * kPi) * lq -
           log_theta(ThetaIndex::four, 0.0, ctx);
}

// shifts im(z) by multiples of 2 pi to land within pi of ref
cplx unwrap(cplx z, cplx ref) {
    double d = z.imag() - ref.imag();
    const double two_pi = 2.0 * kPi;
    const double k = std::round(d / two_pi);
    return {z.real(), z.imag() - k * two_pi};
}

// Toda additive constant of the recurrence at index m:
// (b1 + b3 + m)(b3 + b4 + m) for the base b of the grid.
double toda_constant(const std::array<double, 4>& b, int m) {
    return (b[0] + b[2] + m) * (b[2] + b[3] + m);
}

// Step of the 5-point stencils: the second-derivative stencil amplifies the
// roundoff of the stored log values by ~eps/step^2, and the bracket is later
// fed through a log whose argument can be ~1e-2, so on fine grids the stencil
// spans several grid points (step near kBracketStep) to balance that
// amplification against truncation.  The stride is clamped to fit the vector.
std::size_t bracket_stride(double h, std::size_t length) {
    const double ideal = std::max(1.0, std::round(kBracketStep / h));
    const double fit = std::max(1.0, std::floor(double(length - 3) / 4.0));
    return static_cast<std::size_t>(std::min(ideal, fit));
}

// B_i = d/dt[t(t-1) d/dt log T] + A by 5-point stencils of step s*h; valid
// for i in [2s, L-1-2s].  Expanded as (2t-1) f' + t(t-1) f'' so one stencil
// application (2s points per edge) suffices.
std::vector<cplx> toda_bracket(const TauGrid& g, const std::vector<cplx>& f,
                               double A, std::size_t s, int m_report) {
    const std::size_t L = f.size();
    const double h = s * (g.t_values[1] - g.t_values[0]);
    std::vector<cplx> out(L - 4 * s);
    for (std::size_t i = 2 * s; i + 2 * s < L; ++i) {
        const double t = g.t_at(i);
        const cplx d1 =
            (-f[i + 2 * s] + 8.0 * f[i + s] - 8.0 * f[i - s] + f[i - 2 * s]) /
            (12.0 * h);
        const cplx d2 = (-f[i + 2 * s] + 16.0 * f[i + s] - 30.0 * f[i] +
                         16.0 * f[i - s] - f[i - 2 * s]) /
                        (12.0 * h * h);
        const cplx B = (2.0 * t - 1.0) * d1 + t * (t - 1.0) * d2 + A;
        if (std::abs(B) < kBracketGuard) {
            std::ostringstream os;
            os << "toda_extend: bracket ~ 0 at m = " << m_report
               << ", t = " << t;
            throw NonPositiveArgument(os.str());
        }
        out[i - 2 * s] = B;
    }
    return out;
}

// log with branch chosen continuously along the grid
std::vector<cplx> continuous_log(const std::vector<cplx>& v) {
    std::vector<cplx> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const cplx l = std::log(v[i]);
        out[i] = (i == 0) ? l : unwrap(l, out[i - 1]);
    }
    return out;
}

void erode_all(TauGrid& g, std::size_t margin) {
    const auto d = static_cast<std::ptrdiff_t>(margin);
    for (auto& [m, vec] : g.log_tau) {
        vec = std::vector<cplx>(vec.begin() + d, vec.end() - d);
    }
    g.eroded_margin += static_cast<int>(margin);
}

}  // namespace

std::array<double, 4> TauGrid::b_for(int m) const {
    return {b_base[0], b_base[1], b_base[2] + m, b_base[3]};
}

std::size_t TauGrid::valid_points() const {
    return t_values.size() - 2 * static_cast<std::size_t>(eroded_margin);
}

double TauGrid::t_at(std::size_t i) const {
    return t_values[i + static_cast<std::size_t>(eroded_margin)];
}

cplx log_tau0(double t, const PicardParams& pp) {
    const EllipticContext ctx = make_context(t);
    const cplx w = pp.x + ctx.tau * pp.y;
    return log_tau_common(ctx, pp) - 0.25 * std::log(t) +
           log_theta(ThetaIndex::one, w, ctx);
}

cplx tau0(double t, const PicardParams& pp) {
    return std::exp(log_tau0(t, pp));
}

cplx log_tau1(double t, const PicardParams& pp) {
    const EllipticContext ctx = make_context(t);
    const cplx w = pp.x + ctx.tau * pp.y;
    return log_tau_common(ctx, pp) + 0.25 * std::log(1.0 - t) +
           log_theta(ThetaIndex::three, w, ctx);
}

cplx tau1(double t, const PicardParams& pp) {
    return std::exp(log_tau1(t, pp));
}

TauGrid make_tau_grid(double t_start, double t_end, std::size_t n_points,
                      const PicardParams& pp) {
    if (n_points < 7) {
        throw StencilTooCoarse("make_tau_grid: need at least 7 points");
    }
    if (!(t_start < t_end)) {
        throw DomainError("make_tau_grid: t_start must be < t_end");
    }
    TauGrid g;
    g.x = pp.x;
    g.y = pp.y;
    g.t_values.resize(n_points);
    const double h = (t_end - t_start) / double(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        g.t_values[i] = t_start + double(i) * h;
    }
    std::vector<cplx> l0(n_points), l1(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        l0[i] = log_tau0(g.t_values[i], pp);
        l1[i] = log_tau1(g.t_values[i], pp);
        if (i > 0) {
            l0[i] = unwrap(l0[i], l0[i - 1]);
            l1[i] = unwrap(l1[i], l1[i - 1]);
        }
    }
    g.log_tau[0] = std::move(l0);
    g.log_tau[1] = std::move(l1);
    return g;
}

TauGrid toda_extend(const TauGrid& grid, int target_m) {
    TauGrid g = grid;
    if (g.log_tau.size() < 2) {
        throw DomainError("toda_extend: need two consecutive seed members");
    }
    const double log_c = std::log(g.c_convention);
    while (g.log_tau.rbegin()->first < target_m) {
        const int m = g.log_tau.rbegin()->first;  // extend from equation at m
        if (g.valid_points() < 7) {
            throw StencilTooCoarse("toda_extend: fewer than 7 valid points");
        }
        const auto& fm = g.log_tau.at(m);
        const auto& fm1 = g.log_tau.at(m - 1);
        const std::size_t s =
            bracket_stride(g.t_values[1] - g.t_values[0], fm.size());
        const auto B = toda_bracket(g, fm, toda_constant(g.b_base, m), s, m);
        const auto logB = continuous_log(B);
        std::vector<cplx> next(B.size());
        for (std::size_t i = 0; i < B.size(); ++i) {
            next[i] = logB[i] + 2.0 * fm[i + 2 * s] - fm1[i + 2 * s] - log_c;
        }
        erode_all(g, 2 * s);
        g.log_tau[m + 1] = std::move(next);
    }
    while (g.log_tau.begin()->first > target_m) {
        const int m = g.log_tau.begin()->first;
        if (g.valid_points() < 7) {
            throw StencilTooCoarse("toda_extend: fewer than 7 valid points");
        }
        const auto& fm = g.log_tau.at(m);
        const auto& fp1 = g.log_tau.at(m + 1);
        const std::size_t s =
            bracket_stride(g.t_values[1] - g.t_values[0], fm.size());
        const auto B = toda_bracket(g, fm, toda_constant(g.b_base, m), s, m);
        const auto logB = continuous_log(B);
        std::vector<cplx> prev(B.size());
        for (std::size_t i = 0; i < B.size(); ++i) {
            prev[i] = logB[i] + 2.0 * fm[i + 2 * s] - fp1[i + 2 * s] - log_c;
        }
        erode_all(g, 2 * s);
        g.log_tau[m - 1] = std::move(prev);
    }
    return g;
}

std::string tau_grid_to_json(const TauGrid& grid) {
    nlohmann::json j;
    j["t_start"] = grid.t_values.front();
    j["t_end"] = grid.t_values.back();
    j["n_points"] = grid.t_values.size();
    j["x"] = {grid.x.real(), grid.x.imag()};
    j["y"] = {grid.y.real(), grid.y.imag()};
    j["c_convention"] = grid.c_convention;
    j["eroded_margin"] = grid.eroded_margin;
    nlohmann::json members = nlohmann::json::object();
    for (const auto& [m, vec] : grid.log_tau) {
        nlohmann::json arr = nlohmann::json::array();
        for (const cplx& v : vec) {
            arr.push_back({v.real(), v.imag()});
        }
        members[std::to_string(m)] = std::move(arr);
    }
    j["members"] = std::move(members);
    return j.dump(2);
}

TauGrid tau_grid_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    TauGrid g;
    const double t_start = j.at("t_start").get<double>();
    const double t_end = j.at("t_end").get<double>();
    const std::size_t n = j.at("n_points").get<std::size_t>();
    g.t_values.resize(n);
    const double h = (t_end - t_start) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        g.t_values[i] = t_start + double(i) * h;
    }
    g.t_values.front() = t_start;
    g.t_values.back() = t_end;
    const auto x = j.at("x");
    const auto y = j.at("y");
    g.x = cplx(x[0].get<double>(), x[1].get<double>());
    g.y = cplx(y[0].get<double>(), y[1].get<double>());
    g.c_convention = j.at("c_convention").get<double>();
    g.eroded_margin = j.at("eroded_margin").get<int>();
    for (const auto& [key, arr] : j.at("members").items()) {
        std::vector<cplx> vec;
        vec.reserve(arr.size());
        for (const auto& pair : arr) {
            vec.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        g.log_tau[std::stoi(key)] = std::move(vec);
    }
    return g;
}

}  // namespace pvi
