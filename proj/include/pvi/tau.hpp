#ifndef PVI_TAU_HPP
#define PVI_TAU_HPP

#include <map>
#include <string>
#include <vector>

#include "pvi/painleve.hpp"

namespace pvi {

// A uniform t-grid carrying log T_m vectors for a range of m.
//
// Member vectors are aligned to t_values[eroded_margin .. n-1-eroded_margin]:
// each Toda extension step drops two points per edge (the 5-point stencils),
// and all members are truncated to the common valid interior.
struct TauGrid {
    std::vector<double> t_values;
    std::map<int, std::vector<cplx>> log_tau;
    std::array<double, 4> b_base{0.0, 0.0, -0.5, -0.5};
    double c_convention = 1.0;
    int eroded_margin = 0;
    cplx x, y;  // Picard labels the grid was built from

    // b-parameters of member m: (b1, b2, b3+m, b4).
    std::array<double, 4> b_for(int m) const;

    // Number of currently valid grid points.
    std::size_t valid_points() const;
    double t_at(std::size_t i) const;  // i indexes a member vector
};

// log T_0(t) = (y^2/pi^2) log q - (1/4) log t
//              + log theta_1(x+tau y|tau) - log theta_4(0|tau),
// principal branches, c_0 = 1.  d/dt log T_0 = H_0.
cplx log_tau0(double t, const PicardParams& pp);
cplx tau0(double t, const PicardParams& pp);

// log T_1(t) = (y^2/pi^2) log q + (1/4) log(1-t)
//              + log theta_3(x+tau y|tau) - log theta_4(0|tau), c_1 = 1.
// d/dt log T_1 = H_1.
cplx log_tau1(double t, const PicardParams& pp);
cplx tau1(double t, const PicardParams& pp);

// Seeds a grid with the closed-form members m = 0, 1, with the log branch
// unwrapped along t.
TauGrid make_tau_grid(double t_start, double t_end, std::size_t n_points,
                      const PicardParams& pp);

// Extends the grid member range to include target_m via the Toda recurrence
//   log T_{m+1} = log{ d/dt[t(t-1) d/dt log T_m] + (m-1/2)(m-1) }
//                 + 2 log T_m - log T_{m-1} - log c,
// derivatives by 5-point central grid stencils, and symmetrically downward.
// Input grid is not mutated.  Throws NonPositiveArgument if the bracket
// vanishes at a grid point, StencilTooCoarse below 7 valid points.
TauGrid toda_extend(const TauGrid& grid, int target_m);

// JSON document per the external schema:
// {t_start, t_end, n_points, x, y, c_convention,
//  members: {m: [re, im pairs]}, eroded_margin}.
std::string tau_grid_to_json(const TauGrid& grid);
TauGrid tau_grid_from_json(const std::string& text);

}  // namespace pvi

#endif
