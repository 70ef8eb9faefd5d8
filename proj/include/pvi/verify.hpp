#ifndef PVI_VERIFY_HPP
#define PVI_VERIFY_HPP

#include <string>
#include <vector>

namespace pvi {

// One invariant check: the maximum residual observed over its grid against
// the pinned tolerance (scaled by tol_scale).
struct CheckResult {
    std::string name;
    std::size_t grid_size;
    double max_residual;
    double tolerance;

    bool pass() const { return max_residual < tolerance; }
};

struct VerifyOptions {
    int grid = 1;           // grid density multiplier
    double tol_scale = 1.0; // multiplies every tolerance
};

std::vector<CheckResult> verify_elliptic(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_theta(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_jacobi(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_painleve(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_tau(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_all(const VerifyOptions& opt = {});

}  // namespace pvi

#endif
