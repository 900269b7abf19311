#pragma once

#include <vector>

#include "typea/dynamics.hpp"
#include "typea/model_config.hpp"

namespace typea {

enum class Stability { stable, unstable };

struct Equilibrium {
    double s_star = 0.0;
    double v_w = 0.0;
    Stability stability = Stability::stable;
    double residual = 0.0;  ///< |T_m - T_e| at s_star
};

struct EquilibriumScan {
    std::size_t grid_points = 2000;
    double lower = 1e-6;
    double bracket_width = 1e-12;
    double slope_step = 1e-8;
};

/// Every root of T_m - T_e on [scan.lower, slip_domain_upper], ascending.
///
/// Roots are bracketed on a uniform grid, bisected to `bracket_width` and
/// classified by the sign of a central difference of T_m - T_e.
/// Throws NoEquilibrium when the grid shows no sign change.
std::vector<Equilibrium> find_equilibria(const SlipDynamics& dyn, const EquilibriumScan& scan = {});
std::vector<Equilibrium> find_equilibria(const ModelDef& model, double v_w, const EquilibriumScan& scan = {});

/// Lowest root; must be stable and below the pull-out slip (else StabilityMismatch).
Equilibrium stable_equilibrium(const SlipDynamics& dyn, const EquilibriumScan& scan = {});
Equilibrium stable_equilibrium(const ModelDef& model, double v_w, const EquilibriumScan& scan = {});

/// Bisection on a sign-changing bracket [lo, hi] of `g` until hi - lo < width.
template <class F>
double bisect(F&& g, double lo, double hi, double g_lo, double width) {
    while (hi - lo >= width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double g_mid = g(mid);
        if (g_mid == 0.0) return mid;
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace typea
