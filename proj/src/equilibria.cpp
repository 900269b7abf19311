#include "typea/equilibria.hpp"

#include <cmath>
#include <string>

#include "typea/errors.hpp"

namespace typea {

namespace {

Equilibrium classify(const SlipDynamics& dyn, double s, const EquilibriumScan& scan) {
    const double h = scan.slope_step;
    const double slope = (dyn.net_torque(s + h) - dyn.net_torque(s - h)) / (2.0 * h);
    return Equilibrium{.s_star = s,
                       .v_w = dyn.wind(),
                       .stability = slope < 0.0 ? Stability::stable : Stability::unstable,
                       .residual = std::abs(dyn.net_torque(s))};
}

}  // namespace

std::vector<Equilibrium> find_equilibria(const SlipDynamics& dyn, const EquilibriumScan& scan) {
    const double v_w = dyn.wind();
    if (!(v_w > 0.0 && v_w <= 2.0)) {
        throw DomainError("equilibrium search needs v_w in (0, 2], got " + std::to_string(v_w));
    }
    const double lo = scan.lower;
    const double hi = dyn.model().slip_domain_upper;
    const std::size_t n = scan.grid_points;

    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    std::vector<double> g(n);
    dyn.electrical_torque(grid, g);
    for (std::size_t i = 0; i < n; ++i) g[i] = dyn.mechanical_torque(grid[i]) - g[i];

    auto net = [&dyn](double s) { return dyn.net_torque(s); };
    std::vector<Equilibrium> roots;
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i] == 0.0) {
            roots.push_back(classify(dyn, grid[i], scan));
            continue;
        }
        if (i + 1 < n && g[i + 1] != 0.0 && (g[i] < 0.0) != (g[i + 1] < 0.0)) {
            const double s = bisect(net, grid[i], grid[i + 1], g[i], scan.bracket_width);
            roots.push_back(classify(dyn, s, scan));
        }
    }
    if (roots.empty()) {
        throw NoEquilibrium("no equilibrium for v_w = " + std::to_string(v_w) + " on slip range [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return roots;
}

std::vector<Equilibrium> find_equilibria(const ModelDef& model, double v_w, const EquilibriumScan& scan) {
    return find_equilibria(SlipDynamics(model, v_w), scan);
}

Equilibrium stable_equilibrium(const SlipDynamics& dyn, const EquilibriumScan& scan) {
    const auto roots = find_equilibria(dyn, scan);
    const auto& first = roots.front();
    if (first.stability != Stability::stable || !(first.s_star < dyn.pullout_slip())) {
        throw StabilityMismatch("lowest equilibrium at s = " + std::to_string(first.s_star) + " for v_w = " +
                                std::to_string(dyn.wind()) + " is not a stable root below the pull-out slip");
    }
    return first;
}

Equilibrium stable_equilibrium(const ModelDef& model, double v_w, const EquilibriumScan& scan) {
    return stable_equilibrium(SlipDynamics(model, v_w), scan);
}

}  // namespace typea
