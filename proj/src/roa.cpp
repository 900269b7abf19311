#include "typea/roa.hpp"

#include <string>

#include "typea/dynamics.hpp"
#include "typea/equilibria.hpp"
#include "typea/errors.hpp"
#include "typea/numerics.hpp"

namespace typea {

namespace {

BasinInterval basin_from_roots(const ModelDef& model, const std::vector<Equilibrium>& roots) {
    BasinInterval b;
    b.lower = 0.0;
    b.stable_slip = roots.front().s_star;
    b.upper = model.slip_domain_upper;
    b.capped = true;
    for (const auto& r : roots) {
        if (r.stability == Stability::unstable && r.s_star > b.stable_slip) {
            b.upper = r.s_star;
            b.capped = false;
            break;
        }
    }
    return b;
}

BasinInterval basin_of(const SlipDynamics& dyn) {
    const auto roots = find_equilibria(dyn);
    const auto& first = roots.front();
    if (first.stability != Stability::stable || !(first.s_star < dyn.pullout_slip())) {
        throw StabilityMismatch("lowest equilibrium for v_w = " + std::to_string(dyn.wind()) + " is not stable");
    }
    return basin_from_roots(dyn.model(), roots);
}

void check_grid_args(SlipRange s_range, SlipRange v_range, Mesh mesh) {
    if (mesh.n_s < 2 || mesh.n_v < 2) throw DomainError("mesh must be at least 2 x 2");
    if (s_range.hi < s_range.lo || v_range.hi < v_range.lo) throw DomainError("range upper bound below lower bound");
    if (!(v_range.lo > 0.0)) throw DomainError("wind range must be positive");
}

}  // namespace

BasinInterval basin_interval(const ModelDef& model, double v_w) { return basin_of(SlipDynamics(model, v_w)); }

int sign_with_band(double w) noexcept {
    if (w > kSignZeroBand) return 1;
    if (w < -kSignZeroBand) return -1;
    return 0;
}

GridMap classify_grid(const ModelDef& model, SlipRange s_range, SlipRange v_range, Mesh mesh, std::size_t threads) {
    check_grid_args(s_range, v_range, mesh);
    GridMap map;
    map.s_axis = linspace(s_range.lo, s_range.hi, mesh.n_s);
    map.v_axis = linspace(v_range.lo, v_range.hi, mesh.n_v);
    map.cells.resize(mesh.n_s * mesh.n_v);
    map.basins.resize(mesh.n_v);

    // T_e does not depend on wind: one kernel pass serves every column.
    std::vector<double> te(mesh.n_s);
    SlipDynamics(model, map.v_axis.front()).electrical_torque(map.s_axis, te);

    parallel_for(mesh.n_v, threads, [&](std::size_t iv) {
        const SlipDynamics dyn(model, map.v_axis[iv]);
        BasinInterval basin{};
        bool has_basin = true;
        try {
            basin = basin_of(dyn);
        } catch (const NoEquilibrium&) {
            has_basin = false;
        } catch (const StabilityMismatch&) {
            has_basin = false;
        }
        map.basins[iv] = basin;
        for (std::size_t is = 0; is < mesh.n_s; ++is) {
            const double s = map.s_axis[is];
            auto& cell = map.cells[iv * mesh.n_s + is];
            cell.w_value = (dyn.mechanical_torque(s) - te[is]) / model.turbine.inertia_m;
            cell.w_sign = sign_with_band(cell.w_value);
            cell.in_basin = has_basin && s >= basin.lower && s < basin.upper;
        }
    });
    return map;
}

std::vector<FieldSample> vector_field_samples(const ModelDef& model, SlipRange s_range, SlipRange v_range, Mesh mesh,
                                              std::size_t threads) {
    check_grid_args(s_range, v_range, mesh);
    const auto s_axis = linspace(s_range.lo, s_range.hi, mesh.n_s);
    const auto v_axis = linspace(v_range.lo, v_range.hi, mesh.n_v);
    std::vector<FieldSample> out(mesh.n_s * mesh.n_v);
    parallel_for(mesh.n_v, threads, [&](std::size_t iv) {
        const SlipDynamics dyn(model, v_axis[iv]);
        for (std::size_t is = 0; is < mesh.n_s; ++is) {
            const double s = s_axis[is];
            out[iv * mesh.n_s + is] = {s, v_axis[iv], dyn.acceleration(s), 0.0};
        }
    });
    return out;
}

}  // namespace typea
