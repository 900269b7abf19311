#include "typea/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "typea/equilibria.hpp"
#include "typea/errors.hpp"
#include "typea/turbine.hpp"

namespace typea {

SlipDynamics::SlipDynamics(const ModelDef& model, double v_w)
    : model_(model), v_w_(v_w), th_(thevenin_reduce(model.machine)) {
    if (!(v_w > 0.0) || !std::isfinite(v_w)) {
        throw DomainError("wind velocity must be positive, got " + std::to_string(v_w));
    }
    coeffs_ = torque_coeffs(th_, model.machine.r_r, model.machine.r_mult);
}

double SlipDynamics::electrical_torque(double s) const noexcept { return kernels::electrical_torque_ref(coeffs_, s); }

void SlipDynamics::electrical_torque(std::span<const double> slip, std::span<double> out) const noexcept {
    kernels::electrical_torque(coeffs_, slip, out);
}

double SlipDynamics::mechanical_torque(double s) const {
    return typea::mechanical_torque(model_.turbine, {.v_w = v_w_, .s = s});
}

double SlipDynamics::net_torque(double s) const { return mechanical_torque(s) - electrical_torque(s); }

double SlipDynamics::acceleration(double s) const { return net_torque(s) / model_.turbine.inertia_m; }

double SlipDynamics::pullout_slip() const noexcept {
    return typea::pullout_slip(th_, model_.machine.r_r, model_.machine.r_mult);
}

double net_acceleration(const ModelDef& model, double v_w, double s) {
    return SlipDynamics(model, v_w).acceleration(s);
}

double shifted_field(const ModelDef& model, double v_w, double s0, double x) {
    return SlipDynamics(model, v_w).acceleration(s0 + x);
}

namespace {

bool at_rest(const SlipDynamics& dyn, std::span<const double> equilibria, double s, const SimulationOptions& opts,
             double& which) {
    if (equilibria.empty() || !(std::abs(dyn.acceleration(s)) < opts.rate_tol)) return false;
    double best = opts.convergence_tol;
    bool found = false;
    for (double eq : equilibria) {
        const double d = std::abs(s - eq);
        if (d <= best) {
            best = d;
            which = eq;
            found = true;
        }
    }
    return found;
}

bool left_box(double s, double floor, double ceil, TrajectoryOutcome& out) {
    if (s < floor || std::isnan(s)) {
        out = {Outcome::diverged, s, Direction::down};
        return true;
    }
    if (s > ceil) {
        out = {Outcome::diverged, s, Direction::up};
        return true;
    }
    return false;
}

}  // namespace

Trajectory simulate(const SlipDynamics& dyn, std::span<const double> equilibria, double s_init, double step,
                    double t_end, const SimulationOptions& opts) {
    if (!(step > 0.0) || !std::isfinite(step)) throw StepError("integration step must be positive");
    if (!(t_end >= step) || !std::isfinite(t_end)) throw StepError("t_end must be at least one step");
    if (!(s_init > -1.0) || !std::isfinite(s_init)) throw DomainError("initial slip must exceed -1");

    const double ceil = dyn.model().slip_domain_upper;
    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / step));

    Trajectory traj;
    traj.step = step;
    traj.samples.reserve(std::min<std::size_t>(n_steps + 1, 1u << 20));
    traj.samples.push_back({0.0, s_init});

    double s = s_init;
    double eq = 0.0;
    if (left_box(s, opts.divergence_floor, ceil, traj.outcome)) return traj;
    if (at_rest(dyn, equilibria, s, opts, eq)) {
        traj.outcome = {Outcome::converged, eq, Direction::up};
        return traj;
    }

    const double h = step;
    for (std::size_t k = 1; k <= n_steps; ++k) {
        const double k1 = dyn.acceleration(s);
        const double k2 = dyn.acceleration(s + 0.5 * h * k1);
        const double k3 = dyn.acceleration(s + 0.5 * h * k2);
        const double k4 = dyn.acceleration(s + h * k3);
        s += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        traj.samples.push_back({static_cast<double>(k) * h, s});

        if (left_box(s, opts.divergence_floor, ceil, traj.outcome)) return traj;
        if (at_rest(dyn, equilibria, s, opts, eq)) {
            traj.outcome = {Outcome::converged, eq, Direction::up};
            return traj;
        }
    }
    traj.outcome = {Outcome::undecided, s, Direction::up};
    return traj;
}

Trajectory simulate(const ModelDef& model, double v_w, double s_init, double step, double t_end,
                    const SimulationOptions& opts) {
    const SlipDynamics dyn(model, v_w);
    std::vector<double> roots;
    try {
        for (const auto& e : find_equilibria(dyn)) roots.push_back(e.s_star);
    } catch (const NoEquilibrium&) {
        // nothing to converge to; the run can only diverge or stay undecided
    }
    return simulate(dyn, roots, s_init, step, t_end, opts);
}

}  // namespace typea
