#pragma once

#include <span>
#include <vector>

#include "typea/induction_machine.hpp"
#include "typea/model_config.hpp"

namespace typea {

/// Slip swing equation M ds/dt = T_m(s) - T_e(s) at a fixed wind velocity.
///
/// Construction performs the Thevenin reduction once; evaluation is then a
/// handful of flops plus one exp for the turbine side.
class SlipDynamics {
public:
    SlipDynamics(const ModelDef& model, double v_w);

    double electrical_torque(double s) const noexcept;
    double mechanical_torque(double s) const;
    /// T_m - T_e
    double net_torque(double s) const;
    /// (T_m - T_e) / M
    double acceleration(double s) const;

    /// Batch T_e over `slip` through the SIMD kernel.
    void electrical_torque(std::span<const double> slip, std::span<double> out) const noexcept;

    double pullout_slip() const noexcept;
    double wind() const noexcept { return v_w_; }
    const ModelDef& model() const noexcept { return model_; }
    const TheveninEquivalent& thevenin() const noexcept { return th_; }

private:
    ModelDef model_;
    double v_w_;
    TheveninEquivalent th_;
    kernels::TorqueCoeffs coeffs_;
};

double net_acceleration(const ModelDef& model, double v_w, double s);

/// f(x) = net_acceleration(s0 + x); zero at x = 0 when s0 is an equilibrium.
double shifted_field(const ModelDef& model, double v_w, double s0, double x);

struct TrajectorySample {
    double t = 0.0;
    double s = 0.0;
};

enum class Outcome { converged, diverged, undecided };
enum class Direction { up, down };

struct TrajectoryOutcome {
    Outcome kind = Outcome::undecided;
    /// Equilibrium slip when converged, exit slip when diverged, final slip otherwise.
    double slip = 0.0;
    Direction direction = Direction::up;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    TrajectoryOutcome outcome;
    double step = 0.0;
};

struct SimulationOptions {
    double convergence_tol = 1e-6;  ///< slip distance to a known equilibrium
    double rate_tol = 1e-9;         ///< |ds/dt| below which motion has stopped
    double divergence_floor = -0.1;
};

/// Fixed-step classic RK4 on ds/dt = (T_m - T_e) / M.
///
/// Stops early once the state is at rest within `convergence_tol` of one of
/// `equilibria`, or once it leaves [divergence_floor, slip_domain_upper].
/// Sample k sits at t = k * step.
Trajectory simulate(const SlipDynamics& dyn, std::span<const double> equilibria, double s_init, double step,
                    double t_end, const SimulationOptions& opts = {});

/// Convenience overload that locates the equilibria itself.
Trajectory simulate(const ModelDef& model, double v_w, double s_init, double step, double t_end,
                    const SimulationOptions& opts = {});

}  // namespace typea
