#pragma once

#include "typea/model_config.hpp"

namespace typea {

/// Wind velocity and slip at which the rotor is evaluated. Requires v_w > 0 and s > -1.
struct WindOperatingPoint {
    double v_w = 1.0;
    double s = 0.0;
};

/// lambda_0 v_w / (s + 1)
double tip_speed_ratio(const TurbineParams& tp, WindOperatingPoint p);

/// (a / lambda - b) exp(-c / lambda). Negative past lambda = a / b; never clamped.
double power_coefficient(const TurbineParams& tp, double lambda);

/// v_w^3 C_p(lambda)
double mechanical_power(const TurbineParams& tp, WindOperatingPoint p);

/// P / (s + 1)
double mechanical_torque(const TurbineParams& tp, WindOperatingPoint p);

/// a (s + 1) / (lambda_0 v_w) - b >= 0, which guarantees P >= 0.
bool positivity_condition(const TurbineParams& tp, WindOperatingPoint p);

/// Tip-speed ratio that maximizes the fitted C_p: a c / (a + b c).
double power_coefficient_argmax(const TurbineParams& tp) noexcept;

}  // namespace typea
