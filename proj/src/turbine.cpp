#include "typea/turbine.hpp"

#include <cmath>
#include <string>

#include "typea/errors.hpp"

namespace typea {

namespace {

void check_point(WindOperatingPoint p) {
    if (!(p.v_w > 0.0) || !std::isfinite(p.v_w)) {
        throw DomainError("wind velocity must be positive, got " + std::to_string(p.v_w));
    }
    if (!(p.s > -1.0) || !std::isfinite(p.s)) {
        throw DomainError("slip must exceed -1 (positive rotor speed), got " + std::to_string(p.s));
    }
}

}  // namespace

double tip_speed_ratio(const TurbineParams& tp, WindOperatingPoint p) {
    check_point(p);
    return tp.lambda_0 * p.v_w / (p.s + 1.0);
}

double power_coefficient(const TurbineParams& tp, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("tip-speed ratio must be positive, got " + std::to_string(lambda));
    return (tp.a / lambda - tp.b) * std::exp(-tp.c / lambda);
}

double mechanical_power(const TurbineParams& tp, WindOperatingPoint p) {
    const double lambda = tip_speed_ratio(tp, p);
    return p.v_w * p.v_w * p.v_w * power_coefficient(tp, lambda);
}

double mechanical_torque(const TurbineParams& tp, WindOperatingPoint p) {
    return mechanical_power(tp, p) / (p.s + 1.0);
}

bool positivity_condition(const TurbineParams& tp, WindOperatingPoint p) {
    check_point(p);
    return tp.a * (p.s + 1.0) / (tp.lambda_0 * p.v_w) - tp.b >= 0.0;
}

double power_coefficient_argmax(const TurbineParams& tp) noexcept { return tp.a * tp.c / (tp.a + tp.b * tp.c); }

}  // namespace typea
