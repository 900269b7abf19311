#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "typea/model_config.hpp"
#include "typea/roa.hpp"

namespace typea {

/// Slip axis specification: n points over [lo, hi].
struct SlipAxis {
    double lo = 0.0;
    double hi = 0.4;
    std::size_t n = 400;
};

/// Peak of one curve: closed form where one exists, grid argmax always.
struct CurveSummary {
    double s_max = 0.0;
    double t_max = 0.0;
    double grid_s_max = 0.0;
    double grid_t_max = 0.0;
    bool closed_form = false;
    /// s_max outside [s_axis.front(), s_axis.back()]
    bool extrapolated = false;
    /// closed form and grid argmax more than one grid step apart (s_max inside the hull)
    bool grid_disagrees = false;
};

struct Curve {
    std::string label;
    double parameter = 0.0;
    std::vector<double> torque;
    CurveSummary summary;
};

struct CurveFamily {
    std::string parameter_name;
    std::vector<double> s_axis;
    std::vector<Curve> curves;

    std::vector<double> parameter_values() const;
};

/// One T_e curve (label "Te") followed by one T_m curve per wind velocity (label "Tm").
CurveFamily torque_family_wind(const ModelDef& model, const std::vector<double>& v_list, SlipAxis axis = {},
                               std::size_t threads = 0);

struct CompensationOptions {
    /// Permit y_c beyond 1 / x_m'. Values inside the guard band are always rejected.
    bool allow_above_resonance = false;
};

/// One T_e curve per compensation susceptance. Throws ResonanceError naming
/// the offending y_c.
CurveFamily compensation_sweep(const ModelDef& model, const std::vector<double>& yc_list, SlipAxis axis = {},
                               CompensationOptions opts = {}, std::size_t threads = 0);

/// One T_e curve per rotor-resistance multiplier (each >= 1).
CurveFamily rotor_resistance_sweep(const ModelDef& model, const std::vector<double>& r_list, SlipAxis axis = {},
                                   std::size_t threads = 0);

struct CompensationSweep {
    std::vector<double> values;
};
struct RotorResistanceSweep {
    std::vector<double> values;
};
using SweepParameter = std::variant<CompensationSweep, RotorResistanceSweep>;

/// (parameter value, basin upper edge) at v_w for each value. NoEquilibrium
/// messages name the parameter value.
std::vector<std::pair<double, double>> basin_vs_parameter(const ModelDef& model, const SweepParameter& parameter,
                                                          double v_w);

}  // namespace typea
