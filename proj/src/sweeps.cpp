#include "typea/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "typea/dynamics.hpp"
#include "typea/errors.hpp"
#include "typea/induction_machine.hpp"
#include "typea/numerics.hpp"

namespace typea {

std::vector<double> CurveFamily::parameter_values() const {
    std::vector<double> out;
    out.reserve(curves.size());
    for (const auto& c : curves) out.push_back(c.parameter);
    return out;
}

namespace {

void check_axis(const SlipAxis& axis) {
    if (axis.n < 2) throw DomainError("slip axis needs at least 2 points");
    if (!(axis.hi > axis.lo)) throw DomainError("slip axis upper bound must exceed lower bound");
    if (!(axis.lo > -1.0)) throw DomainError("slip axis must stay above -1");
}

void grid_peak(const std::vector<double>& s_axis, const std::vector<double>& t, CurveSummary& sum) {
    const auto it = std::max_element(t.begin(), t.end());
    const auto idx = static_cast<std::size_t>(it - t.begin());
    sum.grid_s_max = s_axis[idx];
    sum.grid_t_max = *it;
}

Curve electrical_curve(const MachineParams& machine, const std::vector<double>& s_axis, std::string label,
                       double parameter) {
    const auto th = thevenin_reduce(machine);
    Curve c;
    c.label = std::move(label);
    c.parameter = parameter;
    c.torque.resize(s_axis.size());
    electrical_torque(th, machine.r_r, machine.r_mult, s_axis, c.torque);

    auto& sum = c.summary;
    sum.closed_form = true;
    sum.s_max = pullout_slip(th, machine.r_r, machine.r_mult);
    sum.t_max = max_torque(th, machine.r_r, machine.r_mult);
    grid_peak(s_axis, c.torque, sum);
    const double step = (s_axis.back() - s_axis.front()) / static_cast<double>(s_axis.size() - 1);
    sum.extrapolated = sum.s_max < s_axis.front() || sum.s_max > s_axis.back();
    sum.grid_disagrees = !sum.extrapolated && std::abs(sum.grid_s_max - sum.s_max) > step;
    return c;
}

}  // namespace

CurveFamily torque_family_wind(const ModelDef& model, const std::vector<double>& v_list, SlipAxis axis,
                               std::size_t threads) {
    check_axis(axis);
    if (v_list.empty()) throw DomainError("wind list is empty");
    for (double v : v_list) {
        if (!(v > 0.0)) throw DomainError("wind velocities must be positive, got " + std::to_string(v));
    }
    CurveFamily fam;
    fam.parameter_name = "v_w";
    fam.s_axis = linspace(axis.lo, axis.hi, axis.n);
    fam.curves.resize(1 + v_list.size());
    fam.curves[0] = electrical_curve(model.machine, fam.s_axis, "Te", 0.0);

    parallel_for(v_list.size(), threads, [&](std::size_t i) {
        const SlipDynamics dyn(model, v_list[i]);
        Curve c;
        c.label = "Tm";
        c.parameter = v_list[i];
        c.torque.resize(fam.s_axis.size());
        for (std::size_t k = 0; k < fam.s_axis.size(); ++k) c.torque[k] = dyn.mechanical_torque(fam.s_axis[k]);
        grid_peak(fam.s_axis, c.torque, c.summary);
        c.summary.s_max = c.summary.grid_s_max;
        c.summary.t_max = c.summary.grid_t_max;
        fam.curves[i + 1] = std::move(c);
    });
    return fam;
}

CurveFamily compensation_sweep(const ModelDef& model, const std::vector<double>& yc_list, SlipAxis axis,
                               CompensationOptions opts, std::size_t threads) {
    check_axis(axis);
    const double x_mp = model.machine.x_m_prime;
    for (double yc : yc_list) {
        if (!(yc >= 0.0)) throw DomainError("compensation susceptance must be non-negative, got " + std::to_string(yc));
        if (near_resonance(x_mp, yc)) {
            throw ResonanceError("y_c = " + std::to_string(yc) + " is at parallel resonance with x_m_prime", yc);
        }
        if (x_mp * yc > 1.0 && !opts.allow_above_resonance) {
            throw ResonanceError("y_c = " + std::to_string(yc) + " lies above resonance (1/x_m_prime = " +
                                     std::to_string(resonant_susceptance(x_mp)) + "); opt in to sweep past it",
                                 yc);
        }
    }
    CurveFamily fam;
    fam.parameter_name = "y_c";
    fam.s_axis = linspace(axis.lo, axis.hi, axis.n);
    fam.curves.resize(yc_list.size());
    parallel_for(yc_list.size(), threads, [&](std::size_t i) {
        MachineParams m = model.machine;
        m.y_c = yc_list[i];
        fam.curves[i] = electrical_curve(m, fam.s_axis, "Te", yc_list[i]);
    });
    return fam;
}

CurveFamily rotor_resistance_sweep(const ModelDef& model, const std::vector<double>& r_list, SlipAxis axis,
                                   std::size_t threads) {
    check_axis(axis);
    for (double r : r_list) {
        if (!(r >= 1.0)) throw DomainError("rotor-resistance multiplier must be >= 1, got " + std::to_string(r));
    }
    CurveFamily fam;
    fam.parameter_name = "r_mult";
    fam.s_axis = linspace(axis.lo, axis.hi, axis.n);
    fam.curves.resize(r_list.size());
    parallel_for(r_list.size(), threads, [&](std::size_t i) {
        MachineParams m = model.machine;
        m.r_mult = r_list[i];
        fam.curves[i] = electrical_curve(m, fam.s_axis, "Te", r_list[i]);
    });
    return fam;
}

std::vector<std::pair<double, double>> basin_vs_parameter(const ModelDef& model, const SweepParameter& parameter,
                                                          double v_w) {
    const bool is_comp = std::holds_alternative<CompensationSweep>(parameter);
    const auto& values = is_comp ? std::get<CompensationSweep>(parameter).values
                                 : std::get<RotorResistanceSweep>(parameter).values;
    const char* name = is_comp ? "y_c" : "r_mult";

    std::vector<std::pair<double, double>> out;
    out.reserve(values.size());
    for (double value : values) {
        ModelDef m = model;
        if (is_comp) {
            m.machine.y_c = value;
        } else {
            m.machine.r_mult = value;
        }
        require_valid(m);
        try {
            out.emplace_back(value, basin_interval(m, v_w).upper);
        } catch (const NoEquilibrium& e) {
            throw NoEquilibrium(std::string(name) + " = " + std::to_string(value) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace typea
