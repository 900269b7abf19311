#include "typea/induction_machine.hpp"

#include <cmath>
#include <string>

#include "typea/errors.hpp"

namespace typea {

double effective_magnetizing_reactance(double x_m_prime, double y_c) {
    if (near_resonance(x_m_prime, y_c)) {
        throw ResonanceError("compensation y_c = " + std::to_string(y_c) +
                                 " resonates with x_m_prime = " + std::to_string(x_m_prime),
                             y_c);
    }
    return x_m_prime / (1.0 - x_m_prime * y_c);
}

TheveninEquivalent thevenin_reduce(const MachineParams& machine) {
    const double x_m = effective_magnetizing_reactance(machine.x_m_prime, machine.y_c);
    const double loop = x_m + machine.x_l;
    if (std::abs(loop) <= 1e-12 * (std::abs(x_m) + machine.x_l)) {
        throw DegenerateCircuit("x_m_eff + x_l vanishes (y_c = " + std::to_string(machine.y_c) + ")");
    }
    TheveninEquivalent th;
    th.x_m_eff = x_m;
    th.v_th = machine.v_b * x_m / loop;
    th.x_th = x_m * machine.x_l / loop + machine.x_s + machine.x_r;
    th.r_s = machine.r_s;
    return th;
}

kernels::TorqueCoeffs torque_coeffs(const TheveninEquivalent& th, double r_r, double r_mult) noexcept {
    return kernels::TorqueCoeffs{.v_th_sq = th.v_th * th.v_th,
                                 .rotor_r = r_mult * r_r,
                                 .r_s = th.r_s,
                                 .x_th_sq = th.x_th * th.x_th};
}

double electrical_torque(const TheveninEquivalent& th, double r_r, double r_mult, double s) noexcept {
    return kernels::electrical_torque_ref(torque_coeffs(th, r_r, r_mult), s);
}

void electrical_torque(const TheveninEquivalent& th, double r_r, double r_mult, std::span<const double> slip,
                       std::span<double> out) noexcept {
    kernels::electrical_torque(torque_coeffs(th, r_r, r_mult), slip, out);
}

double pullout_slip(const TheveninEquivalent& th, double r_r, double r_mult) noexcept {
    return r_mult * r_r / std::sqrt(th.r_s * th.r_s + th.x_th * th.x_th);
}

double max_torque(const TheveninEquivalent& th, double r_r, double r_mult) noexcept {
    return electrical_torque(th, r_r, r_mult, pullout_slip(th, r_r, r_mult));
}

}  // namespace typea
