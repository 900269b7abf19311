#pragma once

#include <span>

#include "typea/kernels/torque_kernel.hpp"
#include "typea/model_config.hpp"

namespace typea {

/// Source-side network (bus, line, magnetizing branch, compensation) reduced
/// to one voltage behind r_s + j x_th.
struct TheveninEquivalent {
    double v_th = 0.0;
    double x_th = 0.0;
    double x_m_eff = 0.0;
    /// Stator resistance carried along; the torque expression needs it and it
    /// is not changed by the reduction.
    double r_s = 0.0;
};

/// Throws ResonanceError inside the guard band and DegenerateCircuit when x_m_eff + x_l = 0.
TheveninEquivalent thevenin_reduce(const MachineParams& machine);

/// x_m' / (1 - x_m' y_c). Same failure modes as thevenin_reduce.
double effective_magnetizing_reactance(double x_m_prime, double y_c);

kernels::TorqueCoeffs torque_coeffs(const TheveninEquivalent& th, double r_r, double r_mult) noexcept;

/// Rotor air-gap torque (pu), positive in generation (s > 0). Returns 0 at s = 0.
double electrical_torque(const TheveninEquivalent& th, double r_r, double r_mult, double s) noexcept;

/// Batch form over many slips; dispatched to the best SIMD variant.
void electrical_torque(const TheveninEquivalent& th, double r_r, double r_mult, std::span<const double> slip,
                       std::span<double> out) noexcept;

/// Slip of maximum torque, r_mult r_r / sqrt(r_s^2 + x_th^2).
double pullout_slip(const TheveninEquivalent& th, double r_r, double r_mult) noexcept;

/// Torque at the pull-out slip. Independent of r_mult.
double max_torque(const TheveninEquivalent& th, double r_r, double r_mult) noexcept;

}  // namespace typea
