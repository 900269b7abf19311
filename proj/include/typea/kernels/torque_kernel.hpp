#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace typea::kernels {

/// Precombined coefficients of the torque-slip characteristic
///   T_e(s) = v_th^2 * u / ((r_s - u)^2 + x_th^2),  u = r_mult * r_r / s,
/// with T_e(0) = 0.
struct TorqueCoeffs {
    double v_th_sq = 0.0;
    double rotor_r = 0.0;  ///< r_mult * r_r
    double r_s = 0.0;
    double x_th_sq = 0.0;
};

/// Single-slip reference. Every batch variant must reproduce it bit for bit.
inline double electrical_torque_ref(const TorqueCoeffs& c, double s) noexcept {
    if (s == 0.0) return 0.0;
    const double u = c.rotor_r / s;
    const double d = c.r_s - u;
    const double den = d * d + c.x_th_sq;
    const double num = c.v_th_sq * u;
    return num / den;
}

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

/// Compiled into this binary and supported by the running CPU.
bool isa_available(Isa isa) noexcept;

/// Best available variant, unless overridden by force_isa() or TYPEA_STAB_ISA.
Isa active_isa() noexcept;

/// Pins dispatch to `isa` (falls back to scalar if unavailable); nullopt restores auto-selection.
void force_isa(std::optional<Isa> isa) noexcept;

void electrical_torque_scalar(const TorqueCoeffs& c, std::span<const double> slip, std::span<double> out) noexcept;
#if defined(TYPEA_HAVE_AVX2)
void electrical_torque_avx2(const TorqueCoeffs& c, std::span<const double> slip, std::span<double> out) noexcept;
#endif
#if defined(TYPEA_HAVE_NEON)
void electrical_torque_neon(const TorqueCoeffs& c, std::span<const double> slip, std::span<double> out) noexcept;
#endif

/// Runs one specific variant; `isa` must be available.
void electrical_torque_with(Isa isa, const TorqueCoeffs& c, std::span<const double> slip,
                            std::span<double> out) noexcept;

/// Dispatched batch evaluation; out.size() must equal slip.size().
void electrical_torque(const TorqueCoeffs& c, std::span<const double> slip, std::span<double> out) noexcept;

}  // namespace typea::kernels
