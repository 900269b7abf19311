#pragma once

#include <vector>

#include "typea/dynamics.hpp"
#include "typea/model_config.hpp"

namespace typea {

/// Absolute tolerance of the quadrature behind L(x).
inline constexpr double kLyapunovQuadTol = 1e-10;

/// Integral Lyapunov candidate L(x) = -int_0^x f(x') dx' around an equilibrium s0.
class IntegralLyapunov {
public:
    IntegralLyapunov(const ModelDef& model, double v_w, double s0);

    /// Shifted field f(x) = (T_m - T_e)(s0 + x) / M.
    double field(double x) const;
    /// Adaptive Simpson, |error| <= kLyapunovQuadTol. L(0) is exactly 0.
    double value(double x) const;
    /// dL/dt = dL/dx * dx/dt = -f(x)^2, evaluated in closed form.
    double derivative(double x) const;

    double equilibrium() const noexcept { return s0_; }
    const SlipDynamics& dynamics() const noexcept { return dyn_; }

private:
    SlipDynamics dyn_;
    double s0_;
};

double lyapunov_value(const ModelDef& model, double v_w, double s0, double x);
double lyapunov_derivative(const ModelDef& model, double v_w, double s0, double x);

struct LyapunovSample {
    double x = 0.0;
    double l = 0.0;
    double dl_dt = 0.0;
};

struct LyapunovReport {
    double v_w = 0.0;
    double s0 = 0.0;
    double x_lo = 0.0;
    double x_hi = 0.0;
    double l_zero = 0.0;
    bool positivity_ok = false;  ///< L(x) > 0 at every sampled x != 0
    bool derivative_ok = false;  ///< dL/dt <= 0 at every sample
    bool restoring_ok = false;   ///< x f(x) < 0 at every sampled x != 0, i.e. L grows away from 0
    /// max |f(x) + f(-x)| over samples whose mirror image is also in the window; 0 if none.
    double oddness_defect = 0.0;
    std::vector<LyapunovSample> samples;
};

/// Samples L and dL/dt on `n_samples` uniform points of [x_lo, x_hi] around
/// the stable equilibrium for v_w. The window must contain 0 and keep
/// s0 + x inside (-1, slip_domain_upper] (else WindowExceedsDomain).
LyapunovReport verify_candidate(const ModelDef& model, double v_w, double x_lo, double x_hi,
                                std::size_t n_samples);

}  // namespace typea
