#include <arm_neon.h>

#include "typea/kernels/torque_kernel.hpp"

namespace typea::kernels {

void electrical_torque_neon(const TorqueCoeffs& c, std::span<const double> slip, std::span<double> out) noexcept {
    const float64x2_t rotor_r = vdupq_n_f64(c.rotor_r);
    const float64x2_t r_s = vdupq_n_f64(c.r_s);
    const float64x2_t x_sq = vdupq_n_f64(c.x_th_sq);
    const float64x2_t v_sq = vdupq_n_f64(c.v_th_sq);
    const float64x2_t zero = vdupq_n_f64(0.0);

    const std::size_t n = slip.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t s = vld1q_f64(slip.data() + i);
        const float64x2_t u = vdivq_f64(rotor_r, s);
        const float64x2_t d = vsubq_f64(r_s, u);
        // separate mul/add: vfmaq would round differently from the scalar path
        const float64x2_t den = vaddq_f64(vmulq_f64(d, d), x_sq);
        const float64x2_t num = vmulq_f64(v_sq, u);
        const float64x2_t t = vdivq_f64(num, den);
        const uint64x2_t at_zero = vceqq_f64(s, zero);
        vst1q_f64(out.data() + i, vbslq_f64(at_zero, zero, t));
    }
    for (; i < n; ++i) out[i] = electrical_torque_ref(c, slip[i]);
}

}  // namespace typea::kernels
