// Built with -mavx2 only. FMA stays off so every lane rounds exactly like
// electrical_torque_ref.
#include <immintrin.h>

#include "typea/kernels/torque_kernel.hpp"

namespace typea::kernels {

void electrical_torque_avx2(const TorqueCoeffs& c, std::span<const double> slip, std::span<double> out) noexcept {
    const __m256d rotor_r = _mm256_set1_pd(c.rotor_r);
    const __m256d r_s = _mm256_set1_pd(c.r_s);
    const __m256d x_sq = _mm256_set1_pd(c.x_th_sq);
    const __m256d v_sq = _mm256_set1_pd(c.v_th_sq);
    const __m256d zero = _mm256_setzero_pd();

    const std::size_t n = slip.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d s = _mm256_loadu_pd(slip.data() + i);
        const __m256d u = _mm256_div_pd(rotor_r, s);
        const __m256d d = _mm256_sub_pd(r_s, u);
        const __m256d den = _mm256_add_pd(_mm256_mul_pd(d, d), x_sq);
        const __m256d num = _mm256_mul_pd(v_sq, u);
        const __m256d t = _mm256_div_pd(num, den);
        // s == 0 (either sign) takes the continuous limit 0.
        const __m256d at_zero = _mm256_cmp_pd(s, zero, _CMP_EQ_OQ);
        _mm256_storeu_pd(out.data() + i, _mm256_blendv_pd(t, zero, at_zero));
    }
    for (; i < n; ++i) out[i] = electrical_torque_ref(c, slip[i]);
}

}  // namespace typea::kernels
