#include "typea/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "typea/equilibria.hpp"
#include "typea/errors.hpp"
#include "typea/numerics.hpp"

namespace typea {

IntegralLyapunov::IntegralLyapunov(const ModelDef& model, double v_w, double s0) : dyn_(model, v_w), s0_(s0) {}

double IntegralLyapunov::field(double x) const { return dyn_.acceleration(s0_ + x); }

double IntegralLyapunov::value(double x) const {
    if (x == 0.0) return 0.0;
    const auto r = adaptive_simpson([this](double xi) { return field(xi); }, 0.0, x, kLyapunovQuadTol);
    return -r.value;
}

double IntegralLyapunov::derivative(double x) const {
    const double f = field(x);
    return -f * f;
}

double lyapunov_value(const ModelDef& model, double v_w, double s0, double x) {
    return IntegralLyapunov(model, v_w, s0).value(x);
}

double lyapunov_derivative(const ModelDef& model, double v_w, double s0, double x) {
    return IntegralLyapunov(model, v_w, s0).derivative(x);
}

LyapunovReport verify_candidate(const ModelDef& model, double v_w, double x_lo, double x_hi,
                                std::size_t n_samples) {
    if (!(x_lo <= 0.0 && 0.0 <= x_hi)) {
        throw DomainError("Lyapunov window must contain 0, got [" + std::to_string(x_lo) + ", " +
                          std::to_string(x_hi) + "]");
    }
    if (n_samples == 0) throw DomainError("Lyapunov check needs at least one sample");

    const SlipDynamics dyn(model, v_w);
    const double s0 = stable_equilibrium(dyn).s_star;
    if (!(s0 + x_lo > -1.0) || s0 + x_hi > model.slip_domain_upper) {
        throw WindowExceedsDomain("window [" + std::to_string(x_lo) + ", " + std::to_string(x_hi) +
                                  "] around s0 = " + std::to_string(s0) + " leaves the slip range (-1, " +
                                  std::to_string(model.slip_domain_upper) + "]");
    }

    const IntegralLyapunov lyap(model, v_w, s0);
    LyapunovReport rep;
    rep.v_w = v_w;
    rep.s0 = s0;
    rep.x_lo = x_lo;
    rep.x_hi = x_hi;
    rep.l_zero = lyap.value(0.0);
    rep.positivity_ok = true;
    rep.derivative_ok = true;
    rep.restoring_ok = true;

    const auto xs = x_lo == x_hi ? std::vector<double>{x_lo} : linspace(x_lo, x_hi, n_samples);
    rep.samples.reserve(xs.size());
    for (double x : xs) {
        const LyapunovSample smp{x, lyap.value(x), lyap.derivative(x)};
        if (x != 0.0) {
            if (!(smp.l > 0.0)) rep.positivity_ok = false;
            if (!(x * lyap.field(x) < 0.0)) rep.restoring_ok = false;
            if (-x >= x_lo && -x <= x_hi) {
                rep.oddness_defect = std::max(rep.oddness_defect, std::abs(lyap.field(x) + lyap.field(-x)));
            }
        }
        if (!(smp.dl_dt <= 0.0)) rep.derivative_ok = false;
        rep.samples.push_back(smp);
    }
    return rep;
}

}  // namespace typea
