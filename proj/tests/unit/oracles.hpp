#pragma once

// Test-only reference computations. Written straight from the circuit and
// turbine formulas without touching the library, so they can check it.

#include <cmath>
#include <functional>
#include <vector>

#include "typea/model_config.hpp"

namespace oracle {

struct Thevenin {
    double v_th, x_th, x_m;
};

/// Parallel-reactance form: x_m = x_m' x_c / (x_m' + x_c) with x_c = -1 / y_c.
inline Thevenin thevenin(const typea::MachineParams& m) {
    double x_m = m.x_m_prime;
    if (m.y_c != 0.0) {
        const double x_c = -1.0 / m.y_c;
        x_m = m.x_m_prime * x_c / (m.x_m_prime + x_c);
    }
    return {m.v_b * x_m / (x_m + m.x_l), x_m * m.x_l / (x_m + m.x_l) + m.x_s + m.x_r, x_m};
}

inline double electrical_torque(const typea::MachineParams& m, double s) {
    if (s == 0.0) return 0.0;
    const auto th = thevenin(m);
    const double rr = m.r_mult * m.r_r;
    return th.v_th * th.v_th * rr / ((m.r_s - rr / s) * (m.r_s - rr / s) + th.x_th * th.x_th) / s;
}

inline double mechanical_torque(const typea::TurbineParams& t, double v, double s) {
    const double lambda = t.lambda_0 * v / (1.0 + s);
    const double cp = (t.a / lambda - t.b) * std::exp(-t.c / lambda);
    return cp * v * v * v / (1.0 + s);
}

inline double field(const typea::ModelDef& md, double v, double s) {
    return (mechanical_torque(md.turbine, v, s) - electrical_torque(md.machine, s)) / md.turbine.inertia_m;
}

/// Plain bisection on [lo, hi]; assumes a sign change.
inline double bisect(const std::function<double(double)>& g, double lo, double hi, int iters = 200) {
    double glo = g(lo);
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Roots of the net field on a fine grid over [lo, hi].
inline std::vector<double> roots(const typea::ModelDef& md, double v, double lo, double hi, int n = 20000) {
    std::vector<double> out;
    auto g = [&](double s) { return field(md, v, s); };
    double prev_s = lo, prev_g = g(lo);
    for (int i = 1; i <= n; ++i) {
        const double s = lo + (hi - lo) * i / n;
        const double gs = g(s);
        if ((gs > 0) != (prev_g > 0)) out.push_back(bisect(g, prev_s, s));
        prev_s = s;
        prev_g = gs;
    }
    return out;
}

/// Composite trapezoid with `panels` panels.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double sum = 0.5 * (f(a) + f(b));
    for (int i = 1; i < panels; ++i) sum += f(a + h * i);
    return sum * h;
}

/// Explicit Euler until t_end; returns the final slip.
inline double euler(const typea::ModelDef& md, double v, double s0, double h, double t_end) {
    double s = s0;
    const long n = std::lround(t_end / h);
    for (long k = 0; k < n; ++k) s += h * field(md, v, s);
    return s;
}

}  // namespace oracle
