#include "typea/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "typea/errors.hpp"

namespace typea {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 0) return out;
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out[i] = lo + span * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    out[n - 1] = hi;
    return out;
}

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    std::size_t evals = 0;
    std::size_t max_evals;

    double eval(double x) {
        if (++evals > max_evals) {
            throw QuadratureError("adaptive Simpson exceeded " + std::to_string(max_evals) + " evaluations");
        }
        return f(x);
    }

    double refine(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth <= 0 || std::abs(delta) <= 15.0 * tol || m <= a || m >= b) {
            return left + right + delta / 15.0;
        }
        return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               refine(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                  std::size_t max_evals) {
    if (a == b) return {0.0, 0};
    if (b < a) {
        auto r = adaptive_simpson(f, b, a, tol, max_evals);
        r.value = -r.value;
        return r;
    }
    SimpsonState st{f, 0, max_evals};
    const double fa = st.eval(a);
    const double fb = st.eval(b);
    const double m = 0.5 * (a + b);
    const double fm = st.eval(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double value = st.refine(a, b, fa, fm, fb, whole, tol, 50);
    return {value, st.evals};
}

std::size_t resolve_threads(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TYPEA_STAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
    const std::size_t workers = std::min(resolve_threads(threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    std::size_t first_index = n;

    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (i < first_index) {
                    first_index = i;
                    first_error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace typea
