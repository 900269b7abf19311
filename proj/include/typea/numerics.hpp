#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace typea {

/// n points from lo to hi inclusive; the last point is exactly hi. n = 1 yields {lo}.
std::vector<double> linspace(double lo, double hi, std::size_t n);

struct QuadratureResult {
    double value = 0.0;
    std::size_t evaluations = 0;
};

/// Adaptive Simpson with Richardson correction. `tol` is absolute over the
/// whole interval; the per-panel budget halves at each split. Throws
/// QuadratureError after `max_evals` integrand calls. b < a integrates backwards.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                  std::size_t max_evals = 1'000'000);

/// Worker count from an explicit request, else TYPEA_STAB_THREADS, else hardware concurrency.
std::size_t resolve_threads(std::size_t requested);

/// Calls body(i) for i in [0, n) on up to `threads` workers. Exceptions are
/// rethrown on the calling thread (lowest index wins).
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace typea
