#pragma once

#include <string>
#include <vector>

#include "typea/model_config.hpp"

namespace typea {

struct BenchResult {
    std::string name;
    std::size_t iterations = 0;  ///< operations per repetition
    double ns_per_op = 0.0;      ///< median over repetitions
    double throughput = 0.0;     ///< ops (or grid nodes) per second at the median
};

struct BenchOptions {
    std::size_t repetitions = 10;
    std::size_t grid_side = 500;
    std::size_t threads = 0;  ///< workers for the parallel grid entry (0 = automatic)
    std::size_t sim_steps = 100'000;
};

/// Times the hot paths: single and batch torque evaluation, grid
/// classification (serial, parallel, and at half side length for the
/// scaling ratio) and RK4 stepping. Report-only; never changes results.
std::vector<BenchResult> bench_suite(const ModelDef& model, const BenchOptions& opts = {});

}  // namespace typea
