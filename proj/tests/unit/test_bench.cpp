#include <doctest.h>

#include "typea/bench.hpp"
#include "typea/roa.hpp"

using namespace typea;

TEST_CASE("bench reports positive timings and leaves results unchanged") {
    const auto model = paper_model();
    const auto before = classify_grid(model, {0.0, 0.5}, {0.6, 1.2}, {30, 20}, 1);
    const auto results = bench_suite(model, {.repetitions = 2, .grid_side = 40, .threads = 2, .sim_steps = 1000});
    REQUIRE_FALSE(results.empty());
    for (const auto& r : results) {
        CAPTURE(r.name);
        CHECK(r.iterations > 0);
        CHECK(r.ns_per_op > 0.0);
        CHECK(r.throughput > 0.0);
    }
    const auto after = classify_grid(model, {0.0, 0.5}, {0.6, 1.2}, {30, 20}, 1);
    for (std::size_t i = 0; i < before.cells.size(); ++i) CHECK(before.cells[i].w_value == after.cells[i].w_value);
}
