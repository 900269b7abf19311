#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "typea/dynamics.hpp"
#include "typea/errors.hpp"
#include "typea/roa.hpp"

using namespace typea;

namespace {
const ModelDef kModel = paper_model();
}

TEST_CASE("basin edges follow the unstable root") {
    const auto b = basin_interval(kModel, 1.0);
    CHECK(b.lower == 0.0);
    CHECK_FALSE(b.capped);
    const auto ref = oracle::roots(kModel, 1.0, 1e-6, 0.5);
    REQUIRE(ref.size() == 2);
    CHECK(b.upper == doctest::Approx(ref[1]).epsilon(1e-9));
    CHECK(b.stable_slip == doctest::Approx(ref[0]).epsilon(1e-9));

    const auto low = basin_interval(kModel, 0.6);
    CHECK(low.capped);
    CHECK(low.upper == kModel.slip_domain_upper);
}

TEST_CASE("basin edge separates convergence from runaway") {
    for (double v : {1.0, 1.05, 1.1}) {
        const auto b = basin_interval(kModel, v);
        const auto inside = simulate(kModel, v, b.upper - 0.01, 1e-3, 200.0);
        CHECK(inside.outcome.kind == Outcome::converged);
        CHECK(inside.outcome.slip == doctest::Approx(b.stable_slip).epsilon(1e-5));
        const auto outside = simulate(kModel, v, b.upper + 0.01, 1e-3, 200.0);
        CHECK(outside.outcome.kind == Outcome::diverged);
        CHECK(outside.outcome.direction == Direction::up);
    }
}

TEST_CASE("basin shrinks as wind rises past the fold") {
    const double w09 = basin_interval(kModel, 0.9).upper;
    const double w10 = basin_interval(kModel, 1.0).upper;
    const double w11 = basin_interval(kModel, 1.1).upper;
    CHECK(w09 >= w10);
    CHECK(w10 > w11);
}

TEST_CASE("default grid sign structure") {
    const auto g = classify_grid(kModel);
    REQUIRE(g.s_axis.size() == 15);
    REQUIRE(g.v_axis.size() == 12);
    CHECK(g.cells.size() == 180);
    for (std::size_t iv = 0; iv < g.v_axis.size(); ++iv) {
        // collapse the column to its run-length sign pattern, ignoring zeros
        std::vector<int> runs;
        for (std::size_t is = 0; is < g.s_axis.size(); ++is) {
            const int sg = g.at(iv, is).w_sign;
            if (sg == 0) continue;
            if (runs.empty() || runs.back() != sg) runs.push_back(sg);
        }
        REQUIRE_FALSE(runs.empty());
        CHECK(runs.size() <= 3);
        if (runs.size() > 1) CHECK(runs[1] == -1);
        for (std::size_t is = 0; is < g.s_axis.size(); ++is) {
            const double w = oracle::field(kModel, g.v_axis[iv], g.s_axis[is]);
            CHECK(g.at(iv, is).w_value == doctest::Approx(w).epsilon(1e-12).scale(1e-12));
        }
    }
}

TEST_CASE("slip 0.25 at unit wind is past the barrier") {
    const auto g = classify_grid(kModel, {0.0, 0.5}, {0.6, 1.2}, {21, 7});
    std::size_t iv = 0, is = 0;
    for (; iv < g.v_axis.size(); ++iv)
        if (std::abs(g.v_axis[iv] - 1.0) < 1e-12) break;
    for (; is < g.s_axis.size(); ++is)
        if (std::abs(g.s_axis[is] - 0.25) < 1e-12) break;
    REQUIRE(iv < g.v_axis.size());
    REQUIRE(is < g.s_axis.size());
    CHECK(g.at(iv, is).w_sign > 0);
    CHECK_FALSE(g.at(iv, is).in_basin);
}

TEST_CASE("grid membership agrees with direct simulation") {
    const auto g = classify_grid(kModel, {0.0, 0.4}, {0.7, 1.15}, {9, 5});
    for (std::size_t iv = 0; iv < g.v_axis.size(); ++iv) {
        for (std::size_t is = 0; is < g.s_axis.size(); ++is) {
            const double s = g.s_axis[is];
            const auto traj = simulate(kModel, g.v_axis[iv], s, 2e-3, 400.0);
            const bool converged = traj.outcome.kind == Outcome::converged &&
                                   std::abs(traj.outcome.slip - g.basins[iv].stable_slip) < 1e-5;
            CAPTURE(g.v_axis[iv]);
            CAPTURE(s);
            CHECK(converged == g.at(iv, is).in_basin);
        }
    }
}

TEST_CASE("W is Lipschitz in slip on the default domain") {
    const auto g = classify_grid(kModel, {0.0, 0.5}, {0.6, 1.2}, {2001, 7});
    double worst = 0.0;
    for (std::size_t iv = 0; iv < g.v_axis.size(); ++iv)
        for (std::size_t is = 1; is < g.s_axis.size(); ++is) {
            const double dw = std::abs(g.at(iv, is).w_value - g.at(iv, is - 1).w_value);
            worst = std::max(worst, dw / (g.s_axis[is] - g.s_axis[is - 1]));
        }
    MESSAGE("finite Lipschitz estimate: " << worst);
    CHECK(std::isfinite(worst));
    CHECK(worst < 200.0);
}

TEST_CASE("grid is independent of thread count") {
    const auto a = classify_grid(kModel, {0.0, 0.5}, {0.6, 1.2}, {40, 30}, 1);
    const auto b = classify_grid(kModel, {0.0, 0.5}, {0.6, 1.2}, {40, 30}, 4);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].w_value == b.cells[i].w_value);
        CHECK(a.cells[i].in_basin == b.cells[i].in_basin);
    }
}

TEST_CASE("quiver samples") {
    const auto q = vector_field_samples(kModel);
    CHECK(q.size() == 180);
    for (const auto& p : q) CHECK(p.dv == 0.0);
    const auto one = vector_field_samples(kModel, {0.0, 0.48}, {1.0, 1.0}, {2, 2});
    CHECK(one.size() == 4);
    CHECK(one[0].s == 0.0);
    CHECK(one[0].w == doctest::Approx(oracle::field(kModel, 1.0, 0.0)).epsilon(1e-12));
    CHECK(one[0].w == doctest::Approx(1.239).epsilon(1e-3));
}

TEST_CASE("grid argument checks") {
    CHECK_THROWS_AS(classify_grid(kModel, {0.0, 0.5}, {0.6, 1.2}, {1, 5}), DomainError);
    CHECK_THROWS_AS(classify_grid(kModel, {0.5, 0.0}, {0.6, 1.2}, {5, 5}), DomainError);
    CHECK_THROWS_AS(classify_grid(kModel, {0.0, 0.5}, {0.0, 1.2}, {5, 5}), DomainError);
    CHECK(sign_with_band(5e-13) == 0);
    CHECK(sign_with_band(-2e-12) == -1);
    CHECK(sign_with_band(0.1) == 1);
}
