#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "typea/errors.hpp"
#include "typea/turbine.hpp"

using namespace typea;
using doctest::Approx;

namespace {
const TurbineParams kTp = paper_model().turbine;
}

TEST_CASE("tip-speed ratio") {
    CHECK(tip_speed_ratio(kTp, {1.0, 0.0}) == 7.04);
    CHECK(tip_speed_ratio(kTp, {1.0, 0.1}) == Approx(6.4).epsilon(1e-15));
    CHECK(tip_speed_ratio(kTp, {0.5, 0.0}) == 3.52);
    CHECK_THROWS_AS(tip_speed_ratio(kTp, {0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(tip_speed_ratio(kTp, {1.0, -1.0}), DomainError);
}

TEST_CASE("power coefficient") {
    CHECK(std::abs(power_coefficient(kTp, 7.04) - 0.9915) <= 1e-3);
    CHECK(std::abs(power_coefficient(kTp, kTp.a / kTp.b)) < 1e-13);
    const double at_c = power_coefficient(kTp, kTp.c);
    CHECK(at_c == Approx((kTp.a / kTp.c - kTp.b) * std::exp(-1.0)).epsilon(1e-15));
    CHECK(std::abs(at_c - (-3.013)) <= 1e-3);
    CHECK_THROWS_AS(power_coefficient(kTp, 0.0), DomainError);
    CHECK_THROWS_AS(power_coefficient(kTp, -1.0), DomainError);
}

TEST_CASE("mechanical power and torque") {
    CHECK(std::abs(mechanical_power(kTp, {1.0, 0.0}) - 0.9915) <= 1e-3);
    CHECK(mechanical_power(kTp, {0.5, 0.0}) == Approx(0.125 * power_coefficient(kTp, 3.52)).epsilon(1e-15));
    CHECK(mechanical_torque(kTp, {1.0, 0.0}) == mechanical_power(kTp, {1.0, 0.0}));
    CHECK(std::abs(mechanical_torque(kTp, {1.0, 0.1}) - 0.8745) <= 1e-3);
    CHECK(std::abs(mechanical_torque(kTp, {1.0, 0.3}) - 0.6199) <= 1e-3);
    CHECK(mechanical_torque(kTp, {0.8, 0.2}) == Approx(oracle::mechanical_torque(kTp, 0.8, 0.2)).epsilon(1e-14));
}

TEST_CASE("positivity predicate") {
    CHECK(positivity_condition(kTp, {0.6, 0.0}));
    CHECK(kTp.a / (kTp.lambda_0 * 0.6) - kTp.b == Approx(36.99).epsilon(1e-3));
    CHECK(mechanical_power(kTp, {0.6, 0.0}) > 0.0);
    CHECK(positivity_condition(kTp, {1.0, 0.0}));
    CHECK_FALSE(positivity_condition(kTp, {2.0, 0.0}));

    const TurbineParams edge{.lambda_0 = 4.0, .a = 8.0, .b = 2.0, .c = 1.0, .inertia_m = 1.0};
    CHECK(positivity_condition(edge, {1.0, 0.0}));
    CHECK(mechanical_power(edge, {1.0, 0.0}) == 0.0);
}

TEST_CASE("the predicate implies non-negative power on a sweep") {
    for (double v = 0.1; v <= 2.5; v += 0.01) {
        for (double s = -0.5; s <= 0.5; s += 0.01) {
            if (positivity_condition(kTp, {v, s})) CHECK(mechanical_power(kTp, {v, s}) >= 0.0);
        }
    }
}

TEST_CASE("mechanical torque is positive and decreasing in slip over the operating range") {
    for (double v = 0.6; v <= 1.1 + 1e-12; v += 0.05) {
        for (double s = 0.0; s <= 0.4 + 1e-12; s += 0.005) {
            CHECK(mechanical_torque(kTp, {v, s}) > 0.0);
            const double h = 1e-6;
            const double slope = (mechanical_torque(kTp, {v, s + h}) - mechanical_torque(kTp, {v, s - h})) / (2 * h);
            CHECK(slope < 0.0);
        }
    }
}

TEST_CASE("power scales as v^3 at fixed tip-speed ratio") {
    const double lambda = 6.0;
    for (double v : {0.6, 0.8, 1.0, 1.2}) {
        const double s = kTp.lambda_0 * v / lambda - 1.0;
        CHECK(mechanical_power(kTp, {v, s}) == Approx(v * v * v * power_coefficient(kTp, lambda)).epsilon(1e-13));
    }
}

TEST_CASE("fit argmax differs from lambda_0") {
    const double star = power_coefficient_argmax(kTp);
    CHECK(std::abs(star - 7.054) <= 1e-3);
    const double peak = power_coefficient(kTp, star);
    for (double l = 0.5; l < 40.0; l += 0.01) CHECK(power_coefficient(kTp, l) <= peak);
    const double h = 1e-5;
    CHECK(std::abs(power_coefficient(kTp, star + h) - power_coefficient(kTp, star - h)) / (2 * h) < 1e-8);
}
