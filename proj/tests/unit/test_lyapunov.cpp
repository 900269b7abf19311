#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "typea/dynamics.hpp"
#include "typea/equilibria.hpp"
#include "typea/errors.hpp"
#include "typea/lyapunov.hpp"
#include "typea/numerics.hpp"

using namespace typea;

namespace {
const ModelDef kModel = paper_model();

double s0_at(double v) { return stable_equilibrium(kModel, v).s_star; }
}  // namespace

TEST_CASE("adaptive Simpson on known integrals") {
    CHECK(std::abs(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12).value - 2.0) < 1e-11);
    CHECK(std::abs(adaptive_simpson([](double x) { return std::exp(x); }, 1.0, 0.0, 1e-12).value + (M_E - 1.0)) < 1e-11);
    CHECK(adaptive_simpson([](double) { return 1.0; }, 3.0, 3.0, 1e-12).value == 0.0);
    CHECK_THROWS_AS(adaptive_simpson([](double x) { return 1.0 / std::sqrt(std::abs(x)); }, -1.0, 1.0, 1e-14, 1000),
                    QuadratureError);
}

TEST_CASE("L vanishes at the origin and is positive nearby") {
    const double s0 = s0_at(1.0);
    CHECK(lyapunov_value(kModel, 1.0, s0, 0.0) == 0.0);
    for (double x : {-0.01, 0.01}) {
        const double l = lyapunov_value(kModel, 1.0, s0, x);
        CHECK(l > 0.0);
        const double ref = -oracle::trapezoid([&](double xi) { return oracle::field(kModel, 1.0, s0 + xi); }, 0.0, x,
                                              100000);
        CHECK(std::abs(l - ref) <= 1e-8);
    }
}

TEST_CASE("near the origin L is the quadratic of the linearized field") {
    const double s0 = s0_at(1.0);
    const double h = 1e-7;
    const double slope = (oracle::field(kModel, 1.0, s0 + h) - oracle::field(kModel, 1.0, s0 - h)) / (2 * h);
    // least-squares fit L = k x^2 over |x| <= 1e-3
    double num = 0.0, den = 0.0;
    for (int i = -20; i <= 20; ++i) {
        if (i == 0) continue;
        const double x = 1e-3 * i / 20.0;
        num += lyapunov_value(kModel, 1.0, s0, x) * x * x;
        den += x * x * x * x;
    }
    const double k = num / den;
    CHECK(k == doctest::Approx(-0.5 * slope).epsilon(0.01));
}

TEST_CASE("orbital derivative is the negated squared field") {
    const double s0 = s0_at(1.0);
    CHECK(std::abs(lyapunov_derivative(kModel, 1.0, s0, 0.0)) < 1e-18);
    for (double x : {-0.02, -0.005, 0.003, 0.05}) {
        const double f = shifted_field(kModel, 1.0, s0, x);
        CHECK(lyapunov_derivative(kModel, 1.0, s0, x) == -f * f);
        CHECK(lyapunov_derivative(kModel, 1.0, s0, x) < 0.0);
    }
}

TEST_CASE("chain rule: dL/dx * f equals -f^2") {
    const double s0 = s0_at(1.0);
    const IntegralLyapunov lyap(kModel, 1.0, s0);
    for (double x : {0.005, -0.005, 0.002}) {
        // five-point stencil: truncation O(h^4), quadrature noise O(tol / h)
        const double h = 1e-4;
        const double dldx = (lyap.value(x - 2 * h) - 8 * lyap.value(x - h) + 8 * lyap.value(x + h) -
                             lyap.value(x + 2 * h)) /
                            (12 * h);
        const double f = lyap.field(x);
        CHECK(std::abs(dldx * f - lyap.derivative(x)) <= 1e-6 * std::abs(lyap.derivative(x)));
    }
}

TEST_CASE("verify_candidate on the default window") {
    const auto rep = verify_candidate(kModel, 1.0, -0.01, 0.01, 401);
    CHECK(rep.positivity_ok);
    CHECK(rep.derivative_ok);
    CHECK(rep.restoring_ok);
    CHECK(rep.samples.size() == 401);
    CHECK(std::abs(rep.l_zero) <= 1e-12);
    CHECK(rep.oddness_defect > 0.0);  // f is not exactly odd
    MESSAGE("oddness defect at V=1: " << rep.oddness_defect);
}

TEST_CASE("windows past the unstable root lose the Lyapunov property") {
    const auto roots = find_equilibria(kModel, 1.0);
    const double s0 = roots[0].s_star;
    // L keeps growing up to the unstable root, then falls; at x = 0.2 it is still positive.
    const auto rep = verify_candidate(kModel, 1.0, -0.01, 0.20, 421);
    CHECK_FALSE(rep.restoring_ok);
    CHECK(rep.derivative_ok);
    const double at_barrier = lyapunov_value(kModel, 1.0, s0, roots[1].s_star - s0);
    CHECK(lyapunov_value(kModel, 1.0, s0, 0.2) < at_barrier);

    // far enough out L drops below zero
    const auto wide = verify_candidate(kModel, 1.0, -0.01, kModel.slip_domain_upper - s0, 401);
    CHECK_FALSE(wide.positivity_ok);
    CHECK_FALSE(wide.restoring_ok);
}

TEST_CASE("degenerate window and domain errors") {
    const auto rep = verify_candidate(kModel, 1.0, 0.0, 0.0, 401);
    CHECK(rep.samples.size() == 1);
    CHECK(rep.samples[0].l == 0.0);
    CHECK(rep.positivity_ok);
    CHECK(rep.derivative_ok);

    CHECK_THROWS_AS(verify_candidate(kModel, 1.0, 0.0, 0.6, 11), WindowExceedsDomain);
    CHECK_THROWS_AS(verify_candidate(kModel, 1.0, -1.5, 0.0, 11), WindowExceedsDomain);
    CHECK_THROWS_AS(verify_candidate(kModel, 1.0, 0.01, 0.02, 11), DomainError);
}

TEST_CASE("Lyapunov conditions at the figure wind speeds") {
    for (double v : {0.6, 1.0, 1.05}) {
        const auto rep = verify_candidate(kModel, v, -0.01, 0.01, 401);
        CHECK(rep.positivity_ok);
        CHECK(rep.derivative_ok);
    }
}

TEST_CASE("L is non-increasing along a converging trajectory") {
    const double s0 = s0_at(1.0);
    const IntegralLyapunov lyap(kModel, 1.0, s0);
    for (double s_init : {0.001, 0.1}) {
        const auto traj = simulate(kModel, 1.0, s_init, 1e-3, 50.0);
        REQUIRE(traj.outcome.kind == Outcome::converged);
        double prev = lyap.value(traj.samples.front().s - s0);
        for (std::size_t k = 1; k < traj.samples.size(); k += 7) {
            const double l = lyap.value(traj.samples[k].s - s0);
            CHECK(l <= prev + 1e-8);
            prev = l;
        }
    }
}
