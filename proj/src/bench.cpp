#include "typea/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "typea/dynamics.hpp"
#include "typea/equilibria.hpp"
#include "typea/induction_machine.hpp"
#include "typea/kernels/torque_kernel.hpp"
#include "typea/numerics.hpp"
#include "typea/roa.hpp"

namespace typea {

namespace {

BenchResult time_it(std::string name, std::size_t ops, std::size_t reps, const std::function<void()>& fn) {
    using clock = std::chrono::steady_clock;
    std::vector<double> ns;
    ns.reserve(reps);
    for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
        const auto t0 = clock::now();
        fn();
        const auto t1 = clock::now();
        ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
    std::nth_element(ns.begin(), ns.begin() + static_cast<std::ptrdiff_t>(ns.size() / 2), ns.end());
    const double median = std::max(ns[ns.size() / 2], 1.0);
    const double per_op = median / static_cast<double>(ops);
    return {std::move(name), ops, per_op, 1e9 / per_op};
}

}  // namespace

std::vector<BenchResult> bench_suite(const ModelDef& model, const BenchOptions& opts) {
    std::vector<BenchResult> out;
    const auto th = thevenin_reduce(model.machine);
    const double r_r = model.machine.r_r;
    const double r_mult = model.machine.r_mult;

    constexpr std::size_t kEvals = 1'000'000;
    volatile double sink = 0.0;
    out.push_back(time_it("electrical_torque", kEvals, opts.repetitions, [&] {
        double acc = 0.0;
        for (std::size_t i = 0; i < kEvals; ++i) acc += electrical_torque(th, r_r, r_mult, 1e-6 + 4e-7 * double(i));
        sink = acc;
    }));

    const auto slips = linspace(-0.4, 0.4, kEvals);
    std::vector<double> te(kEvals);
    const auto coeffs = torque_coeffs(th, r_r, r_mult);
    for (auto isa : {kernels::Isa::scalar, kernels::Isa::avx2, kernels::Isa::neon}) {
        if (!kernels::isa_available(isa)) continue;
        out.push_back(time_it("electrical_torque_batch_" + std::string(kernels::isa_name(isa)), kEvals,
                              opts.repetitions,
                              [&] { kernels::electrical_torque_with(isa, coeffs, slips, te); }));
    }

    const std::size_t side = opts.grid_side;
    const std::size_t half = std::max<std::size_t>(side / 2, 2);
    const SlipRange s_range{0.0, 0.5};
    const SlipRange v_range{0.6, 1.2};
    out.push_back(time_it("classify_grid_" + std::to_string(half) + "_serial", half * half, opts.repetitions,
                          [&] { classify_grid(model, s_range, v_range, {half, half}, 1); }));
    out.push_back(time_it("classify_grid_" + std::to_string(side) + "_serial", side * side, opts.repetitions,
                          [&] { classify_grid(model, s_range, v_range, {side, side}, 1); }));
    const std::size_t workers = resolve_threads(opts.threads);
    out.push_back(time_it("classify_grid_" + std::to_string(side) + "_threads" + std::to_string(workers),
                          side * side, opts.repetitions,
                          [&] { classify_grid(model, s_range, v_range, {side, side}, workers); }));

    // Far from every equilibrium the run never stops early, so each repetition does sim_steps steps.
    const SlipDynamics dyn(model, 1.0);
    const double step = 1e-7;
    out.push_back(time_it("simulate_rk4", opts.sim_steps, opts.repetitions, [&] {
        const auto traj = simulate(dyn, {}, 0.001, step, step * static_cast<double>(opts.sim_steps));
        sink = traj.samples.back().s;
    }));
    (void)sink;
    return out;
}

}  // namespace typea
