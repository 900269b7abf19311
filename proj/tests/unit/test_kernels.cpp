#include <doctest.h>

#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "typea/induction_machine.hpp"
#include "typea/kernels/torque_kernel.hpp"

using namespace typea;
using namespace typea::kernels;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<Isa> available() {
    std::vector<Isa> out;
    for (auto isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (isa_available(isa)) out.push_back(isa);
    }
    return out;
}

}  // namespace

TEST_CASE("isa names round-trip and scalar is always present") {
    for (auto isa : {Isa::scalar, Isa::avx2, Isa::neon}) CHECK(parse_isa(isa_name(isa)) == isa);
    CHECK_FALSE(parse_isa("sse9").has_value());
    CHECK(isa_available(Isa::scalar));
    MESSAGE("active torque kernel: " << isa_name(active_isa()));
}

TEST_CASE("every SIMD variant reproduces the scalar reference bit for bit") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> slip(-0.6, 0.6);
    std::uniform_real_distribution<double> coef(0.01, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const TorqueCoeffs c{coef(rng), coef(rng) * 0.05, coef(rng) * 0.05, coef(rng)};
        // odd lengths exercise the scalar tails
        const std::size_t n = 1 + rng() % 67;
        std::vector<double> s(n);
        for (auto& x : s) {
            switch (rng() % 10) {
                case 0: x = 0.0; break;
                case 1: x = -0.0; break;
                case 2: x = std::numeric_limits<double>::denorm_min(); break;
                case 3: x = 1e-300; break;
                default: x = slip(rng);
            }
        }
        std::vector<double> ref(n);
        electrical_torque_scalar(c, s, ref);
        for (std::size_t i = 0; i < n; ++i) CHECK(same_bits(ref[i], electrical_torque_ref(c, s[i])));
        for (auto isa : available()) {
            std::vector<double> got(n, -1.0);
            electrical_torque_with(isa, c, s, got);
            for (std::size_t i = 0; i < n; ++i) {
                INFO("isa=" << isa_name(isa) << " s=" << s[i]);
                CHECK(same_bits(got[i], ref[i]));
            }
        }
    }
}

TEST_CASE("s = 0 maps to the continuous limit in every variant") {
    const TorqueCoeffs c{0.95, 0.018, 0.031, 0.128};
    std::vector<double> s = {0.0, -0.0, 0.0, 0.0, 0.02};
    for (auto isa : available()) {
        std::vector<double> out(s.size());
        electrical_torque_with(isa, c, s, out);
        for (int i = 0; i < 4; ++i) CHECK(out[i] == 0.0);
        CHECK(out[4] > 0.0);
    }
}

TEST_CASE("forcing an ISA pins the dispatcher and auto restores it") {
    const Isa automatic = active_isa();
    force_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    force_isa(Isa::neon);
    CHECK(active_isa() == (isa_available(Isa::neon) ? Isa::neon : Isa::scalar));
    force_isa(std::nullopt);
    CHECK(active_isa() == automatic);
}

TEST_CASE("batch and single-slip torque agree through the machine API") {
    const auto m = paper_model().machine;
    const auto th = thevenin_reduce(m);
    std::vector<double> s(1001), out(1001);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = -0.5 + 0.001 * static_cast<double>(i);
    electrical_torque(th, m.r_r, m.r_mult, s, out);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(same_bits(out[i], electrical_torque(th, m.r_r, m.r_mult, s[i])));
}
