#include <atomic>
#include <cstdlib>

#include "typea/kernels/torque_kernel.hpp"

namespace typea::kernels {

namespace {

// -1: automatic selection; otherwise the forced Isa value.
std::atomic<int> g_forced{-1};

bool cpu_has_avx2() noexcept {
#if defined(TYPEA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa detect() noexcept {
    if (const char* env = std::getenv("TYPEA_STAB_ISA")) {
        if (auto isa = parse_isa(env); isa && isa_available(*isa)) return *isa;
    }
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "scalar";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
    if (name == "scalar") return Isa::scalar;
    if (name == "avx2") return Isa::avx2;
    if (name == "neon") return Isa::neon;
    return std::nullopt;
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2: return cpu_has_avx2();
        case Isa::neon:
#if defined(TYPEA_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept {
    const int forced = g_forced.load(std::memory_order_relaxed);
    if (forced >= 0) return static_cast<Isa>(forced);
    static const Isa detected = detect();
    return detected;
}

void force_isa(std::optional<Isa> isa) noexcept {
    if (!isa) {
        g_forced.store(-1, std::memory_order_relaxed);
        return;
    }
    const Isa chosen = isa_available(*isa) ? *isa : Isa::scalar;
    g_forced.store(static_cast<int>(chosen), std::memory_order_relaxed);
}

void electrical_torque_with(Isa isa, const TorqueCoeffs& c, std::span<const double> slip,
                            std::span<double> out) noexcept {
    switch (isa) {
#if defined(TYPEA_HAVE_AVX2)
        case Isa::avx2: electrical_torque_avx2(c, slip, out); return;
#endif
#if defined(TYPEA_HAVE_NEON)
        case Isa::neon: electrical_torque_neon(c, slip, out); return;
#endif
        default: electrical_torque_scalar(c, slip, out); return;
    }
}

void electrical_torque(const TorqueCoeffs& c, std::span<const double> slip, std::span<double> out) noexcept {
    electrical_torque_with(active_isa(), c, slip, out);
}

}  // namespace typea::kernels
