#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace typea {

/// Per-unit induction machine, line and compensation parameters.
///
/// Compensation is held as a shunt susceptance `y_c` (0 = uncompensated).
/// The effective magnetizing reactance is x_m' / (1 - x_m' * y_c), so the
/// usual parallel form x_m' * x_c / (x_m' + x_c) corresponds to x_c = -1 / y_c.
struct MachineParams {
    double r_s = 0.0;        ///< stator resistance
    double x_s = 0.0;        ///< stator leakage reactance
    double x_m_prime = 0.0;  ///< magnetizing reactance
    double r_r = 0.0;        ///< rotor resistance
    double x_r = 0.0;        ///< rotor leakage reactance
    double x_l = 0.0;        ///< line reactance to the infinite bus
    double v_b = 1.0;        ///< infinite-bus voltage
    double y_c = 0.0;        ///< compensation susceptance
    double r_mult = 1.0;     ///< rotor-resistance multiplier (1 = squirrel cage)

    bool operator==(const MachineParams&) const = default;
};

/// Per-unit aerodynamic fit C_p(lambda) = (a / lambda - b) exp(-c / lambda) and inertia.
struct TurbineParams {
    double lambda_0 = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double inertia_m = 0.0;

    bool operator==(const TurbineParams&) const = default;
};

struct ModelDef {
    MachineParams machine;
    TurbineParams turbine;
    double slip_domain_upper = 0.5;

    bool operator==(const ModelDef&) const = default;
};

/// Relative width of the band around y_c = 1 / x_m' that is treated as resonant.
inline constexpr double kResonanceGuard = 1e-6;

/// True when |1 - x_m' * y_c| falls inside the resonance guard band.
bool near_resonance(double x_m_prime, double y_c) noexcept;

/// y_c = 1 / x_m'
double resonant_susceptance(double x_m_prime) noexcept;

struct Violation {
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    /// Non-fatal observations, e.g. compensation above resonance.
    std::vector<std::string> warnings;

    bool ok() const noexcept { return violations.empty(); }
    bool names(std::string_view field) const;
    std::string summary() const;
};

ValidationReport validate(const ModelDef& model);

/// Throws ValidationError with every violated field when the model is invalid.
void require_valid(const ModelDef& model);

/// Reference parameter set used throughout the docs and tests (y_c = 0, r_mult = 1, M = 0.8).
ModelDef paper_model();

/// Parses the sectioned key/value model format. Throws ParseError or ValidationError.
ModelDef parse_model(std::string_view text, std::string_view origin = "<string>");
ModelDef load_model(const std::filesystem::path& path);

/// Syntax-only parse: defaults applied, invariants not checked (used by `validate`).
ModelDef parse_model_unchecked(std::string_view text, std::string_view origin = "<string>");
ModelDef read_model_unchecked(const std::filesystem::path& path);

/// Writes every field with round-trip precision.
std::string serialize_model(const ModelDef& model);

}  // namespace typea
