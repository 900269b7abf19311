#include "typea/model_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "typea/errors.hpp"

namespace typea {

bool near_resonance(double x_m_prime, double y_c) noexcept {
    return std::abs(1.0 - x_m_prime * y_c) < kResonanceGuard;
}

double resonant_susceptance(double x_m_prime) noexcept { return 1.0 / x_m_prime; }

bool ValidationReport::names(std::string_view field) const {
    for (const auto& v : violations) {
        if (v.field == field) return true;
    }
    return false;
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.field + ": " + v.message;
    }
    return out;
}

namespace {

void check_positive(ValidationReport& rep, std::string_view field, double value) {
    if (!std::isfinite(value)) {
        rep.violations.push_back({std::string(field), "must be finite"});
    } else if (!(value > 0.0)) {
        rep.violations.push_back({std::string(field), "must be strictly positive"});
    }
}

}  // namespace

ValidationReport validate(const ModelDef& model) {
    ValidationReport rep;
    const auto& m = model.machine;
    check_positive(rep, "r_s", m.r_s);
    check_positive(rep, "x_s", m.x_s);
    check_positive(rep, "x_m_prime", m.x_m_prime);
    check_positive(rep, "r_r", m.r_r);
    check_positive(rep, "x_r", m.x_r);
    check_positive(rep, "x_l", m.x_l);
    check_positive(rep, "v_b", m.v_b);

    if (!std::isfinite(m.y_c)) {
        rep.violations.push_back({"y_c", "must be finite"});
    } else if (m.y_c < 0.0) {
        rep.violations.push_back({"y_c", "must be non-negative"});
    } else if (std::isfinite(m.x_m_prime) && m.x_m_prime > 0.0) {
        if (near_resonance(m.x_m_prime, m.y_c)) {
            rep.violations.push_back({"y_c", "parallel resonance with x_m_prime (y_c = 1/x_m_prime)"});
        } else if (m.x_m_prime * m.y_c > 1.0) {
            rep.warnings.push_back("y_c above resonance: effective magnetizing reactance is negative");
        }
    }

    if (!std::isfinite(m.r_mult)) {
        rep.violations.push_back({"r_mult", "must be finite"});
    } else if (m.r_mult < 1.0) {
        rep.violations.push_back({"r_mult", "must be >= 1"});
    }

    const auto& t = model.turbine;
    check_positive(rep, "lambda_0", t.lambda_0);
    check_positive(rep, "a", t.a);
    check_positive(rep, "b", t.b);
    check_positive(rep, "c", t.c);
    check_positive(rep, "inertia_m", t.inertia_m);
    check_positive(rep, "slip_domain_upper", model.slip_domain_upper);
    return rep;
}

void require_valid(const ModelDef& model) {
    const auto rep = validate(model);
    if (!rep.ok()) throw ValidationError("invalid model: " + rep.summary());
}

ModelDef paper_model() {
    ModelDef m;
    m.machine = MachineParams{.r_s = 0.031,
                              .x_s = 0.10,
                              .x_m_prime = 3.1,
                              .r_r = 0.018,
                              .x_r = 0.18,
                              .x_l = 0.08,
                              .v_b = 1.0,
                              .y_c = 0.0,
                              .r_mult = 1.0};
    m.turbine = TurbineParams{.lambda_0 = 7.04, .a = 247.7079, .b = 21.6539, .c = 18.40, .inertia_m = 0.8};
    m.slip_domain_upper = 0.5;
    return m;
}

namespace {

struct FieldBinding {
    std::string_view section;
    std::string_view key;
    double ModelDef::*top = nullptr;
    double MachineParams::*machine = nullptr;
    double TurbineParams::*turbine = nullptr;
    bool required = true;
};

const std::vector<FieldBinding>& bindings() {
    static const std::vector<FieldBinding> table = {
        {"machine", "r_s", nullptr, &MachineParams::r_s},
        {"machine", "x_s", nullptr, &MachineParams::x_s},
        {"machine", "x_m_prime", nullptr, &MachineParams::x_m_prime},
        {"machine", "r_r", nullptr, &MachineParams::r_r},
        {"machine", "x_r", nullptr, &MachineParams::x_r},
        {"machine", "x_l", nullptr, &MachineParams::x_l},
        {"machine", "v_b", nullptr, &MachineParams::v_b},
        {"machine", "y_c", nullptr, &MachineParams::y_c, nullptr, false},
        {"machine", "r_mult", nullptr, &MachineParams::r_mult, nullptr, false},
        {"turbine", "lambda_0", nullptr, nullptr, &TurbineParams::lambda_0},
        {"turbine", "a", nullptr, nullptr, &TurbineParams::a},
        {"turbine", "b", nullptr, nullptr, &TurbineParams::b},
        {"turbine", "c", nullptr, nullptr, &TurbineParams::c},
        {"turbine", "inertia_m", nullptr, nullptr, &TurbineParams::inertia_m},
        {"analysis", "slip_domain_upper", &ModelDef::slip_domain_upper, nullptr, nullptr, false},
    };
    return table;
}

double& bound_field(ModelDef& model, const FieldBinding& b) {
    if (b.machine) return model.machine.*(b.machine);
    if (b.turbine) return model.turbine.*(b.turbine);
    return model.*(b.top);
}

double bound_value(const ModelDef& model, const FieldBinding& b) {
    if (b.machine) return model.machine.*(b.machine);
    if (b.turbine) return model.turbine.*(b.turbine);
    return model.*(b.top);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
    return value;
}

}  // namespace

ModelDef parse_model_unchecked(std::string_view text, std::string_view origin) {
    ModelDef model;
    model.machine.y_c = 0.0;
    model.machine.r_mult = 1.0;
    model.slip_domain_upper = 0.5;

    std::map<std::string, bool, std::less<>> seen;
    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError(std::string(origin) + ":" + std::to_string(line_no) + ": " + msg);
    };

    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "machine" && section != "turbine" && section != "analysis") {
                fail("unknown section [" + section + "]");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail("expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto raw = trim(line.substr(eq + 1));
        if (section.empty()) fail("key '" + std::string(key) + "' outside of a section");

        const FieldBinding* binding = nullptr;
        for (const auto& b : bindings()) {
            if (b.section == section && b.key == key) binding = &b;
        }
        if (!binding) fail("unknown key '" + std::string(key) + "' in [" + section + "]");

        const std::string qualified = section + "." + std::string(key);
        if (seen.contains(qualified)) fail("duplicate key '" + std::string(key) + "'");
        seen[qualified] = true;

        const auto value = parse_number(raw);
        if (!value) fail("value of '" + std::string(key) + "' is not a number: " + std::string(raw));
        bound_field(model, *binding) = *value;
    }

    for (const auto& b : bindings()) {
        const std::string qualified = std::string(b.section) + "." + std::string(b.key);
        if (b.required && !seen.contains(qualified)) {
            throw ParseError(std::string(origin) + ": missing required key '" + std::string(b.key) + "' in [" +
                             std::string(b.section) + "]");
        }
    }

    return model;
}

ModelDef parse_model(std::string_view text, std::string_view origin) {
    ModelDef model = parse_model_unchecked(text, origin);
    const auto rep = validate(model);
    if (!rep.ok()) throw ValidationError(std::string(origin) + ": " + rep.summary());
    return model;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

ModelDef read_model_unchecked(const std::filesystem::path& path) {
    return parse_model_unchecked(slurp(path), path.string());
}

ModelDef load_model(const std::filesystem::path& path) { return parse_model(slurp(path), path.string()); }

std::string serialize_model(const ModelDef& model) {
    std::string out;
    std::string current;
    char num[64];
    for (const auto& b : bindings()) {
        if (b.section != current) {
            if (!current.empty()) out += "\n";
            current = std::string(b.section);
            out += "[" + current + "]\n";
        }
        std::snprintf(num, sizeof num, "%.17g", bound_value(model, b));
        out += std::string(b.key) + " = " + num + "\n";
    }
    return out;
}

}  // namespace typea
