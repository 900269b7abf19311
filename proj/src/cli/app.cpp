#include "typea/cli/app.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "typea/bench.hpp"
#include "typea/cli/table.hpp"
#include "typea/dynamics.hpp"
#include "typea/equilibria.hpp"
#include "typea/errors.hpp"
#include "typea/kernels/torque_kernel.hpp"
#include "typea/lyapunov.hpp"
#include "typea/numerics.hpp"
#include "typea/model_config.hpp"
#include "typea/roa.hpp"
#include "typea/sweeps.hpp"

namespace typea::cli {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

/// Bad flag value detected after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wind ranges are clamped here; v_w = 0 is singular.
constexpr double kMinWind = 0.05;

double parse_double(std::string_view text, std::string_view what) {
    double v = 0.0;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw UsageError("bad number '" + std::string(text) + "' in " + std::string(what));
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<double> parse_list(const std::string& text, std::string_view what) {
    std::vector<double> out;
    for (auto part : split(text, ',')) out.push_back(parse_double(part, what));
    return out;
}

struct AxisSpec {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 0;
};

/// lo:hi:n
AxisSpec parse_axis(const std::string& text, std::string_view what) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError(std::string(what) + " expects lo:hi:n, got '" + text + "'");
    AxisSpec a{parse_double(parts[0], what), parse_double(parts[1], what), 0};
    const double n = parse_double(parts[2], what);
    if (n < 1 || n != std::floor(n) || n > 1e8) throw UsageError(std::string(what) + " point count must be a positive integer");
    a.n = static_cast<std::size_t>(n);
    if (a.hi < a.lo) throw UsageError(std::string(what) + " upper bound below lower bound");
    return a;
}

/// lo:hi
std::pair<double, double> parse_window(const std::string& text, std::string_view what) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw UsageError(std::string(what) + " expects lo:hi, got '" + text + "'");
    return {parse_double(parts[0], what), parse_double(parts[1], what)};
}

double clamp_wind(double v) { return std::max(v, kMinWind); }

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const ResonanceError*>(&e)) return "ResonanceError";
    if (dynamic_cast<const DegenerateCircuit*>(&e)) return "DegenerateCircuit";
    if (dynamic_cast<const StepError*>(&e)) return "StepError";
    if (dynamic_cast<const WindowExceedsDomain*>(&e)) return "WindowExceedsDomain";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const NoEquilibrium*>(&e)) return "NoEquilibrium";
    if (dynamic_cast<const StabilityMismatch*>(&e)) return "StabilityMismatch";
    if (dynamic_cast<const QuadratureError*>(&e)) return "QuadratureError";
    if (dynamic_cast<const NumericalError*>(&e)) return "NumericalError";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
    if (dynamic_cast<const DriftError*>(&e)) return "DriftError";
    return "Error";
}

struct Emitted {
    std::string name;  ///< file stem; extension comes from --format
    Table table;
};

struct CommandResult {
    std::vector<Emitted> files;
    ojson parameters = ojson::object();
    std::vector<std::string> diagnostics;
    int exit_code = kOk;
};

struct CommonOptions {
    std::string model_path;
    std::string output_dir = "out";
    std::string format = "csv";
    std::size_t threads = 0;
    std::string isa = "auto";
};

void add_common(CLI::App* sub, CommonOptions& common, bool needs_model = true) {
    auto* model = sub->add_option("--model", common.model_path, "model file (sectioned key = value)");
    if (needs_model) model->required();
    sub->add_option("--output-dir", common.output_dir, "directory for CSV/JSON output and manifest.json")
        ->capture_default_str();
    sub->add_option("--format", common.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--threads", common.threads, "worker threads (0: TYPEA_STAB_THREADS or all cores)")
        ->capture_default_str();
    sub->add_option("--isa", common.isa, "torque kernel variant: auto, scalar, avx2, neon")
        ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}))
        ->capture_default_str();
}

void write_file(const fs::path& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void write_outputs(const std::string& command, const CommonOptions& common, const CommandResult& result) {
    const fs::path dir(common.output_dir);
    fs::create_directories(dir);
    auto files = ojson::array();
    for (const auto& e : result.files) {
        const bool json = common.format == "json";
        const std::string bytes = json ? to_json(e.table) : to_csv(e.table);
        const std::string name = e.name + (json ? ".json" : ".csv");
        write_file(dir / name, bytes);
        files.push_back({{"path", name}, {"sha256", sha256_hex(bytes)}});
    }
    ojson manifest;
    manifest["command"] = command;
    manifest["model_path"] = common.model_path;
    manifest["output_dir"] = common.output_dir;
    manifest["parameters"] = result.parameters;
    manifest["tool_version"] = std::string(kToolVersion);
    manifest["files"] = std::move(files);
    if (!result.diagnostics.empty()) manifest["diagnostics"] = result.diagnostics;
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

// ---- table builders -------------------------------------------------------

Table family_table(const CurveFamily& fam) {
    Table t;
    t.columns = {"parameter", "s", "torque"};
    for (const auto& c : fam.curves) {
        const Cell label = c.label == "Tm" ? Cell{"Tm(v_w=" + format_double(c.parameter) + ")"}
                           : fam.parameter_name == "v_w" ? Cell{c.label}
                                                        : Cell{c.parameter};
        for (std::size_t k = 0; k < fam.s_axis.size(); ++k) t.add({label, fam.s_axis[k], c.torque[k]});
    }
    return t;
}

Table family_summary(const CurveFamily& fam, std::vector<std::string>& diagnostics) {
    Table t;
    t.columns = {"parameter", "s_max", "t_max"};
    for (const auto& c : fam.curves) {
        const Cell label = c.label == "Tm" ? Cell{"Tm(v_w=" + format_double(c.parameter) + ")"}
                           : fam.parameter_name == "v_w" ? Cell{c.label}
                                                        : Cell{c.parameter};
        t.add({label, c.summary.s_max, c.summary.t_max});
        const std::string tag = fam.parameter_name + "=" + format_double(c.parameter);
        if (c.summary.extrapolated) diagnostics.push_back(tag + ": pull-out slip outside the slip axis");
        if (c.summary.grid_disagrees) {
            diagnostics.push_back(tag + ": grid argmax s=" + format_double(c.summary.grid_s_max) +
                                  " T=" + format_double(c.summary.grid_t_max) + " disagrees with closed form");
        }
    }
    return t;
}

Table basin_table(const std::vector<std::pair<double, double>>& rows) {
    Table t;
    t.columns = {"parameter", "basin_upper"};
    for (const auto& [p, upper] : rows) t.add({p, upper});
    return t;
}

ojson axis_json(const AxisSpec& a) { return {{"lo", a.lo}, {"hi", a.hi}, {"n", a.n}}; }

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::converged: return "converged";
        case Outcome::diverged: return "diverged";
        case Outcome::undecided: return "undecided";
    }
    return "undecided";
}

}  // namespace

// ---- golden set -----------------------------------------------------------

std::vector<GoldenFixture> golden_catalog() {
    return {
        {"fig3_torque_slip", {"torque-curves", "--v", "1.0", "--s", "-0.4:0.4:801"}, {}},
        {"fig4_torque_wind", {"torque-curves", "--v", "0.6,0.8,0.9,1.0,1.1", "--s", "0:0.4:401"}, {}},
        {"equilibria", {"equilibria", "--v", "0.6,0.8,0.9,1.0,1.05,1.1,1.15"}, {}},
        {"trajectory_v1", {"simulate", "--v", "1.0", "--s0", "0.001", "--step", "0.001", "--t-end", "50"}, {}},
        {"fig5_shifted_field", {"field", "--v", "0.6,0.8,1.0", "--x", "-0.05:0.05:201"}, {}},
        {"fig6_lyapunov_v0.6", {"lyapunov", "--v", "0.6", "--window", "-0.01:0.01", "--n", "201"}, {}},
        {"fig6_lyapunov_v1.0", {"lyapunov", "--v", "1.0", "--window", "-0.01:0.01", "--n", "201"}, {}},
        {"fig6_lyapunov_v1.05", {"lyapunov", "--v", "1.05", "--window", "-0.01:0.01", "--n", "201"}, {}},
        {"fig8_region_of_attraction", {"roa"}, {}},
        {"fig_windcap_compensation", {"sweep-comp"}, {}},
        {"fig_tipob_rotor_resistance", {"sweep-rotor"}, {}},
    };
}

namespace {

/// SHA-256 of every data file (manifest excluded) in `dir`, keyed by file name.
std::map<std::string, std::string> checksum_dir(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().filename() == "manifest.json") continue;
        std::ifstream f(entry.path(), std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        out[entry.path().filename().string()] = sha256_hex(buf.str());
    }
    return out;
}

}  // namespace

DriftReport regenerate_goldens(const fs::path& dir, const fs::path& model, bool update, std::ostream& log) {
    const fs::path index_path = dir / "goldens.json";
    ojson stored = ojson::object();
    if (fs::exists(index_path)) {
        std::ifstream f(index_path);
        stored = ojson::parse(f);
    }

    const fs::path scratch = fs::temp_directory_path() /
                             ("typea-goldens-" + std::to_string(std::hash<std::string>{}(fs::absolute(dir).string())));
    fs::remove_all(scratch);

    DriftReport report;
    ojson index;
    index["tool_version"] = std::string(kToolVersion);
    auto fixtures = ojson::array();
    for (const auto& fx : golden_catalog()) {
        std::vector<std::string> args = fx.command;
        const fs::path out_dir = scratch / fx.name;
        args.insert(args.end(), {"--model", model.string(), "--output-dir", out_dir.string(), "--threads", "1"});
        std::ostringstream sink;
        const int code = run(args, sink, log);
        if (code != kOk) throw DriftError("golden command for " + fx.name + " failed with exit code " + std::to_string(code));

        const auto sums = checksum_dir(out_dir);
        ojson stored_files = ojson::object();
        for (const auto& f : stored.value("fixtures", ojson::array())) {
            if (f.value("name", "") == fx.name) stored_files = f.value("files", ojson::object());
        }
        for (const auto& [file, sum] : sums) {
            const std::string key = fx.name + "/" + file;
            if (!stored_files.contains(file)) {
                report.missing.push_back(key);
            } else if (stored_files[file].get<std::string>() != sum) {
                report.changed.push_back(key);
            }
        }
        for (const auto& [file, sum] : stored_files.items()) {
            if (!sums.contains(file)) report.changed.push_back(fx.name + "/" + file + " (no longer produced)");
        }

        ojson entry;
        entry["name"] = fx.name;
        entry["command"] = fx.command;
        entry["files"] = sums;
        fixtures.push_back(std::move(entry));

        if (update) {
            const fs::path target = dir / fx.name;
            fs::remove_all(target);
            fs::create_directories(target);
            for (const auto& [file, sum] : sums) fs::copy_file(out_dir / file, target / file);
        }
    }
    index["fixtures"] = std::move(fixtures);
    fs::remove_all(scratch);

    if (update) {
        fs::create_directories(dir);
        write_file(index_path, index.dump(2) + "\n");
    }
    const char* verb = update ? "updated" : "drift";
    for (const auto& c : report.changed) log << verb << ": " << c << "\n";
    for (const auto& m : report.missing) log << (update ? "added" : "missing") << ": " << m << "\n";
    return report;
}

// ---- entry point ----------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transient stability analysis of a Type-A wind turbine on an infinite bus", "typea-stab"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommonOptions common;
    std::function<CommandResult(const ModelDef&)> handler;
    std::string command;
    bool skip_model = false;

    // torque-curves
    std::string tc_v = "0.6,0.8,0.9,1.0,1.1";
    std::string tc_s = "0:0.4:400";
    auto* tc = app.add_subcommand("torque-curves", "electrical torque and mechanical torque per wind velocity");
    add_common(tc, common);
    tc->add_option("--v", tc_v, "wind velocities (pu), comma list")->capture_default_str();
    tc->add_option("--s", tc_s, "slip axis lo:hi:n")->capture_default_str();
    tc->callback([&] {
        command = "torque-curves";
        handler = [&](const ModelDef& model) {
            const auto axis = parse_axis(tc_s, "--s");
            auto winds = parse_list(tc_v, "--v");
            for (auto& v : winds) v = clamp_wind(v);
            const auto fam = torque_family_wind(model, winds, {axis.lo, axis.hi, axis.n}, common.threads);
            CommandResult r;
            r.parameters = {{"v", winds}, {"s", axis_json(axis)}};
            r.files.push_back({"torque_curves", family_table(fam)});
            r.files.push_back({"torque_curves_summary", family_summary(fam, r.diagnostics)});
            out << "torque-curves: " << fam.curves.size() << " curves over " << axis.n << " slips\n";
            return r;
        };
    });

    // equilibria
    std::string eq_v = "0.6,0.8,0.9,1.0,1.1";
    auto* eq = app.add_subcommand("equilibria", "stationary points of the slip dynamics per wind velocity");
    add_common(eq, common);
    eq->add_option("--v", eq_v, "wind velocities (pu), comma list")->capture_default_str();
    eq->callback([&] {
        command = "equilibria";
        handler = [&](const ModelDef& model) {
            auto winds = parse_list(eq_v, "--v");
            for (auto& v : winds) v = clamp_wind(v);
            CommandResult r;
            r.parameters = {{"v", winds}};
            Table t;
            t.columns = {"v_w", "s_star", "stability", "residual"};
            for (double v : winds) {
                try {
                    for (const auto& e : find_equilibria(model, v)) {
                        t.add({v, e.s_star, std::string(e.stability == Stability::stable ? "stable" : "unstable"),
                               e.residual});
                    }
                } catch (const NoEquilibrium& e) {
                    r.diagnostics.push_back(e.what());
                    out << "equilibria: " << e.what() << "\n";
                }
            }
            r.files.push_back({"equilibria", std::move(t)});
            return r;
        };
    });

    // field
    std::string fd_v = "0.6,0.8,1.0";
    std::string fd_x = "-0.05:0.05:201";
    auto* fd = app.add_subcommand("field", "shifted vector field f(x) around the stable equilibrium");
    add_common(fd, common);
    fd->add_option("--v", fd_v, "wind velocities (pu), comma list")->capture_default_str();
    fd->add_option("--x", fd_x, "displacement axis lo:hi:n")->capture_default_str();
    fd->callback([&] {
        command = "field";
        handler = [&](const ModelDef& model) {
            auto winds = parse_list(fd_v, "--v");
            for (auto& v : winds) v = clamp_wind(v);
            const auto axis = parse_axis(fd_x, "--x");
            CommandResult r;
            r.parameters = {{"v", winds}, {"x", axis_json(axis)}};
            Table t;
            t.columns = {"v_w", "s0", "x", "f"};
            for (double v : winds) {
                const SlipDynamics dyn(model, v);
                const double s0 = stable_equilibrium(dyn).s_star;
                for (double x : linspace(axis.lo, axis.hi, axis.n)) t.add({v, s0, x, dyn.acceleration(s0 + x)});
            }
            r.files.push_back({"field", std::move(t)});
            return r;
        };
    });

    // simulate
    double sim_v = 1.0, sim_s0 = 0.001, sim_step = 1e-3, sim_t_end = 50.0;
    auto* sim = app.add_subcommand("simulate", "RK4 integration of the slip swing equation");
    add_common(sim, common);
    sim->add_option("--v", sim_v, "wind velocity (pu)")->capture_default_str();
    sim->add_option("--s0", sim_s0, "initial slip")->capture_default_str();
    sim->add_option("--step", sim_step, "integration step (pu time)")->capture_default_str();
    sim->add_option("--t-end", sim_t_end, "final time (pu time)")->capture_default_str();
    sim->callback([&] {
        command = "simulate";
        handler = [&](const ModelDef& model) {
            const double v = clamp_wind(sim_v);
            const auto traj = simulate(model, v, sim_s0, sim_step, sim_t_end);
            CommandResult r;
            r.parameters = {{"v", v}, {"s0", sim_s0}, {"step", sim_step}, {"t_end", sim_t_end}};
            Table t;
            t.columns = {"t", "s"};
            for (const auto& smp : traj.samples) t.add({smp.t, smp.s});
            r.files.push_back({"trajectory", std::move(t)});

            Table o;
            o.columns = {"outcome", "slip", "direction", "samples", "t_final"};
            const std::string dir = traj.outcome.kind == Outcome::diverged
                                        ? (traj.outcome.direction == Direction::up ? "up" : "down")
                                        : "none";
            o.add({std::string(outcome_name(traj.outcome.kind)), traj.outcome.slip, dir,
                   static_cast<long long>(traj.samples.size()), traj.samples.back().t});
            r.files.push_back({"trajectory_outcome", std::move(o)});
            out << "simulate: " << outcome_name(traj.outcome.kind) << " at s = " << format_double(traj.outcome.slip)
                << " after " << traj.samples.size() << " samples\n";
            return r;
        };
    });

    // lyapunov
    double ly_v = 1.0;
    std::string ly_window = "-0.01:0.01";
    std::size_t ly_n = 401;
    auto* ly = app.add_subcommand("lyapunov", "integral Lyapunov function check around the stable equilibrium");
    add_common(ly, common);
    ly->add_option("--v", ly_v, "wind velocity (pu)")->capture_default_str();
    ly->add_option("--window", ly_window, "displacement window lo:hi (must contain 0)")->capture_default_str();
    ly->add_option("--n", ly_n, "number of samples")->capture_default_str();
    ly->callback([&] {
        command = "lyapunov";
        handler = [&](const ModelDef& model) {
            const double v = clamp_wind(ly_v);
            const auto [lo, hi] = parse_window(ly_window, "--window");
            const auto rep = verify_candidate(model, v, lo, hi, ly_n);
            CommandResult r;
            r.parameters = {{"v", v}, {"window", {lo, hi}}, {"n", ly_n}};
            Table t;
            t.columns = {"x", "L", "dLdt"};
            for (const auto& smp : rep.samples) t.add({smp.x, smp.l, smp.dl_dt});
            t.summary = {{"v_w", rep.v_w},
                         {"s0", rep.s0},
                         {"x_lo", rep.x_lo},
                         {"x_hi", rep.x_hi},
                         {"l_zero", rep.l_zero},
                         {"positivity_ok", rep.positivity_ok},
                         {"derivative_ok", rep.derivative_ok},
                         {"restoring_ok", rep.restoring_ok},
                         {"oddness_defect", rep.oddness_defect}};
            r.files.push_back({"lyapunov", std::move(t)});
            out << "lyapunov: v_w=" << format_double(v) << " s0=" << format_double(rep.s0)
                << " positivity_ok=" << (rep.positivity_ok ? "true" : "false")
                << " derivative_ok=" << (rep.derivative_ok ? "true" : "false")
                << " restoring_ok=" << (rep.restoring_ok ? "true" : "false") << "\n";
            return r;
        };
    });

    // roa
    std::string roa_s = "0:0.5:15", roa_v = "0.6:1.2:12";
    std::string roa_qs = "0:0.48:15", roa_qv = "0.6:1.15:12";
    auto* roa = app.add_subcommand("roa", "region of attraction over the (slip, wind) plane");
    add_common(roa, common);
    roa->add_option("--s", roa_s, "slip axis lo:hi:n")->capture_default_str();
    roa->add_option("--v", roa_v, "wind axis lo:hi:n")->capture_default_str();
    roa->add_option("--quiver-s", roa_qs, "quiver slip axis lo:hi:n")->capture_default_str();
    roa->add_option("--quiver-v", roa_qv, "quiver wind axis lo:hi:n")->capture_default_str();
    roa->callback([&] {
        command = "roa";
        handler = [&](const ModelDef& model) {
            const auto sa = parse_axis(roa_s, "--s");
            auto va = parse_axis(roa_v, "--v");
            const auto qs = parse_axis(roa_qs, "--quiver-s");
            auto qv = parse_axis(roa_qv, "--quiver-v");
            va.lo = clamp_wind(va.lo);
            va.hi = std::max(va.hi, va.lo);
            qv.lo = clamp_wind(qv.lo);
            qv.hi = std::max(qv.hi, qv.lo);
            const auto map = classify_grid(model, {sa.lo, sa.hi}, {va.lo, va.hi}, {sa.n, va.n}, common.threads);
            const auto quiver = vector_field_samples(model, {qs.lo, qs.hi}, {qv.lo, qv.hi}, {qs.n, qv.n},
                                                     common.threads);
            CommandResult r;
            r.parameters = {{"s", axis_json(sa)}, {"v", axis_json(va)}, {"quiver_s", axis_json(qs)},
                            {"quiver_v", axis_json(qv)}};
            Table g;
            g.columns = {"s", "v_w", "w_value", "w_sign", "in_basin"};
            for (std::size_t iv = 0; iv < map.v_axis.size(); ++iv) {
                for (std::size_t is = 0; is < map.s_axis.size(); ++is) {
                    const auto& c = map.at(iv, is);
                    g.add({map.s_axis[is], map.v_axis[iv], c.w_value, static_cast<long long>(c.w_sign), c.in_basin});
                }
            }
            Table q;
            q.columns = {"s", "v_w", "W", "dv"};
            for (const auto& n : quiver) q.add({n.s, n.v_w, n.w, n.dv});
            Table b;
            b.columns = {"v_w", "stable_slip", "lower", "upper", "capped"};
            for (std::size_t iv = 0; iv < map.v_axis.size(); ++iv) {
                const auto& basin = map.basins[iv];
                if (basin.upper == basin.lower) {
                    r.diagnostics.push_back("no stable equilibrium at v_w=" + format_double(map.v_axis[iv]));
                    continue;
                }
                b.add({map.v_axis[iv], basin.stable_slip, basin.lower, basin.upper, basin.capped});
            }
            r.files.push_back({"roa_grid", std::move(g)});
            r.files.push_back({"roa_quiver", std::move(q)});
            r.files.push_back({"roa_basins", std::move(b)});
            out << "roa: " << map.cells.size() << " cells, " << quiver.size() << " quiver nodes\n";
            return r;
        };
    });

    // sweep-comp
    std::string sc_yc = "0,0.1,0.2,0.25";
    std::string sc_s = "0:0.4:400";
    std::string sc_preset;
    double sc_v = 1.0;
    bool sc_above = false;
    auto* sc = app.add_subcommand("sweep-comp", "electrical torque versus compensation susceptance");
    add_common(sc, common);
    sc->add_option("--yc", sc_yc, "compensation susceptances (pu), comma list")->capture_default_str();
    sc->add_option("--preset", sc_preset, "'paper': y_c = 0,1,2,3 (needs --allow-above-resonance)")
        ->check(CLI::IsMember({"paper"}));
    sc->add_flag("--allow-above-resonance", sc_above, "permit y_c beyond 1/x_m_prime");
    sc->add_option("--s", sc_s, "slip axis lo:hi:n")->capture_default_str();
    sc->add_option("--v", sc_v, "wind velocity for the basin edge table")->capture_default_str();
    sc->callback([&] {
        command = "sweep-comp";
        handler = [&](const ModelDef& model) {
            const auto axis = parse_axis(sc_s, "--s");
            const auto values = sc_preset == "paper" ? std::vector<double>{0, 1, 2, 3} : parse_list(sc_yc, "--yc");
            const double v = clamp_wind(sc_v);
            const auto fam = compensation_sweep(model, values, {axis.lo, axis.hi, axis.n},
                                                {.allow_above_resonance = sc_above}, common.threads);
            CommandResult r;
            r.parameters = {{"yc", values}, {"s", axis_json(axis)}, {"v", v}, {"allow_above_resonance", sc_above}};

            // Curves on opposite sides of resonance go to separate files.
            const double res = resonant_susceptance(model.machine.x_m_prime);
            CurveFamily below = fam, above = fam;
            below.curves.clear();
            above.curves.clear();
            for (const auto& c : fam.curves) (c.parameter < res ? below : above).curves.push_back(c);
            if (!above.curves.empty() && !below.curves.empty()) {
                r.files.push_back({"sweep_comp_below_resonance", family_table(below)});
                r.files.push_back({"sweep_comp_above_resonance", family_table(above)});
                r.diagnostics.push_back("sweep crosses parallel resonance at y_c=" + format_double(res));
            } else {
                r.files.push_back({"sweep_comp", family_table(fam)});
            }
            r.files.push_back({"sweep_comp_summary", family_summary(fam, r.diagnostics)});
            r.files.push_back({"sweep_comp_basin", basin_table(basin_vs_parameter(model, CompensationSweep{values}, v))});
            out << "sweep-comp: " << fam.curves.size() << " curves\n";
            return r;
        };
    });

    // sweep-rotor
    std::string sr_r = "1,2,3,4";
    std::string sr_s = "0:0.4:400";
    double sr_v = 1.0;
    auto* sr = app.add_subcommand("sweep-rotor", "electrical torque versus rotor-resistance multiplier");
    add_common(sr, common);
    sr->add_option("--r", sr_r, "rotor-resistance multipliers, comma list")->capture_default_str();
    sr->add_option("--s", sr_s, "slip axis lo:hi:n")->capture_default_str();
    sr->add_option("--v", sr_v, "wind velocity for the basin edge table")->capture_default_str();
    sr->callback([&] {
        command = "sweep-rotor";
        handler = [&](const ModelDef& model) {
            const auto axis = parse_axis(sr_s, "--s");
            const auto values = parse_list(sr_r, "--r");
            const double v = clamp_wind(sr_v);
            const auto fam = rotor_resistance_sweep(model, values, {axis.lo, axis.hi, axis.n}, common.threads);
            CommandResult r;
            r.parameters = {{"r", values}, {"s", axis_json(axis)}, {"v", v}};
            r.files.push_back({"sweep_rotor", family_table(fam)});
            r.files.push_back({"sweep_rotor_summary", family_summary(fam, r.diagnostics)});
            r.files.push_back(
                {"sweep_rotor_basin", basin_table(basin_vs_parameter(model, RotorResistanceSweep{values}, v))});
            out << "sweep-rotor: " << fam.curves.size() << " curves\n";
            return r;
        };
    });

    // validate
    auto* va = app.add_subcommand("validate", "check a model file against the parameter invariants");
    add_common(va, common);
    va->callback([&] {
        command = "validate";
        skip_model = true;
        handler = [&](const ModelDef&) {
            const auto model = read_model_unchecked(common.model_path);
            const auto rep = validate(model);
            CommandResult r;
            Table t;
            t.columns = {"field", "severity", "message"};
            for (const auto& v : rep.violations) t.add({v.field, std::string("error"), v.message});
            for (const auto& w : rep.warnings) t.add({std::string("y_c"), std::string("warning"), w});
            r.files.push_back({"validation", std::move(t)});
            if (rep.ok()) {
                out << "validate: ok\n";
            } else {
                err << "typea-stab validate: ValidationError: " << rep.summary() << "\n";
                r.exit_code = kInvalidInput;
            }
            for (const auto& w : rep.warnings) out << "validate: warning: " << w << "\n";
            return r;
        };
    });

    // bench
    std::size_t bench_reps = 10, bench_side = 500;
    auto* be = app.add_subcommand("bench", "micro-benchmarks of the hot paths (timings vary run to run)");
    add_common(be, common);
    be->add_option("--reps", bench_reps, "repetitions per benchmark (median reported)")->capture_default_str();
    be->add_option("--grid", bench_side, "grid side for classification timing")->capture_default_str();
    be->callback([&] {
        command = "bench";
        handler = [&](const ModelDef& model) {
            const auto results = bench_suite(
                model, {.repetitions = bench_reps, .grid_side = bench_side, .threads = common.threads});
            CommandResult r;
            r.parameters = {{"reps", bench_reps}, {"grid", bench_side}};
            Table t;
            t.columns = {"name", "iterations", "ns_per_op", "throughput"};
            for (const auto& b : results) {
                t.add({b.name, static_cast<long long>(b.iterations), b.ns_per_op, b.throughput});
                out << b.name << ": " << format_double(b.ns_per_op) << " ns/op\n";
            }
            r.files.push_back({"bench", std::move(t)});
            return r;
        };
    });

    // goldens
    std::string golden_dir = "goldens";
    bool golden_update = false;
    auto* gd = app.add_subcommand("goldens", "re-run every figure reproduction and compare with stored fixtures");
    add_common(gd, common);
    gd->add_option("--dir", golden_dir, "golden fixture directory")->capture_default_str();
    gd->add_flag("--update", golden_update, "rewrite stored fixtures and checksums");
    gd->callback([&] {
        command = "goldens";
        skip_model = true;
        handler = [&](const ModelDef&) {
            const auto rep = regenerate_goldens(golden_dir, common.model_path, golden_update, err);
            CommandResult r;
            if (!rep.clean() && !golden_update) {
                std::string msg = "golden drift in " + std::to_string(rep.changed.size() + rep.missing.size()) + " file(s)";
                throw DriftError(msg);
            }
            out << "goldens: " << (golden_update ? "updated" : "no drift") << "\n";
            return r;
        };
    });

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << kToolVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "typea-stab: usage error: " << e.what() << "\n";
        return kUsage;
    }

    if (common.isa == "auto") {
        kernels::force_isa(std::nullopt);
    } else {
        kernels::force_isa(kernels::parse_isa(common.isa));
    }

    try {
        ModelDef model;
        if (!skip_model) model = load_model(common.model_path);
        CommandResult result = handler(model);
        if (command != "goldens") write_outputs(command, common, result);
        for (const auto& d : result.diagnostics) err << "typea-stab " << command << ": note: " << d << "\n";
        return result.exit_code;
    } catch (const UsageError& e) {
        err << "typea-stab " << command << ": usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DriftError& e) {
        err << "typea-stab " << command << ": DriftError: " << e.what() << "\n";
        return kDrift;
    } catch (const NumericalError& e) {
        err << "typea-stab " << command << ": " << error_kind(e) << ": " << e.what() << "\n";
        return kNumerical;
    } catch (const Error& e) {
        err << "typea-stab " << command << ": " << error_kind(e) << ": " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "typea-stab " << command << ": error: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace typea::cli
