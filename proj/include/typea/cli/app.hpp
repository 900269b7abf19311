#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace typea::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kInvalidInput = 3,
    kNumerical = 4,
    kDrift = 5,
};

/// Runs one command line (without the program name). Writes CSV/JSON files
/// plus manifest.json under --output-dir and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A stored figure reproduction: the command producing it and the SHA-256 of each data file.
struct GoldenFixture {
    std::string name;
    std::vector<std::string> command;
    std::map<std::string, std::string> checksums;
};

/// Commands that make up the golden set, without checksums.
std::vector<GoldenFixture> golden_catalog();

struct DriftReport {
    std::vector<std::string> changed;  ///< "<fixture>/<file>" whose checksum differs
    std::vector<std::string> missing;  ///< fixtures or files absent from the stored set
    bool clean() const noexcept { return changed.empty() && missing.empty(); }
};

/// Re-runs every golden command against `model` and compares with
/// `dir`/goldens.json. With `update`, rewrites the stored CSVs and checksums.
DriftReport regenerate_goldens(const std::filesystem::path& dir, const std::filesystem::path& model, bool update,
                               std::ostream& log);

}  // namespace typea::cli
