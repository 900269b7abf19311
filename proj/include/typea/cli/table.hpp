#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace typea::cli {

using Cell = std::variant<double, long long, bool, std::string>;

/// Doubles use 12 significant digits (printf %.12g) so files are stable byte for byte.
std::string format_double(double v);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Emitted as one trailing "# k=v,..." line in CSV and as "summary" in JSON.
    nlohmann::ordered_json summary;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

}  // namespace typea::cli
