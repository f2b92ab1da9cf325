#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace pdm::io {

// Fixed-format float rendering so identical inputs serialize byte-identically
// everywhere: 17 significant digits (round-trip exact) in JSON, 12 in CSV.
inline constexpr int kJsonDigits = 17;
inline constexpr int kCsvDigits = 12;

std::string format_number(double v, int significant_digits);

// Serializer over nlohmann's ordered document type: insertion order of keys
// is the output order, numbers go through format_number(kJsonDigits), lines
// end with LF.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Header row, comma separated, LF endings, no quoting (cells must not contain
// commas or newlines; throws if one does).
std::string to_csv(const CsvTable& table);

inline std::string csv_num(double v) { return format_number(v, kCsvDigits); }

// Writes through a temporary sibling followed by rename, so the destination
// appears only with complete content.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace pdm::io
