#include "pdm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pdm::io {

std::string format_number(double v, int significant_digits) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
    return buf;
}

namespace {

void dump_rec(const nlohmann::ordered_json& j, int indent, int depth, std::string& out) {
    const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<size_t>(indent * depth), ' ');
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad;
                out += nlohmann::ordered_json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), indent, depth + 1, out);
                out += (i + 1 < j.size()) ? ",\n" : "\n";
            }
            out += close_pad + "}";
            return;
        }
        case nlohmann::ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                out += pad;
                dump_rec(j[i], indent, depth + 1, out);
                out += (i + 1 < j.size()) ? ",\n" : "\n";
            }
            out += close_pad + "]";
            return;
        }
        case nlohmann::ordered_json::value_t::number_float:
            out += format_number(j.get<double>(), kJsonDigits);
            return;
        default:
            out += j.dump();  // strings (escaped), integers, booleans, null
            return;
    }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
    std::string out;
    dump_rec(j, indent, 0, out);
    out += "\n";
    return out;
}

std::string to_csv(const CsvTable& table) {
    std::ostringstream out;
    auto emit_row = [&out](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i].find_first_of(",\n\"") != std::string::npos)
                throw std::invalid_argument("to_csv: cell needs quoting: " + row[i]);
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    };
    emit_row(table.header);
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::invalid_argument("to_csv: row width differs from header");
        emit_row(row);
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("write_file_atomic: cannot open " + tmp);
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            std::remove(tmp.c_str());
            throw std::runtime_error("write_file_atomic: write failed for " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("write_file_atomic: rename failed for " + path);
    }
}

}  // namespace pdm::io
