#include "output.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "ftt/cli.hpp"

namespace ftt::cli {

std::string format_double(double v) {
    if (v == 0.0) return "0";  // no "-0"
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double: buffer too small");
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), width_(header.size()) {
    write(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != width_) throw std::logic_error("CsvWriter: row width differs from header");
    write(fields);
}

void CsvWriter::write(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out_ << ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\r\n") == std::string::npos) {
            out_ << f;
            continue;
        }
        out_ << '"';
        for (char c : f) {
            if (c == '"') out_ << '"';
            out_ << c;
        }
        out_ << '"';
    }
    out_ << "\r\n";
}

std::string join_vector(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ';';
        s += format_double(v[i]);
    }
    return s;
}

nlohmann::ordered_json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

nlohmann::ordered_json json_envelope(const std::string& command) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

}  // namespace ftt::cli
