#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace ftt::cli {

/// RFC 4180 style CSV: one header row, fields quoted only when needed.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& fields);

private:
    void write(const std::vector<std::string>& fields);
    std::ostream& out_;
    std::size_t width_;
};

/// Vector entries joined with ';' (one CSV field).
std::string join_vector(const std::vector<double>& v);

/// A double as JSON; non-finite values become null.
nlohmann::ordered_json json_number(double v);

/// Top-level JSON object with schema_version and command fields.
nlohmann::ordered_json json_envelope(const std::string& command);

inline constexpr int kSchemaVersion = 1;

}  // namespace ftt::cli
