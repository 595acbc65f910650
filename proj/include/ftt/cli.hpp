#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ftt/tridiagonal.hpp"

/// Command-line front end. `ftt <command> [flags]`, see `ftt --help`.
namespace ftt::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,         // all checks passed
    kViolation = 1,  // a mathematical check failed
    kUsage = 2,      // bad flags or configuration
    kNumerical = 3,  // oracle non-convergence or overflow
};

enum class Format { Csv, Json };
enum class Spacing { Linear, Geometric };

struct GridSpec {
    double lo;
    double hi;
    std::size_t count;  // >= 2
    Spacing spacing;

    [[nodiscard]] std::vector<double> points() const;
};

/// Parses "lo:hi:count[:geom|:lin]".
[[nodiscard]] GridSpec parse_grid(const std::string& text);

/// Parses "a..b" (inclusive) or a single integer.
[[nodiscard]] std::vector<std::size_t> parse_n_range(const std::string& text);

struct RunConfig {
    std::string command;
    std::vector<std::size_t> ns;
    std::string kind;
    double alpha = 0.0;
    JordanVariant variant = JordanVariant::Standard;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::optional<GridSpec> grid;
    Format format = Format::Csv;
    std::optional<std::string> out_path;

    // verify
    std::optional<std::string> samples_out;
    double constant_scale = 1.0;  // hidden; scales the sharp constant
    // threshold
    double search_hi = 100.0;
    // probe-gftt2
    double x_max = 5.0;
};

/// Shortest representation that round-trips to the same double.
[[nodiscard]] std::string format_double(double v);

/// Runs the tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ftt::cli
