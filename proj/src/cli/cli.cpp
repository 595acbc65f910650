#include "ftt/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "ftt/bessel.hpp"
#include "ftt/error.hpp"

namespace ftt::cli {

namespace {

double parse_real(const std::string& s, const std::string& what) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v))
        throw DomainError("invalid " + what + ": '" + s + "'");
    return v;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
    std::size_t v = 0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end || s.empty()) throw DomainError("invalid " + what + ": '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

struct Defaults {
    std::size_t n_lo;
    std::size_t n_hi;
    std::size_t samples;
};

Defaults defaults_for(const std::string& command) {
    if (command == "constants") return {1, 8, 0};
    if (command == "verify") return {8, 8, 1000};
    if (command == "semigroup-norm") return {3, 3, 0};
    if (command == "bessel-sweep") return {1, 20, 0};
    if (command == "threshold") return {2, 10, 0};
    return {1, 4, 1000};  // probe-gftt2
}

bool single_n(const std::string& command) { return command == "verify" || command == "semigroup-norm"; }

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.command == "constants") return cmd_constants(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "semigroup-norm") return cmd_semigroup_norm(cfg, out, err);
    if (cfg.command == "bessel-sweep") return cmd_bessel_sweep(cfg, out, err);
    if (cfg.command == "threshold") return cmd_threshold(cfg, out, err);
    return cmd_probe_gftt2(cfg, out, err);
}

}  // namespace

std::vector<double> GridSpec::points() const {
    std::vector<double> xs(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        if (spacing == Spacing::Linear) {
            xs[i] = lo + (hi - lo) * t;
        } else {
            xs[i] = lo * std::pow(hi / lo, t);
        }
    }
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

GridSpec parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3 && parts.size() != 4) throw DomainError("grid must be lo:hi:count[:geom|:lin], got '" + text + "'");
    GridSpec g{parse_real(parts[0], "grid lo"), parse_real(parts[1], "grid hi"), parse_count(parts[2], "grid count"),
               Spacing::Linear};
    if (parts.size() == 4) {
        if (parts[3] == "geom") {
            g.spacing = Spacing::Geometric;
        } else if (parts[3] != "lin") {
            throw DomainError("grid spacing must be 'geom' or 'lin', got '" + parts[3] + "'");
        }
    }
    if (g.count < 2) throw DomainError("grid count must be >= 2");
    if (!(g.hi > g.lo)) throw DomainError("grid needs lo < hi");
    if (g.spacing == Spacing::Geometric && !(g.lo > 0)) throw DomainError("geometric grid needs lo > 0");
    return g;
}

std::vector<std::size_t> parse_n_range(const std::string& text) {
    const auto dots = text.find("..");
    std::size_t a = 0;
    std::size_t b = 0;
    if (dots == std::string::npos) {
        a = b = parse_count(text, "n");
    } else {
        a = parse_count(text.substr(0, dots), "n-range start");
        b = parse_count(text.substr(dots + 2), "n-range end");
    }
    if (a < 1) throw DomainError("n must be >= 1");
    if (b < a) throw DomainError("n-range end is below its start: '" + text + "'");
    if (b - a > 100000) throw DomainError("n-range too long: '" + text + "'");
    std::vector<std::size_t> ns;
    for (std::size_t n = a; n <= b; ++n) ns.push_back(n);
    return ns;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fan-Taussky-Todd inequalities: numerical checks and experiments", "ftt"};
    app.require_subcommand(1);

    std::string n_text;
    std::string n_range_text;
    std::string grid_text;
    std::string format_text = "csv";
    std::string variant_text = "standard";
    std::string tol_text;
    std::string out_path;
    std::string samples_out;
    std::optional<std::size_t> samples;
    RunConfig cfg;

    auto add_n = [&](CLI::App* sub) {
        auto* n = sub->add_option("--n", n_text, "Dimension n");
        auto* r = sub->add_option("--n-range", n_range_text, "Inclusive range a..b");
        n->excludes(r);
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", tol_text, "Tolerance (> 0)");
        sub->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "Write to PATH instead of stdout");
    };

    CLI::App* constants = app.add_subcommand("constants", "Sharp constants and threshold alphas for all kinds");
    add_n(constants);
    add_common(constants);

    CLI::App* verify = app.add_subcommand("verify", "Check an inequality on seeded random vectors and the extremal one");
    verify->add_option("--n", n_text, "Dimension n");
    verify->add_option("--kind", cfg.kind, "ftt1, ftt2, conv1 or conv2")->required();
    verify->add_option("--samples", samples, "Random vectors (default 1000)");
    verify->add_option("--seed", cfg.seed, "PRNG seed (default 0)");
    verify->add_option("--samples-out", samples_out, "Per-sample CSV path");
    verify->add_option("--constant-scale", cfg.constant_scale)->group("");
    add_common(verify);

    CLI::App* norm = app.add_subcommand("semigroup-norm", "Operator norm of exp(J x) on a grid");
    norm->add_option("--n", n_text, "Dimension n");
    norm->add_option("--alpha", cfg.alpha, "Diagonal value");
    norm->add_option("--variant", variant_text, "standard or modified")->check(CLI::IsMember({"standard", "modified"}));
    norm->add_option("--grid", grid_text, "lo:hi:count[:geom]");
    add_common(norm);

    CLI::App* bessel = app.add_subcommand("bessel-sweep", "Partial sums of I0(2 sqrt x) against both bounds");
    add_n(bessel);
    bessel->add_option("--grid", grid_text, "lo:hi:count[:geom] (default 0:20:101)");
    add_common(bessel);

    CLI::App* threshold = app.add_subcommand("threshold", "Crossing point x0(n) of the two Bessel bounds");
    add_n(threshold);
    threshold->add_option("--search-hi", cfg.search_hi, "Upper end of the scan (default 100)");
    add_common(threshold);

    CLI::App* probe = app.add_subcommand("probe-gftt2", "Compare the displayed gftt2 form with the exact semigroup");
    add_n(probe);
    probe->add_option("--samples", samples, "Samples per n (default 1000)");
    probe->add_option("--seed", cfg.seed, "PRNG seed (default 0)");
    probe->add_option("--x-max", cfg.x_max, "x drawn on [0, x-max] (default 5)");
    add_common(probe);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("ftt");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    std::ostringstream buffer;
    try {
        cfg.command = app.get_subcommands().front()->get_name();
        const Defaults d = defaults_for(cfg.command);
        if (!n_text.empty()) {
            cfg.ns = parse_n_range(n_text);
            if (cfg.ns.size() != 1) throw DomainError("--n takes a single integer");
        } else if (!n_range_text.empty()) {
            cfg.ns = parse_n_range(n_range_text);
        } else {
            for (std::size_t n = d.n_lo; n <= d.n_hi; ++n) cfg.ns.push_back(n);
        }
        if (single_n(cfg.command) && cfg.ns.size() != 1) throw DomainError(cfg.command + " takes a single --n");
        cfg.samples = samples.value_or(d.samples);
        if (!tol_text.empty()) {
            cfg.tol = parse_real(tol_text, "tol");
            if (!(*cfg.tol > 0)) throw DomainError("--tol must be > 0");
        }
        if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
        cfg.format = format_text == "json" ? Format::Json : Format::Csv;
        cfg.variant = variant_text == "modified" ? JordanVariant::Modified : JordanVariant::Standard;
        if (!samples_out.empty()) cfg.samples_out = samples_out;
        if (!out_path.empty()) cfg.out_path = out_path;
        if (!std::isfinite(cfg.alpha)) throw DomainError("--alpha must be finite");
        if (!(cfg.constant_scale > 0) || !std::isfinite(cfg.constant_scale))
            throw DomainError("--constant-scale must be finite and > 0");
        if (!(cfg.search_hi > bessel::kScanLo) || !std::isfinite(cfg.search_hi))
            throw DomainError("--search-hi must be finite and above the scan start");
        if (!(cfg.x_max >= 0) || !std::isfinite(cfg.x_max)) throw DomainError("--x-max must be finite and >= 0");
    } catch (const DomainError& e) {
        err << "ftt: " << e.what() << '\n';
        return kUsage;
    }

    int code = kOk;
    try {
        code = dispatch(cfg, buffer, err);
    } catch (const DomainError& e) {
        err << "ftt " << cfg.command << ": " << e.what() << '\n';
        return kUsage;
    } catch (const ConvergenceError& e) {
        err << "ftt " << cfg.command << ": " << e.what() << '\n';
        return kNumerical;
    } catch (const OverflowError& e) {
        err << "ftt " << cfg.command << ": " << e.what() << '\n';
        return kNumerical;
    } catch (const InvariantViolation& e) {
        err << "ftt " << cfg.command << ": " << e.what() << '\n';
        return kViolation;
    }

    if (cfg.out_path) {
        std::ofstream file(*cfg.out_path, std::ios::binary);
        if (!file) {
            err << "ftt: cannot open output path " << *cfg.out_path << '\n';
            return kUsage;
        }
        file << buffer.str();
        if (!file.flush()) {
            err << "ftt: write failed for " << *cfg.out_path << '\n';
            return kUsage;
        }
    } else {
        out << buffer.str();
    }
    return code;
}

}  // namespace ftt::cli
