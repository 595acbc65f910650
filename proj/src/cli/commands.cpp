#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "ftt/bessel.hpp"
#include "ftt/error.hpp"
#include "ftt/inequalities.hpp"
#include "ftt/random.hpp"
#include "ftt/semigroup.hpp"
#include "output.hpp"

namespace ftt::cli {

namespace {

using json = nlohmann::ordered_json;

std::string variant_name(JordanVariant v) { return v == JordanVariant::Standard ? "standard" : "modified"; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int cmd_constants(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    struct Row {
        std::size_t n;
        InequalityKind kind;
        double constant;
        double alpha;
    };
    std::vector<Row> rows;
    for (std::size_t n : cfg.ns) {
        for (InequalityKind kind : kAllKinds) rows.push_back({n, kind, sharp_constant(kind, n), threshold_alpha(kind, n)});
    }

    if (cfg.format == Format::Json) {
        json j = json_envelope("constants");
        j["rows"] = json::array();
        for (const Row& r : rows) {
            j["rows"].push_back({{"n", r.n}, {"kind", to_string(r.kind)}, {"sharp_constant", json_number(r.constant)},
                                 {"threshold_alpha", json_number(r.alpha)}});
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    CsvWriter csv(out, {"n", "kind", "sharp_constant", "threshold_alpha"});
    for (const Row& r : rows)
        csv.row({std::to_string(r.n), std::string(to_string(r.kind)), format_double(r.constant), format_double(r.alpha)});
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const InequalityKind kind = parse_kind(cfg.kind);
    const std::size_t n = cfg.ns.front();
    const double tol = cfg.tol.value_or(1e-10);
    const double constant = sharp_constant(kind, n) * cfg.constant_scale;

    std::optional<std::ofstream> per_sample;
    std::optional<CsvWriter> sample_csv;
    if (cfg.samples_out) {
        per_sample.emplace(*cfg.samples_out, std::ios::binary);
        if (!*per_sample) throw DomainError("cannot open --samples-out path " + *cfg.samples_out);
        sample_csv.emplace(*per_sample, std::vector<std::string>{"sample", "source", "lhs", "rhs", "margin", "holds"});
    }

    double min_margin = std::numeric_limits<double>::infinity();
    std::size_t violations = 0;
    std::optional<RealVector> witness;
    auto record = [&](std::size_t index, const char* source, const RealVector& a) {
        const CheckReport r = verify_with_constant(kind, a, constant, tol);
        min_margin = std::min(min_margin, r.margin);
        if (!r.holds) {
            ++violations;
            if (!witness) witness = a;
        }
        if (sample_csv) {
            sample_csv->row({std::to_string(index), source, format_double(r.lhs), format_double(r.rhs),
                             format_double(r.margin), yes_no(r.holds)});
        }
        return r;
    };

    UniformSource rng(cfg.seed);
    for (std::size_t s = 0; s < cfg.samples; ++s) record(s, "random", rng.vector(n));
    const CheckReport extremal = record(cfg.samples, "extremal", extremal_vector(kind, n));

    const bool ok = violations == 0;
    if (!ok) err << "verify: " << violations << " violation(s) of " << to_string(kind) << " at n=" << n << '\n';

    const std::vector<double> witness_entries = witness ? witness->to_vector() : std::vector<double>{};
    if (cfg.format == Format::Json) {
        json j = json_envelope("verify");
        j["kind"] = to_string(kind);
        j["n"] = n;
        j["samples"] = cfg.samples;
        j["seed"] = cfg.seed;
        j["tol"] = tol;
        j["constant"] = json_number(constant);
        j["min_margin"] = json_number(min_margin);
        j["extremal_margin"] = json_number(extremal.margin);
        j["violations"] = violations;
        j["status"] = ok ? "ok" : "violation";
        j["witness"] = witness_entries;
        out << j.dump(2) << '\n';
    } else {
        CsvWriter csv(out, {"kind", "n", "samples", "seed", "tol", "constant", "min_margin", "extremal_margin",
                            "violations", "status", "witness"});
        csv.row({std::string(to_string(kind)), std::to_string(n), std::to_string(cfg.samples), std::to_string(cfg.seed),
                 format_double(tol), format_double(constant), format_double(min_margin),
                 format_double(extremal.margin), std::to_string(violations), ok ? "ok" : "violation",
                 join_vector(witness_entries)});
    }
    return ok ? kOk : kViolation;
}

int cmd_semigroup_norm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::size_t n = cfg.ns.front();
    const double tol = cfg.tol.value_or(1e-13);
    const UpperBidiagonal j(n, cfg.alpha, cfg.variant);
    const DenseSquareMatrix q = to_dense(j);
    const std::vector<double> xs = cfg.grid ? cfg.grid->points() : default_contraction_grid();
    if (xs.front() < 0.0 || xs.back() > 50.0) throw DomainError("semigroup-norm: grid must lie in [0, 50]");

    struct Row {
        double x;
        double norm;
        std::string status;
    };
    std::vector<Row> rows;
    bool failed = false;
    for (double x : xs) {
        try {
            rows.push_back({x, operator_norm(expm_oracle(q, x), tol), "ok"});
        } catch (const OverflowError& e) {
            rows.push_back({x, std::numeric_limits<double>::quiet_NaN(), "overflow"});
            err << "semigroup-norm: x=" << format_double(x) << ": " << e.what() << '\n';
            failed = true;
        } catch (const ConvergenceError& e) {
            rows.push_back({x, std::numeric_limits<double>::quiet_NaN(), "no_convergence"});
            err << "semigroup-norm: x=" << format_double(x) << ": " << e.what() << '\n';
            failed = true;
        }
    }

    if (cfg.format == Format::Json) {
        json jo = json_envelope("semigroup-norm");
        jo["n"] = n;
        jo["alpha"] = cfg.alpha;
        jo["variant"] = variant_name(cfg.variant);
        jo["rows"] = json::array();
        for (const Row& r : rows)
            jo["rows"].push_back({{"x", r.x}, {"operator_norm", json_number(r.norm)}, {"status", r.status}});
        out << jo.dump(2) << '\n';
    } else {
        CsvWriter csv(out, {"n", "alpha", "variant", "x", "operator_norm", "status"});
        for (const Row& r : rows) {
            csv.row({std::to_string(n), format_double(cfg.alpha), variant_name(cfg.variant), format_double(r.x),
                     std::isfinite(r.norm) ? format_double(r.norm) : "", r.status});
        }
    }
    return failed ? kNumerical : kOk;
}

int cmd_bessel_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::vector<double> xs = cfg.grid ? cfg.grid->points() : GridSpec{0.0, 20.0, 101, Spacing::Linear}.points();
    constexpr double kSlack = 1e-12;

    struct Row {
        std::size_t n;
        double x;
        double partial;
        double b1;
        double b2;
        std::string status;
    };
    std::vector<Row> rows;
    std::size_t violations = 0;
    bool overflow = false;
    for (std::size_t n : cfg.ns) {
        for (double x : xs) {
            Row r{n, x, bessel::bound1(n, x), bessel::bound1(n, x), bessel::bound2(n, x), "ok"};
            try {
                r.partial = bessel::i0_partial(n, x);
            } catch (const OverflowError&) {
                r.partial = std::numeric_limits<double>::quiet_NaN();
                r.status = "overflow";
                overflow = true;
            }
            if (r.status == "ok" && !(std::isfinite(r.b1) && std::isfinite(r.b2))) {
                r.status = "overflow";
                overflow = true;
            }
            if (r.status == "ok") {
                const bool h1 = r.partial <= r.b1 * (1 + kSlack);
                const bool h2 = r.partial <= r.b2 * (1 + kSlack);
                if (!h1 || !h2) {
                    ++violations;
                    r.status = !h1 && !h2 ? "both_violated" : (!h1 ? "bound1_violated" : "bound2_violated");
                }
            }
            rows.push_back(r);
        }
    }
    if (violations > 0) err << "bessel-sweep: " << violations << " row(s) where a bound is below the partial sum\n";
    if (overflow) err << "bessel-sweep: overflow rows present\n";

    auto holds = [&](double partial, double bound) { return partial <= bound * (1 + kSlack); };
    if (cfg.format == Format::Json) {
        json j = json_envelope("bessel-sweep");
        j["rows"] = json::array();
        for (const Row& r : rows) {
            j["rows"].push_back({{"n", r.n}, {"x", r.x}, {"partial", json_number(r.partial)},
                                 {"bound1", json_number(r.b1)}, {"bound2", json_number(r.b2)}, {"status", r.status}});
        }
        j["violations"] = violations;
        out << j.dump(2) << '\n';
    } else {
        CsvWriter csv(out, {"n", "x", "partial", "bound1", "bound2", "bound1_holds", "bound2_holds", "status"});
        for (const Row& r : rows) {
            const bool fine = std::isfinite(r.partial);
            csv.row({std::to_string(r.n), format_double(r.x), fine ? format_double(r.partial) : "",
                     format_double(r.b1), format_double(r.b2), fine ? yes_no(holds(r.partial, r.b1)) : "",
                     fine ? yes_no(holds(r.partial, r.b2)) : "", r.status});
        }
    }
    if (violations > 0) return kViolation;
    return overflow ? kNumerical : kOk;
}

int cmd_threshold(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const double tol = cfg.tol.value_or(1e-12);
    struct Row {
        std::size_t n;
        std::string status;
        bessel::ThresholdResult result;
    };
    std::vector<Row> rows;
    bool numerical = false;
    for (std::size_t n : cfg.ns) {
        Row row{n, "", {}};
        if (n < 2) {
            row.status = "precondition_rejected";
            row.result.x0 = row.result.lo = row.result.hi = std::numeric_limits<double>::quiet_NaN();
        } else {
            try {
                row.result = bessel::threshold_x0(n, tol, cfg.search_hi);
                row.status = bessel::to_string(row.result.status);
            } catch (const ConvergenceError& e) {
                err << "threshold: n=" << n << ": " << e.what() << '\n';
                row.status = "numerical_failure";
                row.result.x0 = row.result.lo = row.result.hi = std::numeric_limits<double>::quiet_NaN();
                numerical = true;
            }
        }
        rows.push_back(std::move(row));
    }

    // x0 monotonicity across n is reported, not enforced.
    std::vector<std::string> change(rows.size());
    bool nondecreasing = true;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double x0 = rows[i].result.x0;
        if (!std::isfinite(x0)) continue;
        if (std::isfinite(prev)) {
            change[i] = format_double(x0 - prev);
            if (x0 < prev) nondecreasing = false;
        }
        prev = x0;
    }

    if (cfg.format == Format::Json) {
        json j = json_envelope("threshold");
        j["tol"] = tol;
        j["search_hi"] = cfg.search_hi;
        j["rows"] = json::array();
        for (const Row& r : rows) {
            json crossings = json::array();
            for (const auto& [lo, hi] : r.result.crossings) crossings.push_back({lo, hi});
            j["rows"].push_back({{"n", r.n},
                                 {"status", r.status},
                                 {"x0", json_number(r.result.x0)},
                                 {"lo", json_number(r.result.lo)},
                                 {"hi", json_number(r.result.hi)},
                                 {"sign_changes", r.result.sign_changes},
                                 {"crossings", crossings},
                                 {"iterations", r.result.iterations},
                                 {"sign_pattern", r.result.sign_pattern}});
        }
        j["x0_nondecreasing"] = nondecreasing;
        out << j.dump(2) << '\n';
    } else {
        CsvWriter csv(out, {"n", "status", "x0", "lo", "hi", "sign_changes", "iterations", "x0_change", "sign_pattern"});
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Row& r = rows[i];
            const bool found = std::isfinite(r.result.x0);
            csv.row({std::to_string(r.n), r.status, found ? format_double(r.result.x0) : "",
                     found ? format_double(r.result.lo) : "", found ? format_double(r.result.hi) : "",
                     std::to_string(r.result.sign_changes), std::to_string(r.result.iterations), change[i],
                     r.result.sign_pattern});
        }
    }
    return numerical ? kNumerical : kOk;
}

int cmd_probe_gftt2(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    std::vector<Gftt2ProbeReport> reports;
    if (cfg.samples > 0) {
        for (std::size_t n : cfg.ns) reports.push_back(gftt2_discrepancy_probe(n, cfg.samples, cfg.seed, cfg.x_max));
    }

    if (cfg.format == Format::Json) {
        json j = json_envelope("probe-gftt2");
        j["samples"] = cfg.samples;
        j["seed"] = cfg.seed;
        j["x_max"] = cfg.x_max;
        j["reports"] = json::array();
        for (const auto& r : reports) {
            j["reports"].push_back({{"n", r.n},
                                    {"alpha", r.alpha},
                                    {"max_violation", json_number(r.max_violation)},
                                    {"violation_x", r.violation_x},
                                    {"violation_a", r.violation_a.to_vector()},
                                    {"stated_inequality_holds", r.max_violation <= 0.0},
                                    {"max_discrepancy", json_number(r.max_discrepancy)},
                                    {"discrepancy_x", r.discrepancy_x},
                                    {"discrepancy_a", r.discrepancy_a.to_vector()}});
        }
        out << j.dump(2) << '\n';
    } else {
        CsvWriter csv(out, {"n", "samples", "seed", "alpha", "max_violation", "violation_x", "violation_a",
                            "max_discrepancy", "discrepancy_x", "discrepancy_a"});
        for (const auto& r : reports) {
            csv.row({std::to_string(r.n), std::to_string(r.samples), std::to_string(r.seed), format_double(r.alpha),
                     format_double(r.max_violation), format_double(r.violation_x), join_vector(r.violation_a.to_vector()),
                     format_double(r.max_discrepancy), format_double(r.discrepancy_x),
                     join_vector(r.discrepancy_a.to_vector())});
        }
    }
    return kOk;
}

}  // namespace ftt::cli
