// Acceptance driver. `acceptance <k> [path-to-ftt]` runs criterion k (1..12),
// `acceptance all [path-to-ftt]` runs every criterion. One PASS/FAIL line each.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fixtures.hpp"
#include "ftt/bessel.hpp"
#include "ftt/chebyshev.hpp"
#include "ftt/cli.hpp"
#include "ftt/error.hpp"
#include "ftt/inequalities.hpp"
#include "ftt/random.hpp"
#include "ftt/semigroup.hpp"
#include "ftt/tridiagonal.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace ftt;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string sci(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

Eigen::VectorXd as_eigen(const RealVector& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.entries().data(), static_cast<Eigen::Index>(v.size()));
}

Outcome determinant_identities() {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (int i = 0; i < 50; ++i) {
            const double x = -1.5 + 3.0 * i / 49.0;
            const double u = chebyshev::u_eval(n, x);
            const double ud = chebyshev::u_diff_eval(n, x);
            const double s = det_recurrence(symmetrize(UpperBidiagonal(n, x)));
            const double m = det_recurrence(symmetrize(UpperBidiagonal(n, x, JordanVariant::Modified)));
            worst = std::max(worst, std::abs(s - u) / std::max(1.0, std::abs(u)));
            worst = std::max(worst, std::abs(m - ud) / std::max(1.0, std::abs(ud)));
        }
    }
    return {worst <= 1e-9, "max relative error " + sci(worst) + " (limit 1e-9, 12 x 50 points, both variants)"};
}

Outcome zero_sets() {
    double residual = 0.0;
    double extreme = 0.0;
    for (std::size_t n = 1; n <= 40; ++n) {
        for (double z : chebyshev::u_zeros(n)) residual = std::max(residual, std::abs(chebyshev::u_eval(n, z)));
        const auto zd = chebyshev::u_diff_zeros(n);
        for (double z : zd) residual = std::max(residual, std::abs(chebyshev::u_diff_eval(n, z)));
        const auto [lo, hi] = std::minmax_element(zd.begin(), zd.end());
        extreme = std::max(extreme, std::abs(*lo + std::cos(2 * pi / (2.0 * n + 1))));
        extreme = std::max(extreme, std::abs(*hi - std::cos(pi / (2.0 * n + 1))));
    }
    const bool ok = residual <= 1e-11 && extreme <= 1e-14;
    return {ok, "max |U(z)| " + sci(residual) + " (limit 1e-11), extreme-zero error " + sci(extreme) + " (limit 1e-14)"};
}

Outcome dissipativity_thresholds() {
    UniformSource rng(3001);
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::size_t mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = rng.index(1, 16);
        const double alpha = rng.uniform(-2.0, 2.0);
        for (JordanVariant v : {JordanVariant::Standard, JordanVariant::Modified}) {
            const double threshold = dissipativity_threshold(n, v, Direction::PlusJ);
            if (std::abs(alpha - threshold) <= 1e-10) {
                ++skipped;
                continue;
            }
            ++checked;
            const bool expected = alpha < threshold;
            if (check_dissipative(UpperBidiagonal(n, alpha, v)).is_dissipative != expected) ++mismatches;
        }
    }
    return {mismatches == 0, std::to_string(mismatches) + " mismatches in " + std::to_string(checked) +
                                 " classifications (" + std::to_string(skipped) + " inside the 1e-10 band)"};
}

Outcome ftt_inequalities() {
    UniformSource rng(4001);
    double min_margin = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 2000; ++trial) {
        const RealVector a = rng.vector(rng.index(1, 64));
        for (InequalityKind kind : kAllKinds) min_margin = std::min(min_margin, verify(kind, a).margin);
    }
    double extremal = 0.0;
    std::size_t survived = 0;
    for (std::size_t n = 1; n <= 16; ++n) {
        for (InequalityKind kind : kAllKinds) {
            const RealVector e = extremal_vector(kind, n);
            extremal = std::max(extremal, std::abs(verify(kind, e).margin));
            const double c = sharp_constant(kind, n);
            const double tampered = is_lower_bound(kind) ? c + 1e-3 : c - 1e-3;
            if (verify_with_constant(kind, e, tampered).holds) ++survived;
        }
    }
    const bool ok = min_margin >= -1e-10 && extremal <= 1e-8 && survived == 0;
    return {ok, "random min margin " + sci(min_margin) + " (limit -1e-10), extremal max |margin| " + sci(extremal) +
                    " (limit 1e-8), tampered constants not violated: " + std::to_string(survived)};
}

Outcome matrix_exponential() {
    UniformSource rng(5001);
    double closed = 0.0;
    double law = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = rng.index(1, 10);
        const double alpha = rng.uniform(-1.0, 1.0);
        const double x = rng.uniform(0.0, 5.0);
        const Eigen::MatrixXd q = to_dense(UpperBidiagonal(n, alpha));
        const Eigen::MatrixXd series = expm_oracle(q, x);
        const Eigen::MatrixXd exact = exp_jordan_closed(n, alpha, x);
        for (Eigen::Index i = 0; i < exact.rows(); ++i)
            for (Eigen::Index j = i; j < exact.cols(); ++j)
                closed = std::max(closed, oracle::rel_err(series(i, j), exact(i, j)));
        const double y = rng.uniform(0.0, 5.0 - x);
        const Eigen::MatrixXd whole = expm_oracle(q, x + y);
        law = std::max(law, (whole - expm_oracle(q, x) * expm_oracle(q, y)).norm() / std::max(1.0, whole.norm()));
    }
    const bool ok = closed <= 1e-11 && law <= 1e-10;
    return {ok, "closed form vs series max rel err " + sci(closed) + " (limit 1e-11), semigroup law " + sci(law) +
                    " (limit 1e-10)"};
}

Outcome lumer_phillips() {
    std::vector<double> grid(64);
    for (int i = 0; i < 64; ++i) grid[i] = 10.0 * i / 63.0;
    double worst_at = 0.0;
    std::size_t no_growth = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        const double star = -std::cos(pi / (n + 1.0));
        const auto at = contraction_check(to_dense(UpperBidiagonal(n, star)), grid);
        worst_at = std::max(worst_at, *std::max_element(at.norms.begin(), at.norms.end()));
        const auto above = contraction_check(to_dense(UpperBidiagonal(n, star + 0.05)), grid);
        if (*std::max_element(above.norms.begin(), above.norms.end()) <= 1.0) ++no_growth;
    }
    const bool ok = worst_at <= 1 + 1e-9 && no_growth == 0;
    return {ok, "max norm at alpha* exceeds 1 by " + sci(worst_at - 1.0) + " (limit 1e-9); alpha*+0.05 without growth: " +
                    std::to_string(no_growth)};
}

Outcome generalized_inequality() {
    UniformSource rng(7001);
    double min_margin = std::numeric_limits<double>::infinity();
    double at_zero = 0.0;
    double slope_err = 0.0;
    std::size_t fails = 0;
    const double h = 1e-5;
    for (int trial = 0; trial < 1000; ++trial) {
        const RealVector a = rng.vector(rng.index(1, 16));
        const double x = rng.uniform(0.0, 5.0);
        const CheckReport r = gftt_check(a, x);
        if (!r.holds) ++fails;
        min_margin = std::min(min_margin, r.margin);
        const CheckReport z = gftt_check(a, 0.0);
        at_zero = std::max(at_zero, std::abs(z.lhs - z.rhs));
        auto gap = [&](double t) { return gftt_check(a, t).margin; };
        // Second-order one-sided difference; the identity lives on x >= 0.
        const double slope = (-3 * gap(0) + 4 * gap(h) - gap(2 * h)) / (2 * h);
        slope_err = std::max(slope_err, std::abs(slope - verify(InequalityKind::Ftt1, a).margin));
    }
    const bool ok = fails == 0 && at_zero <= 1e-13 && slope_err <= 1e-4;
    return {ok, std::to_string(fails) + " failures, min margin " + sci(min_margin) + "; |lhs-rhs| at x=0 " + sci(at_zero) +
                    " (limit 1e-13); derivative vs ftt1 margin " + sci(slope_err) + " (limit 1e-4)"};
}

Outcome exact_gftt2() {
    UniformSource rng(8001);
    double worst = -std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = rng.index(1, 10);
        const RealVector a = rng.vector(n);
        const double x = rng.uniform(0.0, 5.0);
        const double alpha = -std::cos(2 * pi / (2.0 * n + 1));
        worst = std::max(worst, gftt2_exact_lhs(a, alpha, x) / a.squared_norm() - 1.0);
    }
    const auto probe = gftt2_discrepancy_probe(2, 10000, 7);
    const double x = probe.discrepancy_x;
    const RealVector& a = probe.discrepancy_a;
    const double by_hand =
        std::abs(std::pow(a[0] + x * a[1], 2) - std::pow(a[0] + 2 * (1 - std::exp(-x / 2)) * a[1], 2));
    const double agreement = std::abs(probe.max_discrepancy - by_hand) / by_hand;
    const bool ok = worst <= 1e-10 && probe.max_discrepancy > 0.0 && agreement <= 1e-10;
    return {ok, "max exact/sum(a^2) - 1 = " + sci(worst) + " (limit 1e-10); n=2 probe discrepancy " +
                    sci(probe.max_discrepancy) + ", vs 2(1-e^{-x/2}) entry " + sci(agreement) + " relative"};
}

Outcome bessel_bounds() {
    std::size_t fail1 = 0;
    std::size_t fail2 = 0;
    std::string witness;
    double equality = 0.0;
    for (std::size_t n = 1; n <= 20; ++n) {
        for (int i = 0; i < 100; ++i) {
            const double x = 20.0 * i / 99.0;
            const double p = bessel::i0_partial(n, x);
            const double b1 = bessel::bound1(n, x);
            const double b2 = bessel::bound2(n, x);
            if (p > b1 * (1 + 1e-12)) ++fail1;
            if (p > b2 * (1 + 1e-12)) {
                if (fail2++ == 0) witness = "n=" + std::to_string(n) + " x=" + ftt::cli::format_double(x) +
                                            " partial " + ftt::cli::format_double(p) + " > bound2 " +
                                            ftt::cli::format_double(b2);
            }
            if (n == 1) {
                equality = std::max(equality, std::abs(b1 - p));
                equality = std::max(equality, std::abs(b2 - p));
            }
        }
    }
    const bool ok = fail1 == 0 && fail2 == 0 && equality <= 1e-14;
    std::string detail = "bound1 violations " + std::to_string(fail1) + "/2000, bound2 violations " +
                         std::to_string(fail2) + "/2000, n=1 equality error " + sci(equality);
    if (!witness.empty()) detail += "; first bound2 violation: " + witness;
    return {ok, detail};
}

Outcome threshold_exploration() {
    std::size_t bad = 0;
    double widest = 0.0;
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto r = bessel::threshold_x0(n);
        if (r.status != bessel::ThresholdStatus::Found || r.sign_changes != 1) ++bad;
        else widest = std::max(widest, r.hi - r.lo);
    }
    const double x0 = bessel::threshold_x0(2).x0;
    const bool same = x0 == kThresholdX0N2;
    const bool ok = bad == 0 && widest <= 1e-10 && same;
    return {ok, std::to_string(bad) + " n without exactly one sign change, widest bracket " + sci(widest) +
                    " (limit 1e-10), x0(2) = " + ftt::cli::format_double(x0) + (same ? " matches" : " differs from") +
                    " fixture " + ftt::cli::format_double(kThresholdX0N2)};
}

Outcome strict_lumer_phillips() {
    UniformSource rng(11001);
    std::vector<double> xs = default_contraction_grid();
    xs.erase(xs.begin());  // x > 0
    std::size_t disagreements = 0;
    std::size_t dim_mismatch = 0;
    double residual = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng.index(1, 8);
        // Half strictly dissipative, half with a norm-preserving part.
        const std::size_t k = trial % 2 == 0 ? 0 : rng.index(1, n);
        const auto g = gen::block_dissipative(rng, n, k);
        try {
            (void)strict_contraction_check(g.q, xs);
        } catch (const StrictnessDisagreement&) {
            ++disagreements;
        }
        const auto w05 = norm_preserving_subspace(g.q, 0.5);
        const auto w20 = norm_preserving_subspace(g.q, 2.0);
        if (w05.dim != w20.dim || w05.dim != k) ++dim_mismatch;
        if (w05.dim == 0) continue;
        const auto m = static_cast<Eigen::Index>(n);
        Eigen::MatrixXd basis(m, static_cast<Eigen::Index>(w05.dim));
        for (std::size_t i = 0; i < w05.dim; ++i) basis.col(static_cast<Eigen::Index>(i)) = as_eigen(w05.vectors[i]);
        const Eigen::MatrixXd proj = basis * basis.transpose();
        for (double x : {0.3, 1.0, 3.0}) {
            const Eigen::MatrixXd moved = expm_oracle(g.q, x) * basis;
            residual = std::max(residual, (moved - proj * moved).norm());
        }
    }
    const bool ok = disagreements == 0 && dim_mismatch == 0 && residual <= 1e-9;
    return {ok, std::to_string(disagreements) + " disagreements, " + std::to_string(dim_mismatch) +
                    " subspace dimension mismatches (x=0.5 vs 2.0), invariance residual " + sci(residual) +
                    " (limit 1e-9)"};
}

struct Invocation {
    std::vector<std::string> args;
    int expected;
};

const std::vector<Invocation>& exit_fixtures() {
    static const std::vector<Invocation> fixtures{
        {{"constants", "--n-range", "1..12"}, 0},
        {{"verify", "--kind", "ftt1", "--n", "8", "--samples", "1000", "--seed", "42"}, 0},
        {{"verify", "--kind", "conv2", "--n", "9", "--samples", "500", "--seed", "3", "--format", "json"}, 0},
        {{"semigroup-norm", "--n", "3", "--alpha", "-0.7071067811865476", "--grid", "0:10:21"}, 0},
        {{"threshold", "--n-range", "2..10"}, 0},
        {{"probe-gftt2", "--n-range", "1..3", "--seed", "7", "--samples", "2000", "--format", "json"}, 0},
        {{"probe-gftt2", "--samples", "0"}, 0},
        {{"verify", "--kind", "ftt2", "--n", "6", "--samples", "10", "--constant-scale", "1.001"}, 1},
        {{"verify", "--kind", "conv1", "--n", "6", "--samples", "10", "--constant-scale", "0.999"}, 1},
        {{"bessel-sweep", "--n-range", "1..20", "--grid", "0:20:100"}, 1},
        {{"semigroup-norm", "--n", "2", "--alpha", "1e6", "--grid", "0:10:3"}, 3},
        {{}, 2},
        {{"verify", "--kind", "ftt7"}, 2},
        {{"verify", "--kind", "ftt1", "--tol", "0"}, 2},
        {{"semigroup-norm", "--grid", "0:10:1"}, 2},
        {{"constants", "--n-range", "4..2"}, 2},
        {{"threshold", "--format", "yaml"}, 2},
        {{"bessel-sweep", "--unknown-flag"}, 2},
    };
    return fixtures;
}

std::pair<int, std::string> in_process(const std::vector<std::string>& args) {
    std::vector<std::string> full{"ftt"};
    full.insert(full.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code = ftt::cli::run(full, out, err);
    return {code, out.str()};
}

std::pair<int, std::string> subprocess(const std::string& binary, const std::vector<std::string>& args) {
    std::string cmd = "'" + binary + "'";
    for (const auto& a : args) cmd += " '" + a + "'";
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_determinism(const std::string& binary) {
    std::size_t wrong_code = 0;
    std::size_t nondeterministic = 0;
    std::string first_problem;
    for (const auto& f : exit_fixtures()) {
        const auto a = in_process(f.args);
        const auto b = in_process(f.args);
        std::string label = f.args.empty() ? "<no args>" : f.args.front();
        if (a.first != f.expected) {
            ++wrong_code;
            if (first_problem.empty())
                first_problem = label + " exited " + std::to_string(a.first) + ", expected " + std::to_string(f.expected);
        }
        if (a.second != b.second) ++nondeterministic;
        if (!binary.empty()) {
            const auto p = subprocess(binary, f.args);
            const auto q = subprocess(binary, f.args);
            if (p.first != f.expected) {
                ++wrong_code;
                if (first_problem.empty())
                    first_problem = "binary " + label + " exited " + std::to_string(p.first);
            }
            if (p.second != q.second || p.second != a.second) ++nondeterministic;
        }
    }
    std::string detail = std::to_string(exit_fixtures().size()) + " fixtures (" +
                         (binary.empty() ? "in process only" : "in process and via the ftt binary") + "), " +
                         std::to_string(wrong_code) + " wrong exit codes, " + std::to_string(nondeterministic) +
                         " byte differences";
    if (!first_problem.empty()) detail += "; " + first_problem;
    return {wrong_code == 0 && nondeterministic == 0, detail};
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    const std::string binary = argc > 2 ? argv[2] : "";

    const std::vector<Criterion> criteria{
        {"determinant identities", determinant_identities},
        {"zero sets", zero_sets},
        {"dissipativity thresholds", dissipativity_thresholds},
        {"ftt inequalities", ftt_inequalities},
        {"matrix exponential", matrix_exponential},
        {"lumer-phillips", lumer_phillips},
        {"generalized inequality", generalized_inequality},
        {"exact gftt2 bound", exact_gftt2},
        {"bessel bounds", bessel_bounds},
        {"threshold exploration", threshold_exploration},
        {"strict lumer-phillips", strict_lumer_phillips},
        {"cli determinism", [&] { return cli_determinism(binary); }},
    };

    std::vector<std::size_t> selected;
    if (which == "all") {
        for (std::size_t i = 0; i < criteria.size(); ++i) selected.push_back(i);
    } else {
        std::size_t k = 0;
        try {
            k = std::stoul(which);
        } catch (const std::exception&) {
            k = 0;
        }
        if (k < 1 || k > criteria.size()) {
            std::cerr << "usage: acceptance <1-12|all> [path-to-ftt]\n";
            return 2;
        }
        selected.push_back(k - 1);
    }

    bool all = true;
    for (std::size_t i : selected) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        all = all && o.pass;
        char id[8];
        std::snprintf(id, sizeof(id), "c%02zu", i + 1);
        std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << criteria[i].name << ": " << o.detail << '\n';
    }
    return all ? 0 : 1;
}
