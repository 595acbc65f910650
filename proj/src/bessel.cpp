#include "ftt/bessel.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "ftt/error.hpp"
#include "ftt/trig.hpp"

namespace ftt::bessel {

namespace {

void require_x(double x, const char* op) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError(std::string(op) + ": x must be finite and >= 0");
}

void require_n(std::size_t n, const char* op) {
    if (n == 0) throw DomainError(std::string(op) + ": n must be at least 1");
}

bool positive(double v) { return v >= 0.0; }

}  // namespace

double i0_partial(std::size_t n, double x) {
    require_n(n, "i0_partial");
    require_x(x, "i0_partial");
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double r = x / static_cast<double>(j);
        term *= r * r;
        sum += term;
    }
    if (!std::isfinite(sum)) throw OverflowError("i0_partial: partial sum overflows");
    return sum;
}

double i0_reference(double x, double tol) {
    require_x(x, "i0_reference");
    if (!(tol > 0.0)) throw DomainError("i0_reference: tol must be positive");
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t j = 1; j < 100000; ++j) {
        const double r = x / static_cast<double>(j);
        term *= r * r;
        if (term < tol * sum) break;
        sum += term;
        if (!std::isfinite(sum)) throw OverflowError("i0_reference: series overflows");
    }
    return sum;
}

double bound1(std::size_t n, double x) {
    require_n(n, "bound1");
    require_x(x, "bound1");
    return std::exp(2.0 * x * cos_pi(1, static_cast<std::int64_t>(n) + 1));
}

double bound2(std::size_t n, double x) {
    require_n(n, "bound2");
    require_x(x, "bound2");
    const auto m = static_cast<std::int64_t>(n);
    return -std::expm1(-x) + std::exp(2.0 * x * cos_pi(2, 2 * m + 1));
}

double scaled_bound_gap(std::size_t n, double x) {
    if (n < 2) throw DomainError("scaled_bound_gap: n must be at least 2");
    require_x(x, "scaled_bound_gap");
    // cos(pi/(n+1)) - cos(2pi/(2n+1)) as a product of sines, free of cancellation.
    const double m = static_cast<double>(n);
    const double pi = std::numbers::pi;
    const double half_sum = pi * (4.0 * m + 3.0) / (2.0 * (m + 1.0) * (2.0 * m + 1.0));
    const double half_diff = pi / (2.0 * (2.0 * m + 1.0) * (m + 1.0));
    const double rate_gap = 2.0 * std::sin(half_sum) * std::sin(half_diff);
    const double c2 = cos_pi(2, 2 * static_cast<std::int64_t>(n) + 1);
    return std::expm1(2.0 * rate_gap * x) + std::expm1(-x) * std::exp(-2.0 * c2 * x);
}

std::string to_string(ThresholdStatus status) {
    switch (status) {
        case ThresholdStatus::Found: return "found";
        case ThresholdStatus::NotFound: return "not_found";
        case ThresholdStatus::MultipleCrossings: return "multiple_crossings";
    }
    return "?";
}

ThresholdResult threshold_x0(std::size_t n, double tol, double search_hi) {
    if (n < 2) throw DomainError("threshold_x0: n must be at least 2 (the bounds coincide for n = 1)");
    if (!(tol > 0.0)) throw DomainError("threshold_x0: tol must be positive");
    if (!(search_hi > kScanLo) || !std::isfinite(search_hi))
        throw DomainError("threshold_x0: search_hi must exceed the scan start 1e-3");

    std::vector<double> grid(kScanPoints);
    const double llo = std::log(kScanLo);
    const double lhi = std::log(search_hi);
    for (std::size_t i = 0; i < kScanPoints; ++i)
        grid[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (kScanPoints - 1));
    grid.front() = kScanLo;
    grid.back() = search_hi;

    ThresholdResult r{n, ThresholdStatus::NotFound, std::numeric_limits<double>::quiet_NaN(),
                      std::numeric_limits<double>::quiet_NaN(),
                      std::numeric_limits<double>::quiet_NaN(), 0, {}, "", 0};
    bool prev = positive(scaled_bound_gap(n, grid[0]));
    const bool first = prev;
    for (std::size_t i = 1; i < kScanPoints; ++i) {
        const bool cur = positive(scaled_bound_gap(n, grid[i]));
        if (cur != prev) r.crossings.emplace_back(grid[i - 1], grid[i]);
        prev = cur;
    }
    r.sign_changes = r.crossings.size();

    auto sharper = [](bool gap_positive) { return gap_positive ? "bound2" : "bound1"; };
    if (r.crossings.empty()) {
        r.sign_pattern = std::string(sharper(first)) + " sharper on the whole scan";
        return r;
    }
    r.status = r.sign_changes == 1 ? ThresholdStatus::Found : ThresholdStatus::MultipleCrossings;
    r.sign_pattern = std::string(sharper(first)) + " sharper below x0, " + sharper(!first) +
                     " sharper above";

    auto [lo, hi] = r.crossings.front();
    const bool lo_sign = positive(scaled_bound_gap(n, lo));
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi || r.iterations > 2000)
            throw ConvergenceError("threshold_x0: bracket cannot shrink to tol", lo, hi);
        ++r.iterations;
        if (positive(scaled_bound_gap(n, mid)) == lo_sign) lo = mid;
        else hi = mid;
    }
    r.lo = lo;
    r.hi = hi;
    r.x0 = lo + 0.5 * (hi - lo);
    return r;
}

}  // namespace ftt::bessel
