#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

/// Partial sums of I_0(2x) = sum_j x^{2j} / j!^2 and two exponential upper bounds.
namespace ftt::bessel {

/// sum_{j=0}^{n-1} x^{2j} / j!^2, each term from the previous by the ratio (x/j)^2.
[[nodiscard]] double i0_partial(std::size_t n, double x);

/// I_0(2x), summed until the next term drops below tol times the partial sum.
[[nodiscard]] double i0_reference(double x, double tol = 1e-17);

/// exp(2x cos(pi/(n+1)))
[[nodiscard]] double bound1(std::size_t n, double x);

/// 1 - e^{-x} + exp(2x cos(2pi/(2n+1)))
[[nodiscard]] double bound2(std::size_t n, double x);

/// Sign-exact rescaling of bound1 - bound2 used for the crossover search:
/// (bound1 - bound2) e^{-2x cos(2pi/(2n+1))}, evaluated with expm1 so it does not
/// cancel for large x. Requires n >= 2.
[[nodiscard]] double scaled_bound_gap(std::size_t n, double x);

enum class ThresholdStatus { Found, NotFound, MultipleCrossings };

[[nodiscard]] std::string to_string(ThresholdStatus status);

struct ThresholdResult {
    std::size_t n;
    ThresholdStatus status;
    double x0;  // midpoint of the refined bracket (NaN when not found)
    double lo;
    double hi;
    std::size_t sign_changes;                        // observed on the scan grid
    std::vector<std::pair<double, double>> crossings;  // scan-grid brackets, one per sign change
    std::string sign_pattern;
    int iterations;  // bisection steps on the first crossing
};

inline constexpr double kDefaultSearchHi = 100.0;
inline constexpr std::size_t kScanPoints = 512;
inline constexpr double kScanLo = 1e-3;

/// Scans a 512-point geometric grid on [1e-3, search_hi] for sign changes of
/// bound1 - bound2, then bisects the first one to width <= tol.
/// Requires n >= 2 (for n = 1 the two bounds coincide).
[[nodiscard]] ThresholdResult threshold_x0(std::size_t n, double tol = 1e-12,
                                           double search_hi = kDefaultSearchHi);

}  // namespace ftt::bessel
