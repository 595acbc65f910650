#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ftt/error.hpp"
#include "ftt/inequalities.hpp"
#include "ftt/real_vector.hpp"
#include "ftt/tridiagonal.hpp"

/// Matrix semigroups exp(Qx), contraction checks, and the inequalities they generate.
namespace ftt {

using DenseSquareMatrix = Eigen::MatrixXd;

[[nodiscard]] DenseSquareMatrix to_dense(const UpperBidiagonal& j);

/// exp(Q x) by scaling and squaring around a truncated Taylor series.
/// The argument is scaled until ||Qx||_1 / 2^s <= 1/2 and the series runs until
/// a term drops below min(tol, 1e-18). Throws OverflowError on non-finite results.
[[nodiscard]] DenseSquareMatrix expm_oracle(const DenseSquareMatrix& q, double x, double tol = 1e-15);

/// exp(J_n(alpha) x) = e^{alpha x} T, with T upper triangular Toeplitz, T(i, i+k) = x^k / k!.
[[nodiscard]] DenseSquareMatrix exp_jordan_closed(std::size_t n, double alpha, double x);

/// Largest singular value, by power iteration on M^T M.
///
/// Two deterministic starts are used (normalized all-ones and a fixed
/// pseudorandom vector) and the larger converged estimate is returned, so a
/// start orthogonal to the top singular vector cannot hide it.
[[nodiscard]] double operator_norm(const DenseSquareMatrix& m, double tol = 1e-13);

/// Largest eigenvalue of Q + Q^T.
[[nodiscard]] double max_symmetric_eigenvalue(const DenseSquareMatrix& q);

struct NormCurve {
    std::vector<double> xs;
    std::vector<double> norms;
};

/// x = 0 followed by 64 log-spaced points on [1e-3, 10].
[[nodiscard]] std::vector<double> default_contraction_grid();

/// ||exp(Q x)||_op along xs. The caller compares against 1 + tol.
[[nodiscard]] NormCurve contraction_check(const DenseSquareMatrix& q, std::span<const double> xs,
                                          double tol = 1e-10);

/// sum_{j=0}^{n-1} ( sum_{k=0}^{j} x^k/k! a_{n-j+k} )^2
[[nodiscard]] double gftt_lhs(const RealVector& a, double x);

/// lhs = gftt_lhs, rhs = exp(2x cos(pi/(n+1))) |a|^2, margin = rhs - lhs.
[[nodiscard]] CheckReport gftt_check(const RealVector& a, double x, double tol = 1e-10);

/// sum_{j=1}^{n-1} ( sum_{k=0}^{j} x^k/k! a_{n-j+k} )^2 + e^{-x} a_n^2, the displayed form.
[[nodiscard]] double gftt2_stated_lhs(const RealVector& a, double x);

/// exp(2x cos(2pi/(2n+1))) |a|^2
[[nodiscard]] double gftt2_rhs(const RealVector& a, double x);

/// ||exp(J~_n(alpha) x) a||^2 through the series oracle.
[[nodiscard]] double gftt2_exact_lhs(const RealVector& a, double alpha, double x,
                                     double tol = 1e-15);

struct Gftt2ProbeReport {
    std::size_t n;
    std::size_t samples;
    std::uint64_t seed;
    double alpha;  // -cos(2pi/(2n+1))
    double x_max;  // x drawn uniform on [0, x_max]

    // (i) max over samples of gftt2_stated_lhs - gftt2_rhs (> 0 means the displayed form fails).
    double max_violation;
    RealVector violation_a;
    double violation_x;

    // (ii) max over samples of |gftt2_stated_lhs - e^{-2 alpha x} gftt2_exact_lhs|.
    double max_discrepancy;
    RealVector discrepancy_a;
    double discrepancy_x;
};

inline constexpr double kProbeXMax = 5.0;

/// Compares the displayed gftt2 form with the exact semigroup quantity on
/// seeded (a, x): a uniform on [-1,1]^n, x uniform on [0, x_max].
[[nodiscard]] Gftt2ProbeReport gftt2_discrepancy_probe(std::size_t n, std::size_t samples,
                                                      std::uint64_t seed,
                                                      double x_max = kProbeXMax);

struct SubspaceBasis {
    std::vector<RealVector> vectors;  // orthonormal
    std::size_t dim;
};

/// Orthonormal basis of ker(I - exp(Q^T x) exp(Q x)), the vectors whose norm
/// exp(Qx) preserves. Recomputed at 2x; a dimension change throws
/// InvariantViolation. Requires Q dissipative within tol and x > 0.
[[nodiscard]] SubspaceBasis norm_preserving_subspace(const DenseSquareMatrix& q, double x,
                                                     double tol = 1e-8);

struct StrictContractionReport {
    double max_symmetric_eigenvalue;
    bool strict_by_form;  // max eigenvalue of Q + Q^T < -tol
    NormCurve curve;
    double max_norm;
    bool strict_by_norm;  // every norm on the grid <= 1 - tol
    bool agree;
};

/// Raised by strict_contraction_check when the two classifications differ.
class StrictnessDisagreement : public InvariantViolation {
public:
    explicit StrictnessDisagreement(StrictContractionReport report);
    [[nodiscard]] const StrictContractionReport& report() const noexcept { return report_; }

private:
    StrictContractionReport report_;
};

/// Classifies Q as strictly dissipative by its symmetric part and, independently,
/// as strictly contractive by ||exp(Qx)|| on xs (each in (0, 50]).
[[nodiscard]] StrictContractionReport strict_contraction_check(const DenseSquareMatrix& q,
                                                               std::span<const double> xs,
                                                               double tol = 1e-10);

}  // namespace ftt
