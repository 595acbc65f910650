#pragma once

#include <cstddef>
#include <vector>

#include "ftt/real_vector.hpp"

namespace ftt {

enum class JordanVariant { Standard, Modified };

/// Which of J and -J is tested for dissipativity.
enum class Direction { PlusJ, MinusJ };

/// Jordan block J_n(alpha): alpha on the diagonal, 1 on the superdiagonal.
/// The Modified variant has alpha - 1/2 in its last diagonal entry.
class UpperBidiagonal {
public:
    UpperBidiagonal(std::size_t n, double alpha, JordanVariant variant = JordanVariant::Standard);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] JordanVariant variant() const noexcept { return variant_; }

    /// Diagonal entry i (0-based).
    [[nodiscard]] double diagonal(std::size_t i) const noexcept {
        return (variant_ == JordanVariant::Modified && i + 1 == n_) ? alpha_ - 0.5 : alpha_;
    }

private:
    std::size_t n_;
    double alpha_;
    JordanVariant variant_;
};

/// Symmetric tridiagonal matrix stored as its diagonal and off-diagonal.
class SymTridiagonal {
public:
    SymTridiagonal(std::vector<double> diag, std::vector<double> offdiag);

    [[nodiscard]] std::size_t size() const noexcept { return diag_.size(); }
    [[nodiscard]] const std::vector<double>& diag() const noexcept { return diag_; }
    [[nodiscard]] const std::vector<double>& offdiag() const noexcept { return offdiag_; }

    friend bool operator==(const SymTridiagonal&, const SymTridiagonal&) = default;

private:
    std::vector<double> diag_;
    std::vector<double> offdiag_;
};

struct DissipativityReport {
    double threshold;       // closed-form boundary alpha for J (PlusJ direction)
    bool is_dissipative;    // max_eigenvalue <= tol
    double max_eigenvalue;  // of J + J^T
    RealVector witness;     // unit eigenvector for max_eigenvalue
};

/// J + J^T.
[[nodiscard]] SymTridiagonal symmetrize(const UpperBidiagonal& j);

/// Determinant by the continuant recurrence b_k = d_k b_{k-1} - e_{k-1}^2 b_{k-2}.
[[nodiscard]] double det_recurrence(const SymTridiagonal& t) noexcept;

/// Number of eigenvalues of t strictly below lambda (Sturm sequence sign count).
[[nodiscard]] std::size_t sturm_count(const SymTridiagonal& t, double lambda) noexcept;

/// All eigenvalues, ascending, each bracketed by bisection to width <= tol.
/// Throws ConvergenceError if a bracket cannot shrink to tol.
[[nodiscard]] std::vector<double> eig_sturm(const SymTridiagonal& t, double tol = 1e-13);

/// Unit eigenvector for an eigenvalue approximation lambda (within tol of the
/// spectrum), with ||T v - lambda v|| <= 10 tol. The largest-magnitude entry is positive.
[[nodiscard]] RealVector eigvec_inverse_iteration(const SymTridiagonal& t, double lambda,
                                                  double tol = 1e-12);

/// <J a, a> from the scalar formula
///   alpha sum a_k^2 + sum_{k>=2} a_k a_{k-1}   (minus a_n^2 / 2 for Modified).
[[nodiscard]] double quad_form(const UpperBidiagonal& j, const RealVector& a);

/// Closed-form alpha at which the dissipativity of +J or -J switches.
/// PlusJ: dissipative iff alpha <= threshold. MinusJ: iff alpha >= threshold.
[[nodiscard]] double dissipativity_threshold(std::size_t n, JordanVariant variant,
                                             Direction direction);

[[nodiscard]] DissipativityReport check_dissipative(const UpperBidiagonal& j, double tol = 1e-10);

}  // namespace ftt
