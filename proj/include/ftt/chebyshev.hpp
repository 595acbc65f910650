#pragma once

#include <cstddef>
#include <vector>

/// Chebyshev polynomials of the second kind U_n and the difference U_n - U_{n-1}.
///
/// Evaluation runs the forward recurrence U_{-1} = 0, U_0 = 1,
/// U_k = 2x U_{k-1} - U_{k-2}. Zero sets come from their closed forms:
///
///   U_n:           cos(k pi / (n+1)),              k = 1..n
///   U_n - U_{n-1}: (-1)^{k+1} cos(k pi / (2n+1)),  k = 1..n
///
/// Both zero lists are sorted descending.
namespace ftt::chebyshev {

[[nodiscard]] double u_eval(std::size_t n, double x) noexcept;

/// Throws DomainError for n = 0 (U_0 has no zeros).
[[nodiscard]] std::vector<double> u_zeros(std::size_t n);

/// U_n(x) - U_{n-1}(x). Requires n >= 1.
[[nodiscard]] double u_diff_eval(std::size_t n, double x);

/// Requires n >= 1.
[[nodiscard]] std::vector<double> u_diff_zeros(std::size_t n);

}  // namespace ftt::chebyshev
