#pragma once

#include <cstddef>
#include <string_view>

#include "ftt/real_vector.hpp"
#include "ftt/tridiagonal.hpp"

namespace ftt {

/// The four discrete Wirtinger-type inequalities.
///   Ftt1:  sum_{k=1}^{n+1} (a_k - a_{k-1})^2 >= 2(1 - cos(pi/(n+1)))   |a|^2,  a_0 = a_{n+1} = 0
///   Ftt2:  sum_{k=1}^{n}   (a_k - a_{k-1})^2 >= 2(1 - cos(pi/(2n+1)))  |a|^2,  a_0 = 0
///   Conv1: sum_{k=1}^{n+1} (a_k - a_{k-1})^2 <= 2(1 + cos(pi/(n+1)))   |a|^2,  a_0 = a_{n+1} = 0
///   Conv2: sum_{k=1}^{n}   (a_k - a_{k-1})^2 <= 2(1 + cos(2pi/(2n+1))) |a|^2,  a_0 = 0
enum class InequalityKind { Ftt1, Ftt2, Conv1, Conv2 };

inline constexpr InequalityKind kAllKinds[] = {InequalityKind::Ftt1, InequalityKind::Ftt2,
                                               InequalityKind::Conv1, InequalityKind::Conv2};

[[nodiscard]] std::string_view to_string(InequalityKind kind) noexcept;
/// Case-insensitive; throws DomainError on an unknown name.
[[nodiscard]] InequalityKind parse_kind(std::string_view name);

/// True for the lower bounds (Ftt1, Ftt2).
[[nodiscard]] bool is_lower_bound(InequalityKind kind) noexcept;

struct CheckReport {
    double lhs;
    double rhs;
    double margin;  // oriented slack: >= 0 means the inequality holds exactly
    bool holds;     // margin >= -tol
};

/// Left-hand difference sum with the kind's zero padding.
[[nodiscard]] double difference_energy(const RealVector& a, InequalityKind kind) noexcept;

[[nodiscard]] double sharp_constant(InequalityKind kind, std::size_t n);

/// Jordan block whose (+J or -J) dissipativity boundary realizes the kind's
/// sharp constant. Ftt2/Conv2 are related to it through the alternating sign
/// change a_k -> (-1)^k a_k.
struct BoundaryBlock {
    JordanVariant variant;
    Direction direction;
    bool alternate_signs;
};
[[nodiscard]] BoundaryBlock boundary_block(InequalityKind kind) noexcept;

/// Threshold alpha of the boundary block for this kind and n.
[[nodiscard]] double threshold_alpha(InequalityKind kind, std::size_t n);

[[nodiscard]] CheckReport verify(InequalityKind kind, const RealVector& a, double tol = 1e-10);

/// Same as verify() with an explicit constant in place of the sharp one.
[[nodiscard]] CheckReport verify_with_constant(InequalityKind kind, const RealVector& a,
                                               double constant, double tol = 1e-10);

/// Unit vector attaining equality, from inverse iteration on the boundary block.
[[nodiscard]] RealVector extremal_vector(InequalityKind kind, std::size_t n);

}  // namespace ftt
