#include "ftt/inequalities.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "ftt/error.hpp"
#include "ftt/trig.hpp"

namespace ftt {

std::string_view to_string(InequalityKind kind) noexcept {
    switch (kind) {
        case InequalityKind::Ftt1: return "ftt1";
        case InequalityKind::Ftt2: return "ftt2";
        case InequalityKind::Conv1: return "conv1";
        case InequalityKind::Conv2: return "conv2";
    }
    return "?";
}

InequalityKind parse_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (InequalityKind k : kAllKinds) {
        if (to_string(k) == lower) return k;
    }
    throw DomainError("unknown inequality kind '" + std::string(name) +
                      "' (expected ftt1, ftt2, conv1, conv2)");
}

bool is_lower_bound(InequalityKind kind) noexcept {
    return kind == InequalityKind::Ftt1 || kind == InequalityKind::Ftt2;
}

double difference_energy(const RealVector& a, InequalityKind kind) noexcept {
    const std::size_t n = a.size();
    double sum = a[0] * a[0];  // a_0 = 0
    for (std::size_t k = 1; k < n; ++k) {
        const double d = a[k] - a[k - 1];
        sum += d * d;
    }
    const bool both_ends = kind == InequalityKind::Ftt1 || kind == InequalityKind::Conv1;
    if (both_ends) sum += a[n - 1] * a[n - 1];  // a_{n+1} = 0
    return sum;
}

double sharp_constant(InequalityKind kind, std::size_t n) {
    if (n == 0) throw DomainError("sharp_constant: n must be at least 1");
    const auto m = static_cast<std::int64_t>(n);
    switch (kind) {
        case InequalityKind::Ftt1: return 2.0 * (1.0 - cos_pi(1, m + 1));
        case InequalityKind::Ftt2: return 2.0 * (1.0 - cos_pi(1, 2 * m + 1));
        case InequalityKind::Conv1: return 2.0 * (1.0 + cos_pi(1, m + 1));
        case InequalityKind::Conv2: return 2.0 * (1.0 + cos_pi(2, 2 * m + 1));
    }
    return 0.0;
}

BoundaryBlock boundary_block(InequalityKind kind) noexcept {
    switch (kind) {
        case InequalityKind::Ftt1: return {JordanVariant::Standard, Direction::PlusJ, false};
        case InequalityKind::Conv1: return {JordanVariant::Standard, Direction::MinusJ, false};
        case InequalityKind::Ftt2: return {JordanVariant::Modified, Direction::MinusJ, true};
        case InequalityKind::Conv2: return {JordanVariant::Modified, Direction::PlusJ, true};
    }
    return {JordanVariant::Standard, Direction::PlusJ, false};
}

double threshold_alpha(InequalityKind kind, std::size_t n) {
    const BoundaryBlock b = boundary_block(kind);
    return dissipativity_threshold(n, b.variant, b.direction);
}

CheckReport verify_with_constant(InequalityKind kind, const RealVector& a, double constant,
                                 double tol) {
    if (!(tol > 0.0)) throw DomainError("verify: tol must be positive");
    const double lhs = difference_energy(a, kind);
    const double rhs = constant * a.squared_norm();
    const double margin = is_lower_bound(kind) ? lhs - rhs : rhs - lhs;
    return CheckReport{lhs, rhs, margin, margin >= -tol};
}

CheckReport verify(InequalityKind kind, const RealVector& a, double tol) {
    return verify_with_constant(kind, a, sharp_constant(kind, a.size()), tol);
}

RealVector extremal_vector(InequalityKind kind, std::size_t n) {
    if (n == 0) throw DomainError("extremal_vector: n must be at least 1");
    const BoundaryBlock b = boundary_block(kind);
    const UpperBidiagonal j(n, threshold_alpha(kind, n), b.variant);
    const SymTridiagonal sym = symmetrize(j);
    // At the boundary the extreme eigenvalue of J + J^T is zero: the largest one
    // for +J, the smallest one for -J.
    const std::vector<double> eigs = eig_sturm(sym, 1e-14);
    const double target = b.direction == Direction::PlusJ ? eigs.back() : eigs.front();
    RealVector v = eigvec_inverse_iteration(sym, target, 1e-13);
    if (!b.alternate_signs) return v;
    std::vector<double> flipped = v.to_vector();
    for (std::size_t k = 1; k < n; k += 2) flipped[k] = -flipped[k];
    return RealVector(std::move(flipped));
}

}  // namespace ftt
