#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ftt {

/// Coefficient vector (a_1, ..., a_n). Non-empty, all entries finite.
class RealVector {
public:
    explicit RealVector(std::vector<double> entries);
    RealVector(std::initializer_list<double> entries);

    /// The i-th standard basis vector of length n (0-based index).
    static RealVector unit(std::size_t n, std::size_t i);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return entries_[i]; }
    [[nodiscard]] std::span<const double> entries() const noexcept { return entries_; }
    [[nodiscard]] const std::vector<double>& to_vector() const noexcept { return entries_; }

    [[nodiscard]] double squared_norm() const noexcept;
    [[nodiscard]] double norm() const noexcept;
    [[nodiscard]] RealVector scaled(double c) const;

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const RealVector&, const RealVector&) = default;

private:
    std::vector<double> entries_;
};

}  // namespace ftt
