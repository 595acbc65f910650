#include "ftt/real_vector.hpp"

#include <cmath>
#include <numeric>

#include "ftt/error.hpp"

namespace ftt {

RealVector::RealVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("RealVector: dimension must be at least 1");
    for (double v : entries_) {
        if (!std::isfinite(v)) throw DomainError("RealVector: entries must be finite");
    }
}

RealVector::RealVector(std::initializer_list<double> entries)
    : RealVector(std::vector<double>(entries)) {}

RealVector RealVector::unit(std::size_t n, std::size_t i) {
    if (i >= n) throw DomainError("RealVector::unit: index out of range");
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    return RealVector(std::move(e));
}

double RealVector::squared_norm() const noexcept {
    return std::transform_reduce(entries_.begin(), entries_.end(), entries_.begin(), 0.0);
}

double RealVector::norm() const noexcept { return std::sqrt(squared_norm()); }

RealVector RealVector::scaled(double c) const {
    std::vector<double> out(entries_);
    for (double& v : out) v *= c;
    return RealVector(std::move(out));
}

}  // namespace ftt
