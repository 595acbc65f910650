#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "ftt/real_vector.hpp"

namespace ftt {

/// Seeded uniform draws that reproduce bit-for-bit on every platform.
///
/// Raw words come from std::mt19937_64 (fully specified by the standard); a
/// word w maps to u = (w >> 11) * 2^-53 in [0, 1). The standard distributions
/// are avoided because their algorithms are implementation-defined.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [0, 1).
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform integer on [lo, hi].
    std::size_t index(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(unit() * static_cast<double>(hi - lo + 1));
    }

    /// Entries i.i.d. uniform on [-1, 1).
    RealVector vector(std::size_t n);

private:
    std::mt19937_64 gen_;
};

}  // namespace ftt
