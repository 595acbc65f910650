#include "ftt/trig.hpp"

#include <cmath>
#include <numbers>

#include "ftt/error.hpp"

namespace ftt {

double cos_pi(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw DomainError("cos_pi: denominator must be positive");
    p %= 2 * q;
    if (p < 0) p += 2 * q;
    if (p > q) p = 2 * q - p;  // cos(2pi - t) = cos(t)
    double sign = 1.0;
    if (2 * p > q) {  // cos(pi - t) = -cos(t)
        p = q - p;
        sign = -1.0;
    }
    if (3 * p == q) return sign * 0.5;  // cos(pi/3)
    const double pi = std::numbers::pi;
    if (4 * p <= q) return sign * std::cos(pi * static_cast<double>(p) / static_cast<double>(q));
    // pi/4 < t <= pi/2: cos(t) = sin(pi/2 - t), and pi/2 - t = (q - 2p) pi / (2q) exactly.
    return sign * std::sin(pi * static_cast<double>(q - 2 * p) / static_cast<double>(2 * q));
}

}  // namespace ftt
