#pragma once

#include <cstdint>

namespace ftt {

/// cos(p*pi/q) for integers p, q > 0, with the argument reduced exactly to
/// [0, pi/4] before calling std::cos/std::sin. cos(pi/2) is exactly 0.
[[nodiscard]] double cos_pi(std::int64_t p, std::int64_t q);

}  // namespace ftt
