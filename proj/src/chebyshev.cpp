#include "ftt/chebyshev.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "ftt/error.hpp"
#include "ftt/trig.hpp"

namespace ftt::chebyshev {

namespace {

struct Pair {
    double prev;  // U_{n-1}
    double curr;  // U_n
};

Pair recurrence(std::size_t n, double x) noexcept {
    double prev = 0.0;
    double curr = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double next = 2.0 * x * curr - prev;
        prev = curr;
        curr = next;
    }
    return {prev, curr};
}

void require_positive(std::size_t n, const char* op) {
    if (n == 0) throw DomainError(std::string(op) + ": n must be at least 1");
}

}  // namespace

double u_eval(std::size_t n, double x) noexcept { return recurrence(n, x).curr; }

std::vector<double> u_zeros(std::size_t n) {
    if (n == 0) throw DomainError("u_zeros: U_0 has an empty zero set");
    const auto q = static_cast<std::int64_t>(n + 1);
    std::vector<double> zeros;
    zeros.reserve(n);
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k) zeros.push_back(cos_pi(k, q));
    return zeros;
}

double u_diff_eval(std::size_t n, double x) {
    require_positive(n, "u_diff_eval");
    const auto [prev, curr] = recurrence(n, x);
    return curr - prev;
}

std::vector<double> u_diff_zeros(std::size_t n) {
    require_positive(n, "u_diff_zeros");
    const auto q = static_cast<std::int64_t>(2 * n + 1);
    std::vector<double> zeros;
    zeros.reserve(n);
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k) {
        const double c = cos_pi(k, q);
        zeros.push_back(k % 2 == 1 ? c : -c);
    }
    std::sort(zeros.begin(), zeros.end(), std::greater<>());
    return zeros;
}

}  // namespace ftt::chebyshev
