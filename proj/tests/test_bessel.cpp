#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ftt/bessel.hpp"
#include "ftt/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ftt;
using namespace ftt::bessel;
using std::numbers::pi;

TEST_CASE("i0_partial examples") {
    CHECK(i0_partial(1, 7.5) == 1.0);
    CHECK(i0_partial(2, 1.0) == 2.0);
    CHECK(i0_partial(3, 2.0) == 9.0);
    CHECK_THROWS_AS((void)i0_partial(0, 1.0), DomainError);
    CHECK_THROWS_AS((void)i0_partial(2, -1.0), DomainError);
    CHECK_THROWS_AS((void)i0_partial(400, 1e300), OverflowError);
}

TEST_CASE("i0_reference examples and the library Bessel function") {
    CHECK(i0_reference(0.0) == 1.0);
    CHECK(i0_reference(1e-3) - 1 == doctest::Approx(1e-6).epsilon(1e-6));
    CHECK(oracle::rel_err(i0_partial(40, 3.0), i0_reference(3.0)) <= 1e-12);
    for (double x : {0.1, 0.5, 1.0, 2.5, 5.0, 10.0, 20.0}) {
        CHECK(oracle::rel_err(i0_reference(x), std::cyl_bessel_i(0.0, 2 * x)) <= 1e-13);
    }
    CHECK_THROWS_AS((void)i0_reference(1e6), OverflowError);
}

TEST_CASE("partial sums increase in n toward I_0(2x)") {
    for (double x : {0.3, 1.0, 4.0, 9.0}) {
        const double limit = i0_reference(x);
        double prev = 0.0;
        for (std::size_t n = 1; n <= 80; ++n) {
            const double s = i0_partial(n, x);
            CHECK(s >= prev);
            CHECK(s <= limit * (1 + 1e-15));
            prev = s;
        }
        CHECK(oracle::rel_err(prev, limit) <= 1e-14);
    }
}

TEST_CASE("bound1 and bound2 examples") {
    CHECK(bound1(1, 4.2) == 1.0);
    CHECK(bound1(2, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(bound1(2, 0.0) == 1.0);
    CHECK(bound2(1, 3.3) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bound2(2, 1.0) == doctest::Approx(1 - std::exp(-1.0) + std::exp(2 * std::cos(2 * pi / 5))).epsilon(1e-15));
    for (std::size_t n = 1; n <= 10; ++n) CHECK(bound2(n, 0.0) == 1.0);
}

TEST_CASE("bound1 dominates the partial sums") {
    for (std::size_t n = 1; n <= 20; ++n) {
        for (int i = 0; i < 100; ++i) {
            const double x = 20.0 * i / 99.0;
            CHECK(i0_partial(n, x) <= bound1(n, x) * (1 + 1e-12));
        }
    }
}

TEST_CASE("n = 1: both bounds equal the partial sum") {
    for (int i = 0; i < 100; ++i) {
        const double x = 20.0 * i / 99.0;
        CHECK(std::abs(bound1(1, x) - i0_partial(1, x)) <= 1e-14);
        CHECK(std::abs(bound2(1, x) - i0_partial(1, x)) <= 1e-14);
    }
}

TEST_CASE("bound2 fails to dominate the partial sum on a middle range of x") {
    // 1 + x^2 > 1 - e^{-x} + e^{2x cos(2pi/5)} at x = 2, 3, 5.
    for (double x : {2.0, 3.0, 5.0}) CHECK(i0_partial(2, x) > bound2(2, x));
    for (double x : {0.0, 0.5, 1.0, 12.0}) CHECK(i0_partial(2, x) <= bound2(2, x));
}

TEST_CASE("bound2 is the smaller bound for large x") {
    for (std::size_t n = 2; n <= 10; ++n) CHECK(bound2(n, kDefaultSearchHi) < bound1(n, kDefaultSearchHi));
}

TEST_CASE("scaled_bound_gap has the sign of bound1 - bound2") {
    for (std::size_t n = 2; n <= 10; ++n) {
        for (int i = 1; i <= 60; ++i) {
            const double x = 0.5 * i;
            const double direct = bound1(n, x) - bound2(n, x);
            if (std::abs(direct) > 1e-9 * bound1(n, x)) CHECK((scaled_bound_gap(n, x) > 0) == (direct > 0));
        }
    }
    CHECK_THROWS_AS((void)scaled_bound_gap(1, 1.0), DomainError);
}

TEST_CASE("threshold_x0 preconditions") {
    CHECK_THROWS_AS((void)threshold_x0(1), DomainError);
    CHECK_THROWS_AS((void)threshold_x0(2, 0.0), DomainError);
    CHECK_THROWS_AS((void)threshold_x0(2, 1e-12, 1e-4), DomainError);
}

TEST_CASE("threshold_x0 finds one crossover for n = 2..10") {
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto r = threshold_x0(n, 1e-12);
        CHECK(r.status == ThresholdStatus::Found);
        CHECK(r.sign_changes == 1);
        CHECK(r.lo < r.x0);
        CHECK(r.x0 < r.hi);
        CHECK(r.hi - r.lo <= 1e-12);
        CHECK(scaled_bound_gap(n, r.lo) < 0);
        CHECK(scaled_bound_gap(n, r.hi) >= 0);
        CHECK(r.sign_pattern == "bound1 sharper below x0, bound2 sharper above");
    }
}

TEST_CASE("threshold_x0(2) agrees with bisection on the raw bound difference") {
    const auto r = threshold_x0(2, 1e-12);
    const double want = oracle::bisect([](double x) { return bound1(2, x) - bound2(2, x); }, r.crossings[0].first,
                                       r.crossings[0].second, 1e-14);
    CHECK(std::abs(r.x0 - want) <= 1e-10);
}

TEST_CASE("threshold_x0 reports a missing crossover instead of failing") {
    const auto r = threshold_x0(2, 1e-12, 0.5);
    CHECK(r.status == ThresholdStatus::NotFound);
    CHECK(r.sign_changes == 0);
    CHECK(std::isnan(r.x0));
}

TEST_CASE("threshold_x0(2) regression fixture") {
    const auto r = threshold_x0(2, 1e-12);
    CHECK(r.status == ThresholdStatus::Found);
    CHECK(r.x0 == kThresholdX0N2);
}
