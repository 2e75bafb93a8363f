#include <doctest.h>

#include <cmath>

#include "walks/capacity.hpp"

using namespace walks;

TEST_CASE("frozen examples from the formula") {
    // Evaluated independently with 40-digit arithmetic before freezing.
    Capacity a(16, 0.5);
    CHECK(a.delta == doctest::Approx(1.0 / 64.0));
    CHECK(a.q == doctest::Approx(3.5));
    CHECK(a.value == 31);

    Capacity b(64, 1.0 / 256.0);
    CHECK(b.delta == doctest::Approx(std::pow(2.0, -15)));
    CHECK(b.q == doctest::Approx(3.875));
    CHECK(b.value == 64);

    Capacity c(1, 1.0);
    CHECK(c.delta == doctest::Approx(0.5));
    CHECK(c.q == doctest::Approx(3.0));
    CHECK(c.value == 8);
}

TEST_CASE("failure bound holds across the grid") {
    const uint32_t ts[] = {1, 4, 16, 64, 256, 1024};
    for (uint32_t t : ts) {
        const double epss[] = {1.0, 0.1, std::pow(2.0, -std::sqrt((double)t))};
        for (double eps : epss) {
            Capacity cap(t, eps);
            CHECK(cap.value >= 1);
            CHECK(Capacity::failure_bound_holds(t, cap.value, cap.delta));
        }
    }
}

TEST_CASE("rejects bad parameters") {
    CHECK_THROWS(Capacity(0, 0.5));
    CHECK_THROWS(Capacity(4, 0.0));
    CHECK_THROWS(Capacity(4, -0.1));
    CHECK_THROWS(Capacity(4, 1.5));
}
