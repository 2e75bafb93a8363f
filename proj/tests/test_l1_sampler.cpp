#include <doctest.h>

#include <cmath>

#include "walks/l1_sampler.hpp"
#include "walks/rng.hpp"

using namespace walks;

TEST_CASE("insert then delete restores the empty state exactly") {
    L1Sampler a(16, 0.5, 99), b(16, 0.5, 99);
    a.update(3, 7);
    a.update(3, -7);
    CHECK(a.cells() == b.cells());
    CHECK_FALSE(a.query().has_value());
}

TEST_CASE("zero vector fails, point mass always returns its index") {
    L1Sampler s(16, 0.5, 1);
    CHECK_FALSE(s.query().has_value());
    s.update(5, 5);
    auto out = s.query();
    REQUIRE(out.has_value());
    CHECK(*out == 5);
}

TEST_CASE("two equal coordinates split evenly across seeds") {
    const int trials = 20000;
    int first = 0, fails = 0;
    for (int i = 0; i < trials; ++i) {
        L1Sampler s(16, 0.5, derive_seed(7, i));
        s.update(2, 1);
        s.update(9, 1);
        auto out = s.query();
        if (!out) {
            ++fails;
            continue;
        }
        if (*out == 2) ++first;
    }
    double succ = trials - fails;
    double p = first / succ;
    CHECK(std::abs(p - 0.5) < 5.0 * std::sqrt(0.25 / succ));
    CHECK((double)fails / trials <= 0.5);  // configured bound, loose by design
}

TEST_CASE("skewed vector follows the l1 weights") {
    const int trials = 20000;
    int heavy = 0, fails = 0;
    for (int i = 0; i < trials; ++i) {
        L1Sampler s(16, 0.5, derive_seed(13, i));
        s.update(0, 8);
        s.update(5, 1);
        s.update(11, 1);
        auto out = s.query();
        if (!out) {
            ++fails;
            continue;
        }
        if (*out == 0) ++heavy;
    }
    double succ = trials - fails;
    double p = heavy / succ;
    CHECK(std::abs(p - 0.8) < 5.0 * std::sqrt(0.16 / succ));
}

TEST_CASE("negative coordinates weigh by absolute value") {
    const int trials = 20000;
    int neg = 0, fails = 0;
    for (int i = 0; i < trials; ++i) {
        L1Sampler s(8, 0.5, derive_seed(17, i));
        s.update(1, -6);
        s.update(4, 3);
        s.update(7, 3);
        auto out = s.query();
        if (!out) {
            ++fails;
            continue;
        }
        if (*out == 1) ++neg;
    }
    double succ = trials - fails;
    CHECK(std::abs(neg / succ - 0.5) < 5.0 * std::sqrt(0.25 / succ));
}

TEST_CASE("state is linear: permuted update order gives identical cells") {
    L1Sampler a(16, 0.5, 31), b(16, 0.5, 31);
    a.update(1, 4);
    a.update(9, -2);
    a.update(3, 1);
    a.update(9, 5);
    b.update(9, 5);
    b.update(3, 1);
    b.update(9, -2);
    b.update(1, 4);
    CHECK(a.cells() == b.cells());
    CHECK(a.query() == b.query());
}

TEST_CASE("rejects out-of-universe updates and bad parameters") {
    L1Sampler s(4, 0.5, 3);
    CHECK_THROWS(s.update(4, 1));
    CHECK_THROWS(L1Sampler(0, 0.5, 1));
    CHECK_THROWS(L1Sampler(4, 0.0, 1));
}
