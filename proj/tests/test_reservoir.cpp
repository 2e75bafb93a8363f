#include <doctest.h>

#include <map>
#include <set>

#include "walks/reservoir.hpp"

using namespace walks;

TEST_CASE("wor holds a single fed item") {
    Rng rng(1);
    ReservoirWOR<int> r(1);
    r.feed(42, rng);
    REQUIRE(r.items().size() == 1);
    CHECK(r.items()[0] == 42);
}

TEST_CASE("wor capacity 1 over two items is a fair coin") {
    Rng rng(7);
    int first = 0;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        ReservoirWOR<int> r(1);
        r.feed(1, rng);
        r.feed(2, rng);
        if (r.items()[0] == 1) ++first;
    }
    // 5 sigma around 1/2: sigma = sqrt(0.25/N)
    double p = (double)first / trials;
    CHECK(std::abs(p - 0.5) < 5.0 * std::sqrt(0.25 / trials));
}

TEST_CASE("wor capacity 2 over 5 items: all 10 subsets uniform") {
    Rng rng(11);
    std::map<std::pair<int, int>, int> counts;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        ReservoirWOR<int> r(2);
        for (int x = 0; x < 5; ++x) r.feed(x, rng);
        int a = r.items()[0], b = r.items()[1];
        if (a > b) std::swap(a, b);
        ++counts[{a, b}];
    }
    REQUIRE(counts.size() == 10);
    const double expect = trials / 10.0;
    const double sigma = std::sqrt(trials * 0.1 * 0.9);
    for (const auto& [k, c] : counts) CHECK(std::abs(c - expect) < 5.0 * sigma);
}

TEST_CASE("wor shuffle makes the stored order exchangeable") {
    // Without the shuffle, a stream shorter than the capacity stays in
    // arrival order; the first slot must be uniform after shuffle().
    Rng rng(13);
    std::map<int, int> first;
    const int trials = 90000;
    for (int i = 0; i < trials; ++i) {
        ReservoirWOR<int> r(3);
        for (int x = 0; x < 3; ++x) r.feed(x, rng);
        r.shuffle(rng);
        ++first[r.items()[0]];
    }
    const double expect = trials / 3.0;
    const double sigma = std::sqrt(trials * (1.0 / 3) * (2.0 / 3));
    for (const auto& [k, c] : first) CHECK(std::abs(c - expect) < 5.0 * sigma);
}

TEST_CASE("wr cells are independent uniform samples") {
    Rng rng(17);
    const int trials = 60000;
    std::map<int, int> counts;
    int both_equal = 0;
    for (int i = 0; i < trials; ++i) {
        ReservoirWR<int> r(2);
        for (int x = 0; x < 3; ++x) r.feed(x, rng);
        ++counts[r.cell(0)];
        if (r.cell(0) == r.cell(1)) ++both_equal;
    }
    const double expect = trials / 3.0;
    const double sigma = std::sqrt(trials * (1.0 / 3) * (2.0 / 3));
    for (const auto& [k, c] : counts) CHECK(std::abs(c - expect) < 5.0 * sigma);
    // independence: P[cell0 == cell1] = 1/3
    CHECK(std::abs(both_equal - expect) < 5.0 * sigma);
}

TEST_CASE("wr remembers how much it has seen") {
    Rng rng(19);
    ReservoirWR<int> r(4);
    CHECK(r.empty());
    for (int x = 0; x < 10; ++x) r.feed(x, rng);
    CHECK(r.seen() == 10);
    CHECK_FALSE(r.empty());
}
