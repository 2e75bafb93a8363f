#include <doctest.h>

#include "walks/oracle.hpp"

using namespace walks;

namespace {

DenseGraph path_ab() {
    DenseGraph g(2, Mode::Undirected);
    g.at(0, 1) = g.at(1, 0) = 1;
    return g;
}

DenseGraph triangle() {
    DenseGraph g(3, Mode::Undirected);
    g.at(0, 1) = g.at(1, 0) = 1;
    g.at(1, 2) = g.at(2, 1) = 1;
    g.at(0, 2) = g.at(2, 0) = 1;
    return g;
}

}  // namespace

TEST_CASE("forced walk on a path") {
    auto d = exact_distribution(path_ab(), 0, 2);
    REQUIRE(d.prob.size() == 1);
    CHECK(d.prob.at({0, 1, 0}) == Rational(1));
    CHECK(d.fail_mass == 0);
}

TEST_CASE("triangle at t=2 gives four quarter-probability walks") {
    auto d = exact_distribution(triangle(), 0, 2);
    REQUIRE(d.prob.size() == 4);
    for (const auto& [w, p] : d.prob) CHECK(p == Rational(1, 4));
    CHECK(d.total() == 1);
}

TEST_CASE("multigraph edge weighting") {
    DenseGraph g(3, Mode::Undirected);
    g.at(0, 1) = g.at(1, 0) = 2;
    g.at(0, 2) = g.at(2, 0) = 1;
    auto d = exact_distribution(g, 0, 1);
    CHECK(d.prob.at({0, 1}) == Rational(2, 3));
    CHECK(d.prob.at({0, 2}) == Rational(1, 3));
}

TEST_CASE("distribution sums to one on random instances") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        uint32_t n = 2 + (uint32_t)rng.below(5);
        DenseGraph g(n, Mode::Undirected);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v)
                if (u < v && rng.below(2)) g.at(u, v) = g.at(v, u) = 1 + (int64_t)rng.below(3);
        if (g.degree_total(0) == 0) continue;
        auto d = exact_distribution(g, 0, 3);
        CHECK(d.total() == 1);
    }
}

TEST_CASE("dead ends surface as fail mass") {
    DenseGraph g(3, Mode::Directed);
    g.at(0, 1) = 1;
    g.at(0, 2) = 1;
    g.at(1, 0) = 1;  // vertex 2 is a dead end
    auto d = exact_distribution(g, 0, 2);
    CHECK(d.fail_mass == Rational(1, 2));
    CHECK(d.total() == 1);
}

TEST_CASE("guard rejects oversized instances") {
    DenseGraph g(12, Mode::Undirected);
    for (VertexId u = 0; u < 12; ++u)
        for (VertexId v = 0; v < 12; ++v)
            if (u != v) g.at(u, v) = 1;
    CHECK_THROWS(exact_distribution(g, 0, 10, 1000000));
}

TEST_CASE("endpoint marginal basics") {
    SUBCASE("t = 0 is a point mass") {
        auto m = endpoint_marginal(triangle(), 1, 0);
        CHECK(m.p[1] == 1);
        CHECK(m.p[0] == 0);
    }
    SUBCASE("odd steps on a bipartite graph sit on the far side") {
        DenseGraph g(4, Mode::Undirected);  // square 0-1-2-3-0
        g.at(0, 1) = g.at(1, 0) = 1;
        g.at(1, 2) = g.at(2, 1) = 1;
        g.at(2, 3) = g.at(3, 2) = 1;
        g.at(3, 0) = g.at(0, 3) = 1;
        auto m = endpoint_marginal(g, 0, 3);
        CHECK(m.p[0] == 0);
        CHECK(m.p[2] == 0);
        CHECK(m.p[1] + m.p[3] == 1);
    }
}

TEST_CASE("endpoint marginal equals the enumeration marginal exactly") {
    Rng rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        uint32_t n = 2 + (uint32_t)rng.below(5);
        DenseGraph g(n, rng.below(2) ? Mode::Directed : Mode::Undirected);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v)
                if (rng.below(2)) {
                    int64_t w = 1 + (int64_t)rng.below(2);
                    if (g.mode == Mode::Undirected) {
                        g.at(std::min(u, v), std::max(u, v)) = w;
                        g.at(std::max(u, v), std::min(u, v)) = w;
                    } else {
                        g.at(u, v) = w;
                    }
                }
        uint32_t t = 1 + (uint32_t)rng.below(4);
        auto enumd = exact_distribution(g, 0, t);
        auto marg = endpoint_marginal(g, 0, t);
        std::vector<Rational> from_enum(n, Rational(0));
        for (const auto& [w, p] : enumd.prob) from_enum[w.back()] += p;
        for (VertexId v = 0; v < n; ++v) CHECK(from_enum[v] == marg.p[v]);
        CHECK(enumd.fail_mass == marg.fail_mass);
    }
}

TEST_CASE("empirical l1 of a perfect sampler shrinks into its error bar") {
    auto g = triangle();
    auto exact = exact_distribution(g, 0, 3);
    WalkTally tally;
    Rng rng(47);
    for (int i = 0; i < 200000; ++i) tally.add(sample_walk_exact(g, 0, 3, rng));
    auto est = empirical_l1(tally, exact);
    CHECK(est.value <= 3.0 * est.sigma);
}

TEST_CASE("all-fail sample sits at maximal distance") {
    auto exact = exact_distribution(triangle(), 0, 2);
    WalkTally tally;
    for (int i = 0; i < 100; ++i) tally.add(Walk::fail());
    auto est = empirical_l1(tally, exact);
    CHECK(est.value == doctest::Approx(2.0));
}

TEST_CASE("loopy graphs weight the diagonal correctly") {
    // one undirected edge plus a self-loop at vertex 0
    DenseGraph g(2, Mode::Undirected);
    g.at(0, 1) = g.at(1, 0) = 1;
    g.at(0, 0) = 1;
    CHECK(g.degree_total(0) == 3);  // loop counts twice
    auto d = exact_distribution(g, 0, 2);
    CHECK(d.prob.at({0, 0, 0}) == Rational(4, 9));
    CHECK(d.prob.at({0, 0, 1}) == Rational(2, 9));
    CHECK(d.prob.at({0, 1, 0}) == Rational(1, 3));
    CHECK(d.total() == 1);
}
