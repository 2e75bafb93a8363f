#include <doctest.h>

#include "walks/batch.hpp"
#include "walks/gen.hpp"
#include "walks/oracle.hpp"
#include "walks/state.hpp"

using namespace walks;

namespace {

SketchState build(Algo algo, Mode mode, uint32_t n, uint32_t t, double eps,
                  const std::vector<Update>& ups, uint64_t seed) {
    RunConfig cfg{mode, Model::Turnstile, algo, n, t, eps, seed};
    return build_from_stream(cfg, ups);
}

}  // namespace

TEST_CASE("directed: cancellation leaves the surviving arc") {
    std::vector<Update> ups{{0, 1, 1}, {0, 1, -1}, {0, 2, 1}};
    int good = 0;
    for (int i = 0; i < 300; ++i) {
        SketchState st = build(Algo::TurnstileDirected, Mode::Directed, 3, 1, 0.25, ups,
                               derive_seed(3, i));
        Rng rng(i);
        Walk w = st.query(0, 1, rng);
        if (w.ok() && w.vertices[1] == 2) ++good;
    }
    CHECK((double)good / 300 >= 0.75);  // 1 - epsilon
}

TEST_CASE("directed: doubled then thinned cycle walks deterministically") {
    std::vector<Update> ups;
    for (int rep = 0; rep < 2; ++rep)
        for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}})
            ups.push_back({(VertexId)u, (VertexId)v, 1});
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}})
        ups.push_back({(VertexId)u, (VertexId)v, -1});
    int good = 0;
    for (int i = 0; i < 300; ++i) {
        SketchState st = build(Algo::TurnstileDirected, Mode::Directed, 3, 3, 0.25, ups,
                               derive_seed(7, i));
        Rng rng(i);
        Walk w = st.query(0, 3, rng);
        if (w.ok() && w.vertices == std::vector<VertexId>{0, 1, 2, 0}) ++good;
    }
    CHECK((double)good / 300 >= 0.75);
}

TEST_CASE("directed: turnstile stream matches its net insertion-only reduction") {
    auto ts = gen_random_turnstile(5, Mode::Directed, 10, 6, false, 41);
    DenseGraph net = DenseGraph::from_updates(5, Mode::Directed, ts.net);
    VertexId v0 = 0;
    for (VertexId v = 1; v < 5; ++v)
        if (net.degree_total(v) > net.degree_total(v0)) v0 = v;
    const uint32_t t = 3;
    auto exact = exact_distribution(net, v0, t);
    auto tally = tally_walks(15000, 43, [&](uint64_t s) {
        SketchState st = build(Algo::TurnstileDirected, Mode::Directed, 5, t, 0.25, ts.updates,
                               derive_seed(s, 0));
        Rng rng(derive_seed(s, 1));
        return st.query(v0, t, rng);
    });
    auto est = empirical_l1(tally, exact);
    CHECK(est.value <= 0.25 + 3.0 * est.sigma);
}

TEST_CASE("undirected: insertion-only stream through the turnstile path") {
    auto ups = gen_random_multigraph(6, 30, false, 51);
    SketchState st = build(Algo::TurnstileUndirected, Mode::Undirected, 6, 4, 0.25, ups, 52);
    const auto& sk = std::get<TurnstileUndirectedSketch>(st.sketch);
    DenseGraph g = DenseGraph::from_updates(6, Mode::Undirected, ups);
    const int64_t C = sk.capacity().value;

    std::vector<std::vector<int64_t>> a(6, std::vector<int64_t>(6, 0));
    for (VertexId u = 0; u < 6; ++u)
        for (const auto& oa : sk.e1().out[u]) a[u][oa.head] += oa.multiplicity;
    for (VertexId u = 0; u < 6; ++u) {
        for (VertexId v = 0; v < 6; ++v) {
            if (u == v) continue;
            int64_t f = g.at(u, v), d = g.degree_total(v);
            CHECK(a[u][v] <= f);  // one-sided estimates
            if (d > 0) CHECK((f - a[u][v]) * C < d);  // f0/d < 1/C, strict
        }
    }
}

TEST_CASE("undirected: triangle minus an edge walks the residual path") {
    std::vector<Update> ups{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 0, -1}};
    DenseGraph net(3, Mode::Undirected);
    net.at(0, 1) = net.at(1, 0) = 1;
    net.at(1, 2) = net.at(2, 1) = 1;
    const uint32_t t = 2;
    auto exact = exact_distribution(net, 0, t);
    auto tally = tally_walks(8000, 61, [&](uint64_t s) {
        SketchState st = build(Algo::TurnstileUndirected, Mode::Undirected, 3, t, 0.25, ups,
                               derive_seed(s, 0));
        Rng rng(derive_seed(s, 1));
        return st.query(0, t, rng);
    });
    auto est = empirical_l1(tally, exact);
    CHECK(est.value <= 0.25 + 3.0 * est.sigma);
    // the deleted edge never appears
    for (const auto& [w, c] : tally.counts)
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            bool crosses_deleted =
                (w[i] == 2 && w[i + 1] == 0) || (w[i] == 0 && w[i + 1] == 2);
            CHECK_FALSE(crosses_deleted);
        }
}

TEST_CASE("undirected: full cancellation fails at the start vertex") {
    std::vector<Update> ups{{0, 1, 1}, {1, 2, 1}, {0, 1, -1}, {1, 2, -1}};
    SketchState st = build(Algo::TurnstileUndirected, Mode::Undirected, 3, 2, 0.25, ups, 71);
    Rng rng(5);
    CHECK(st.query(0, 2, rng).failed);
    CHECK(st.query(1, 2, rng).failed);
}

TEST_CASE("undirected: turnstile stream matches its net reduction") {
    auto ts = gen_random_turnstile(5, Mode::Undirected, 12, 6, false, 81);
    DenseGraph net = DenseGraph::from_updates(5, Mode::Undirected, ts.net);
    VertexId v0 = 0;
    for (VertexId v = 1; v < 5; ++v)
        if (net.degree_total(v) > net.degree_total(v0)) v0 = v;
    const uint32_t t = 3;
    auto exact = exact_distribution(net, v0, t);
    auto tally = tally_walks(10000, 83, [&](uint64_t s) {
        SketchState st = build(Algo::TurnstileUndirected, Mode::Undirected, 5, t, 0.25,
                               ts.updates, derive_seed(s, 0));
        Rng rng(derive_seed(s, 1));
        return st.query(v0, t, rng);
    });
    auto est = empirical_l1(tally, exact);
    CHECK(est.value <= 0.25 + 3.0 * est.sigma);
}

TEST_CASE("linearity: permuted and churned streams give identical state") {
    auto ts = gen_random_turnstile(5, Mode::Undirected, 10, 4, false, 91);
    std::vector<Update> rewritten = ts.updates;
    Rng perm(92);
    for (size_t i = rewritten.size(); i > 1; --i)
        std::swap(rewritten[i - 1], rewritten[perm.below(i)]);
    rewritten.push_back({1, 4, 1});
    rewritten.push_back({1, 4, -1});

    TurnstileUndirectedBuilder b1(5, 3, 0.25, 93), b2(5, 3, 0.25, 93);
    StreamSession s1(5, Mode::Undirected, Model::Turnstile);
    StreamSession s2(5, Mode::Undirected, Model::Turnstile);
    s1.attach(&b1);
    s2.attach(&b2);
    for (const auto& u : ts.updates) s1.ingest(u);
    for (const auto& u : rewritten) s2.ingest(u);

    for (VertexId u = 0; u < 5; ++u) {
        for (uint32_t j = 0; j < b1.samplers_per_vertex(); ++j)
            CHECK(b1.sampler(u, j).cells() == b2.sampler(u, j).cells());
        CHECK(b1.heavy_hitter(u).cells() == b2.heavy_hitter(u).cells());
    }
    auto sk1 = b1.freeze(s1);
    auto sk2 = b2.freeze(s2);
    CHECK(sk1.successes() == sk2.successes());
}

TEST_CASE("sampler counts match the stated formulas") {
    CHECK(turnstile_sampler_count_directed(1, 0.25) == 50);
    CHECK(turnstile_sampler_count_directed(4, 0.25) == 88);
    CHECK(turnstile_sampler_count_undirected(4, 0.25, Capacity(4, 0.25).value) == 114);
}

TEST_CASE("universe padding only fires for epsilon below 1/n") {
    CHECK(sampler_universe(6, 0.25) == 6);
    CHECK(sampler_universe(6, 0.05) == 20);  // 1/0.05
    CHECK(sampler_universe(64, 0.05) == 64);
}
