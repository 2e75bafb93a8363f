#include <doctest.h>

#include <map>
#include <sstream>

#include "walks/oracle.hpp"
#include "walks/stream.hpp"

using namespace walks;

namespace {

// Counts forwarded arc events.
struct CountingConsumer : ArcConsumer {
    std::vector<ArcEvent> events;
    void on_arc(const ArcEvent& e) override { events.push_back(e); }
};

struct ScriptedRng {
    std::vector<uint64_t> values;
    size_t pos = 0;
    uint64_t below(uint64_t bound) {
        REQUIRE(pos < values.size());
        uint64_t v = values[pos++];
        REQUIRE(v < bound);
        return v;
    }
};

}  // namespace

TEST_CASE("session rejects n = 0 and accepts degenerate n = 1") {
    CHECK_THROWS(StreamSession(0, Mode::Directed, Model::Insertion));
    StreamSession s(1, Mode::Undirected, Model::Turnstile);
    s.ingest({0, 0, 1});  // a 1-vertex graph can still receive self-loops
    CHECK(s.degrees().d_self[0] == 2);
}

TEST_CASE("single undirected edge forwards two arcs and bumps both degrees") {
    StreamSession s(6, Mode::Undirected, Model::Insertion);
    CountingConsumer c;
    s.attach(&c);
    s.ingest({2, 5, 1});
    CHECK(s.degrees().d[2] == 1);
    CHECK(s.degrees().d[5] == 1);
    REQUIRE(c.events.size() == 2);
    CHECK(c.events[0].tail == 2);
    CHECK(c.events[0].head == 5);
    CHECK(c.events[1].tail == 5);
    CHECK(c.events[1].head == 2);
}

TEST_CASE("self-loops only advance the loop counters") {
    StreamSession s(4, Mode::Undirected, Model::Insertion);
    CountingConsumer c;
    s.attach(&c);
    s.ingest({3, 3, 1});
    CHECK(c.events.empty());
    CHECK(s.degrees().d[3] == 0);
    CHECK(s.degrees().d_self[3] == 2);  // both arc directions

    StreamSession sd(4, Mode::Directed, Model::Insertion);
    sd.ingest({3, 3, 1});
    CHECK(sd.degrees().d_self[3] == 1);
}

TEST_CASE("turnstile cancellation zeroes degrees") {
    StreamSession s(6, Mode::Undirected, Model::Turnstile);
    s.ingest({2, 5, 1});
    s.ingest({2, 5, -1});
    CHECK(s.degrees().d[2] == 0);
    CHECK(s.degrees().d[5] == 0);
    CHECK(s.forwarded_arc_events() == 0);
}

TEST_CASE("insertion-only session rejects deletions") {
    StreamSession s(3, Mode::Directed, Model::Insertion);
    CHECK_THROWS(s.ingest({0, 1, -1}));
}

TEST_CASE("degrees equal a naive replay on random update streams") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        uint32_t n = 2 + (uint32_t)rng.below(6);
        Mode mode = rng.below(2) ? Mode::Directed : Mode::Undirected;
        StreamSession s(n, mode, Model::Turnstile);
        std::vector<Update> ups;
        std::map<std::pair<VertexId, VertexId>, int64_t> net;
        int64_t directed_arcs = 0, undirected_edges = 0;
        for (int i = 0; i < 60; ++i) {
            VertexId u = (VertexId)rng.below(n), v = (VertexId)rng.below(n);
            int delta = 1;
            auto key = std::minmax(u, v);
            if (net[{key.first, key.second}] > 0 && rng.below(3) == 0) delta = -1;
            net[{key.first, key.second}] += delta;
            ups.push_back({u, v, delta});
            s.ingest(ups.back());
            if (u != v) (mode == Mode::Directed ? directed_arcs : undirected_edges) += delta;
        }
        DenseGraph g = DenseGraph::from_updates(n, mode, ups);
        for (VertexId u = 0; u < n; ++u) {
            CHECK(s.degrees().d[u] == g.degree_loopless(u));
            CHECK(s.degrees().d_self[u] == g.loop_weight(u));
        }
        CHECK(s.forwarded_arc_events() == directed_arcs + 2 * undirected_edges);
    }
}

TEST_CASE("stream text parsing") {
    std::istringstream in("# comment\n0 1\n 2 3\n\n4 0\n");
    auto ups = parse_stream(in, Model::Insertion);
    REQUIRE(ups.size() == 3);
    CHECK(ups[1].tail == 2);

    std::istringstream turn("0 1 +1\n1 2 -1\n");
    auto tups = parse_stream(turn, Model::Turnstile);
    REQUIRE(tups.size() == 2);
    CHECK(tups[1].delta == -1);

    std::istringstream bad1("0 1\nx y\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_stream(bad1, Model::Insertion)),
                         doctest::Contains("line 2"), std::runtime_error);
    std::istringstream bad2("0 1\n");
    CHECK_THROWS(static_cast<void>(parse_stream(bad2, Model::Turnstile)));
    std::istringstream bad3("0 1 +2\n");
    CHECK_THROWS(static_cast<void>(parse_stream(bad3, Model::Turnstile)));
    std::istringstream bad4("0 1 junk\n");
    CHECK_THROWS(static_cast<void>(parse_stream(bad4, Model::Insertion)));
}

TEST_CASE("reinsertion: no loops means identity on the first t+1 vertices") {
    DegreeTable deg(3);
    deg.d = {2, 2, 2};
    Walk in;
    in.vertices = {0, 1, 2, 1, 0};
    Rng rng(3);
    Walk out = reinsert_self_loops(in, deg, 3, rng);
    REQUIRE(out.ok());
    CHECK(out.vertices == std::vector<VertexId>{0, 1, 2, 1});
}

TEST_CASE("reinsertion: all-loop vertex emits itself forever") {
    DegreeTable deg(1);
    deg.d = {0};
    deg.d_self = {2};
    Walk in;
    in.vertices = {0};
    Rng rng(5);
    Walk out = reinsert_self_loops(in, deg, 3, rng);
    REQUIRE(out.ok());
    CHECK(out.vertices == std::vector<VertexId>{0, 0, 0, 0});
}

TEST_CASE("reinsertion propagates Fail") {
    DegreeTable deg(2);
    Rng rng(7);
    CHECK(reinsert_self_loops(Walk::fail(), deg, 2, rng).failed);
}

TEST_CASE("composed reinsertion equals the loopy-walk oracle exactly") {
    // Enumerate loopless walks and all reinsertion branch choices with
    // scripted draws; the resulting rational distribution must equal the
    // enumeration on the original graph.
    struct LoopyCase {
        uint32_t n;
        std::vector<Update> ups;
        VertexId v0;
        uint32_t t;
    };
    const LoopyCase cases[] = {
        {2, {{0, 1, 1}, {0, 0, 1}}, 0, 2},                            // path with one loop
        {3, {{0, 1, 1}, {1, 2, 1}, {1, 1, 1}, {2, 2, 1}}, 0, 3},      // loops mid-path
        {4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 0, 1}, {2, 2, 1}}, 1, 4},
    };
    for (const auto& tc : cases) {
        DenseGraph loopy = DenseGraph::from_updates(tc.n, Mode::Undirected, tc.ups);
        DenseGraph loopless = loopy.loopless();
        DegreeTable deg(tc.n);
        for (VertexId u = 0; u < tc.n; ++u) {
            deg.d[u] = loopless.degree_total(u);
            deg.d_self[u] = loopy.loop_weight(u);
        }
        auto base = exact_distribution(loopless, tc.v0, tc.t);
        REQUIRE(base.fail_mass == 0);

        std::map<std::vector<VertexId>, Rational> composed;
        for (const auto& [walk_vertices, walk_p] : base.prob) {
            // branch vector: bit i set = consume a loopless step at step i
            for (uint32_t mask = 0; mask < (1u << tc.t); ++mask) {
                Rational weight = walk_p;
                std::vector<uint64_t> script;
                VertexId u = walk_vertices[0];
                size_t consumed = 0;
                bool feasible = true;
                for (uint32_t step = 0; step < tc.t && feasible; ++step) {
                    int64_t ds = deg.d_self[u], dt = deg.total(u);
                    if (mask & (1u << step)) {
                        if (deg.d[u] == 0) {
                            feasible = false;
                            break;
                        }
                        weight *= Rational(deg.d[u], dt);
                        script.push_back((uint64_t)ds);  // any draw >= d_self consumes
                        ++consumed;
                        u = walk_vertices[consumed];
                    } else {
                        if (ds == 0) {
                            feasible = false;
                            break;
                        }
                        weight *= Rational(ds, dt);
                        script.push_back(0);  // any draw < d_self stays
                    }
                }
                if (!feasible) continue;
                ScriptedRng rng{script, 0};
                Walk in;
                in.vertices = walk_vertices;
                Walk out = reinsert_self_loops(in, deg, tc.t, rng);
                REQUIRE(out.ok());
                composed[out.vertices] += weight;
            }
        }

        auto want = exact_distribution(loopy, tc.v0, tc.t);
        REQUIRE(want.fail_mass == 0);
        CHECK(composed.size() == want.prob.size());
        for (const auto& [w, p] : want.prob) {
            auto it = composed.find(w);
            REQUIRE(it != composed.end());
            CHECK(it->second == p);  // exact rational equality
        }
    }
}
