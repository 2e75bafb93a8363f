#include "walks/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "walks/batch.hpp"
#include "walks/capacity.hpp"
#include "walks/gen.hpp"
#include "walks/misra_gries.hpp"
#include "walks/oracle.hpp"
#include "walks/state.hpp"
#include "walks/verify.hpp"

namespace walks {

namespace {

Check make_check(std::string name, double value, double bound, bool pass_when_le = true) {
    Check c;
    c.name = std::move(name);
    c.value = value;
    c.bound = bound;
    c.pass = pass_when_le ? (value <= bound) : (value >= bound);
    return c;
}

Check exact_check(std::string name, bool ok) {
    return Check{std::move(name), ok ? 1.0 : 0.0, 1.0, ok};
}

// Fresh sketch per query: the trial seed splits into a build seed and a
// query seed.
Walk fresh_sketch_walk(const RunConfig& config, const std::vector<Update>& ups, VertexId v0,
                       uint64_t trial_seed) {
    RunConfig cfg = config;
    cfg.seed = derive_seed(trial_seed, 0);
    SketchState st = build_from_stream(cfg, ups);
    Rng rng(derive_seed(trial_seed, 1));
    return st.query(v0, cfg.t, rng);
}

L1Estimate fresh_sketch_l1(const RunConfig& config, const std::vector<Update>& ups,
                           VertexId v0, uint64_t queries, uint64_t seed,
                           const WalkDistribution& exact, uint64_t* fails_out = nullptr) {
    WalkTally tally = tally_walks(queries, seed, [&](uint64_t s) {
        return fresh_sketch_walk(config, ups, v0, s);
    });
    if (fails_out) *fails_out = tally.fails;
    return empirical_l1(tally, exact);
}

VertexId max_degree_vertex(const DenseGraph& g) {
    VertexId best = 0;
    int64_t bd = -1;
    for (VertexId v = 0; v < g.n; ++v) {
        int64_t d = g.degree_total(v);
        if (d > bd) {
            bd = d;
            best = v;
        }
    }
    return best;
}

}  // namespace

double CriterionResult::worst_margin() const {
    double worst = 1e300;
    for (const auto& c : checks) worst = std::min(worst, c.bound - c.value);
    return worst;
}

CriterionResult criterion_perfect_wr(uint64_t seed, uint64_t queries) {
    CriterionResult r{1, "perfect directed simulation (with-replacement walker)", {}};
    const uint32_t t = 4;
    for (int g = 0; g < 20; ++g) {
        uint32_t n = 3 + (uint32_t)(g % 4);
        auto ups = gen_random_multi_digraph(n, 1, 3, derive_seed(seed, 100 + g));
        DenseGraph graph = DenseGraph::from_updates(n, Mode::Directed, ups);
        auto exact = exact_distribution(graph, 0, t);
        RunConfig cfg{Mode::Directed, Model::Insertion, Algo::Wr, n, t, 1.0, 0};
        auto est = fresh_sketch_l1(cfg, ups, 0, queries, derive_seed(seed, 200 + g), exact);
        r.checks.push_back(make_check("wr_l1_graph" + std::to_string(g), est.value, 0.05));
    }
    return r;
}

CriterionResult criterion_perfect_wor(uint64_t seed, uint64_t queries) {
    CriterionResult r{2, "perfect directed simulation (without-replacement walker)", {}};
    const uint32_t t = 4;
    for (int g = 0; g < 20; ++g) {
        uint32_t n = 3 + (uint32_t)(g % 4);
        auto ups = gen_random_simple_digraph(n, 1, std::min(3u, n - 1), derive_seed(seed, 300 + g));
        DenseGraph graph = DenseGraph::from_updates(n, Mode::Directed, ups);
        auto exact = exact_distribution(graph, 0, t);
        RunConfig cfg{Mode::Directed, Model::Insertion, Algo::Wor, n, t, 1.0, 0};
        auto est = fresh_sketch_l1(cfg, ups, 0, queries, derive_seed(seed, 400 + g), exact);
        r.checks.push_back(make_check("wor_l1_graph" + std::to_string(g), est.value, 0.05));
    }
    return r;
}

CriterionResult criterion_undirected_epsilon(uint64_t seed, uint64_t queries) {
    CriterionResult r{3, "undirected epsilon guarantee", {}};
    const double eps = 0.25;

    // Random multigraphs, full-walk l1 against the enumerated oracle.
    const uint32_t t = 4;
    for (int g = 0; g < 6; ++g) {
        uint32_t n = 4 + (uint32_t)(g % 3);
        auto ups = gen_random_multigraph(n, 3 * n, false, derive_seed(seed, 500 + g));
        DenseGraph graph = DenseGraph::from_updates(n, Mode::Undirected, ups);
        VertexId v0 = max_degree_vertex(graph);
        auto exact = exact_distribution(graph, v0, t);
        RunConfig cfg{Mode::Undirected, Model::Insertion, Algo::UndirectedSketch_, n, t, eps, 0};
        uint64_t fails = 0;
        auto est = fresh_sketch_l1(cfg, ups, v0, queries, derive_seed(seed, 600 + g), exact,
                                   &fails);
        r.checks.push_back(make_check("undirected_l1_graph" + std::to_string(g), est.value,
                                      eps + 3.0 * est.sigma));
        double frate = (double)fails / (double)queries;
        double fsigma = std::sqrt(eps / 2.0 * (1.0 - eps / 2.0) / (double)queries);
        r.checks.push_back(make_check("undirected_failrate_graph" + std::to_string(g), frate,
                                      eps / 2.0 + 3.0 * fsigma));
    }

    // Lower-bound gadget at t=16: fail rate plus the endpoint marginal
    // (full-walk enumeration is infeasible at this length).
    const uint32_t tg = 16;
    auto gadget = gen_gadget_undirected(tg, 2, derive_seed(seed, 700));
    RunConfig gcfg{Mode::Undirected, Model::Insertion, Algo::UndirectedSketch_,
                   gadget.n,         tg,               eps,
                   0};
    const uint64_t gadget_trials = std::max<uint64_t>(10000, queries / 10);
    auto frate = measure_failure_rate_parallel(gadget_trials, derive_seed(seed, 701),
                                               [&](uint64_t s) {
                                                   return fresh_sketch_walk(gcfg, gadget.updates,
                                                                            gadget.v0, s);
                                               });
    double fsigma = std::sqrt(eps / 2.0 * (1.0 - eps / 2.0) / (double)gadget_trials);
    r.checks.push_back(
        make_check("gadget_failrate", frate.value, eps / 2.0 + 3.0 * fsigma));

    DenseGraph ggraph = DenseGraph::from_updates(gadget.n, Mode::Undirected, gadget.updates);
    auto marginal = endpoint_marginal(ggraph, gadget.v0, tg);
    auto etally = tally_endpoints(gadget.n, std::max<uint64_t>(50000, queries / 4),
                                  derive_seed(seed, 702), [&](uint64_t s) {
                                      return fresh_sketch_walk(gcfg, gadget.updates, gadget.v0, s);
                                  });
    auto eest = empirical_endpoint_l1(etally, marginal);
    r.checks.push_back(
        make_check("gadget_endpoint_l1", eest.value, eps + 3.0 * eest.sigma));
    return r;
}

CriterionResult criterion_capacity_grid() {
    CriterionResult r{4, "capacity formula soundness", {}};
    const uint32_t ts[] = {1, 4, 16, 64, 256, 1024};
    for (uint32_t t : ts) {
        const double epss[] = {1.0, 0.1, std::pow(2.0, -std::sqrt((double)t))};
        for (double eps : epss) {
            Capacity cap(t, eps);
            bool ok = Capacity::failure_bound_holds(t, cap.value, cap.delta);
            r.checks.push_back(exact_check("failure_bound_t" + std::to_string(t) + "_eps" +
                                               std::to_string(eps),
                                           ok));
        }
    }
    bool frozen = Capacity(16, 0.5).value == 31 && Capacity(64, 1.0 / 256.0).value == 64 &&
                  Capacity(1, 1.0).value == 8;
    r.checks.push_back(exact_check("frozen_examples", frozen));
    return r;
}

CriterionResult criterion_mg_bounds(uint64_t seed, uint32_t streams) {
    CriterionResult r{5, "Misra-Gries frequency bounds", {}};
    uint64_t violations = 0, sink_mismatch = 0, size_violations = 0, ratio_violations = 0;
    Rng rng(seed);
    for (uint32_t s = 0; s < streams; ++s) {
        uint32_t n = 2 + (uint32_t)rng.below(7);
        uint32_t m = (uint32_t)rng.below(51);
        uint32_t C = 1 + (uint32_t)rng.below(8);
        auto ups = gen_random_multigraph(n, m, false, rng.next());

        std::vector<MGTable> tables;
        for (uint32_t v = 0; v < n; ++v) tables.emplace_back(v, C);
        std::map<std::pair<VertexId, VertexId>, int64_t> sink;  // (tail, head) -> count
        auto feed = [&](VertexId tail, VertexId head) {
            tables[head].insert(tail, [&](const Arc& a) { ++sink[{a.tail, a.head}]; });
        };
        for (const auto& u : ups) {
            feed(u.tail, u.head);
            feed(u.head, u.tail);
        }
        DenseGraph g = DenseGraph::from_updates(n, Mode::Undirected, ups);

        for (VertexId v = 0; v < n; ++v) {
            if (tables[v].entries().size() > C) ++size_violations;
            int64_t d = g.degree_total(v);
            for (VertexId u = 0; u < n; ++u) {
                if (u == v) continue;
                int64_t f = g.at(u, v);
                int64_t A = tables[v].estimate(u);
                // 0 <= f - A <= d/(C+1), and the sink got exactly f - A arcs
                if (A > f || (f - A) * (int64_t)(C + 1) > d) ++violations;
                auto it = sink.find({u, v});
                int64_t got = it == sink.end() ? 0 : it->second;
                if (got != f - A) ++sink_mismatch;
                // unimportant-ratio condition: f0/d < 1/C with f0 = f - A
                if (d > 0 && (f - A) * (int64_t)C >= d) ++ratio_violations;
            }
        }
    }
    r.checks.push_back(exact_check("table_size_bound", size_violations == 0));
    r.checks.push_back(exact_check("estimate_bounds", violations == 0));
    r.checks.push_back(exact_check("sink_counts_exact", sink_mismatch == 0));
    r.checks.push_back(exact_check("unimportant_ratio", ratio_violations == 0));
    return r;
}

CriterionResult criterion_space_accounting(uint64_t seed) {
    CriterionResult r{6, "space accounting", {}};
    bool undirected_ok = true, wr_ok = true, simple_mult_ok = true;
    for (int g = 0; g < 50; ++g) {
        uint32_t n = 3 + (uint32_t)(g % 6);
        uint32_t t = 1 + (uint32_t)(g % 8);
        double eps = (g % 2) ? 0.25 : 1.0;
        auto ups = gen_random_multigraph(n, 4 * n, false, derive_seed(seed, 800 + g));
        RunConfig cfg{Mode::Undirected, Model::Insertion, Algo::UndirectedSketch_,
                      n,                t,                eps,
                      derive_seed(seed, 900 + g)};
        SketchState st = build_from_stream(cfg, ups);
        const auto& sk = std::get<UndirectedSketch>(st.sketch);
        if (sk.stored_entries() > 2ull * n * sk.capacity().value) undirected_ok = false;
        // degree conservation at every vertex
        for (VertexId u = 0; u < n; ++u)
            if (sk.e1().d1[u] + sk.sampler_feeds(u) != sk.degrees().d[u]) undirected_ok = false;
    }
    for (int g = 0; g < 20; ++g) {
        uint32_t n = 3 + (uint32_t)(g % 4);
        uint32_t t = 1 + (uint32_t)(g % 6);
        auto ups = gen_random_multi_digraph(n, 1, 3, derive_seed(seed, 1000 + g));
        RunConfig cfg{Mode::Directed, Model::Insertion, Algo::Wr, n, t, 1.0,
                      derive_seed(seed, 1100 + g)};
        SketchState st = build_from_stream(cfg, ups);
        const auto& sk = std::get<DirectedWrSketch>(st.sketch);
        if (sk.stored_samples() != (size_t)n * t) wr_ok = false;
    }
    // On simple graphs the E1 multiplicity itself is within n*C.
    for (int g = 0; g < 20; ++g) {
        uint32_t n = 4 + (uint32_t)(g % 3);
        auto ups = gen_random_simple_digraph(n, 1, n - 1, derive_seed(seed, 1200 + g));
        for (auto& u : ups) {
            if (u.tail > u.head) std::swap(u.tail, u.head);
        }
        RunConfig cfg{Mode::Undirected, Model::Insertion, Algo::UndirectedSketch_,
                      n,                2,                1.0,
                      derive_seed(seed, 1300 + g)};
        SketchState st = build_from_stream(cfg, ups);
        const auto& sk = std::get<UndirectedSketch>(st.sketch);
        if (sk.e1().total_multiplicity() > (int64_t)n * sk.capacity().value)
            simple_mult_ok = false;
    }
    r.checks.push_back(exact_check("undirected_entries_le_2nC", undirected_ok));
    r.checks.push_back(exact_check("wr_exactly_nt_samples", wr_ok));
    r.checks.push_back(exact_check("simple_e1_multiplicity_le_nC", simple_mult_ok));
    return r;
}

CriterionResult criterion_turnstile_equivalence(uint64_t seed, uint64_t queries) {
    CriterionResult r{7, "turnstile equivalence and linearity", {}};
    const double eps = 0.25;

    // Streams with deletions vs the exact oracle of their net graphs.
    for (int g = 0; g < 2; ++g) {
        auto ts = gen_random_turnstile(5, Mode::Directed, 10, 6, false,
                                       derive_seed(seed, 1400 + g));
        DenseGraph net = DenseGraph::from_updates(5, Mode::Directed, ts.net);
        VertexId v0 = max_degree_vertex(net);
        const uint32_t t = 3;
        auto exact = exact_distribution(net, v0, t);
        RunConfig cfg{Mode::Directed, Model::Turnstile, Algo::TurnstileDirected, 5, t, eps, 0};
        auto est = fresh_sketch_l1(cfg, ts.updates, v0, queries, derive_seed(seed, 1500 + g),
                                   exact);
        r.checks.push_back(make_check("turnstile_directed_l1_" + std::to_string(g), est.value,
                                      eps + 3.0 * est.sigma));
    }
    for (int g = 0; g < 2; ++g) {
        auto ts = gen_random_turnstile(5, Mode::Undirected, 12, 6, false,
                                       derive_seed(seed, 1600 + g));
        DenseGraph net = DenseGraph::from_updates(5, Mode::Undirected, ts.net);
        VertexId v0 = max_degree_vertex(net);
        const uint32_t t = 3;
        auto exact = exact_distribution(net, v0, t);
        RunConfig cfg{Mode::Undirected, Model::Turnstile, Algo::TurnstileUndirected, 5, t, eps,
                      0};
        auto est = fresh_sketch_l1(cfg, ts.updates, v0, queries, derive_seed(seed, 1700 + g),
                                   exact);
        r.checks.push_back(make_check("turnstile_undirected_l1_" + std::to_string(g), est.value,
                                      eps + 3.0 * est.sigma));
    }

    // Linearity: a permuted stream with an extra cancelled pair leaves
    // identical sketch state under identical seeds.
    {
        auto ts = gen_random_turnstile(5, Mode::Undirected, 10, 4, false,
                                       derive_seed(seed, 1800));
        std::vector<Update> rewritten = ts.updates;
        Rng perm(derive_seed(seed, 1801));
        for (size_t i = rewritten.size(); i > 1; --i)
            std::swap(rewritten[i - 1], rewritten[perm.below(i)]);
        rewritten.push_back({0, 3, 1});
        rewritten.push_back({0, 3, -1});

        const uint64_t bseed = derive_seed(seed, 1802);
        TurnstileUndirectedBuilder b1(5, 3, eps, bseed), b2(5, 3, eps, bseed);
        StreamSession s1(5, Mode::Undirected, Model::Turnstile);
        StreamSession s2(5, Mode::Undirected, Model::Turnstile);
        s1.attach(&b1);
        s2.attach(&b2);
        for (const auto& u : ts.updates) s1.ingest(u);
        for (const auto& u : rewritten) s2.ingest(u);

        bool states_equal = true;
        for (VertexId u = 0; u < 5 && states_equal; ++u) {
            for (uint32_t j = 0; j < b1.samplers_per_vertex(); ++j)
                if (b1.sampler(u, j).cells() != b2.sampler(u, j).cells()) states_equal = false;
            if (b1.heavy_hitter(u).cells() != b2.heavy_hitter(u).cells()) states_equal = false;
        }
        auto sk1 = b1.freeze(s1);
        auto sk2 = b2.freeze(s2);
        bool frozen_equal = sk1.successes() == sk2.successes();
        for (VertexId u = 0; u < 5; ++u) {
            if (sk1.e1().d1[u] != sk2.e1().d1[u]) frozen_equal = false;
        }
        r.checks.push_back(exact_check("linearity_states_identical", states_equal));
        r.checks.push_back(exact_check("linearity_frozen_identical", frozen_equal));
    }

    // Insertion-only stream through the turnstile path: recovered E1 obeys
    // the one-sided bounds with the unimportant ratio below 1/C.
    {
        auto ups = gen_random_multigraph(6, 30, false, derive_seed(seed, 1900));
        RunConfig cfg{Mode::Undirected, Model::Turnstile, Algo::TurnstileUndirected, 6, 4, eps,
                      derive_seed(seed, 1901)};
        std::vector<Update> as_turnstile = ups;  // all +1
        SketchState st = build_from_stream(cfg, as_turnstile);
        const auto& sk = std::get<TurnstileUndirectedSketch>(st.sketch);
        DenseGraph g = DenseGraph::from_updates(6, Mode::Undirected, ups);
        const int64_t C = sk.capacity().value;
        bool ok = true;
        std::vector<std::vector<int64_t>> a(6, std::vector<int64_t>(6, 0));
        for (VertexId u = 0; u < 6; ++u)
            for (const auto& oa : sk.e1().out[u]) a[u][oa.head] += oa.multiplicity;
        for (VertexId u = 0; u < 6 && ok; ++u) {
            for (VertexId v = 0; v < 6; ++v) {
                if (u == v) continue;
                int64_t f = g.at(u, v), A = a[u][v], d = g.degree_total(v);
                if (A > f) ok = false;                    // one-sided estimates
                if (d > 0 && (f - A) * C >= d) ok = false;  // f0/d < 1/C, strict
            }
        }
        r.checks.push_back(exact_check("turnstile_e1_bounds", ok));
    }

    // Sampler success-count concentration at the per-vertex thresholds,
    // 10^4 vertex observations.
    {
        auto ts = gen_random_turnstile(5, Mode::Undirected, 12, 4, false,
                                       derive_seed(seed, 2000));
        const uint32_t t = 3;
        uint32_t low = 0;
        const uint32_t reps = 2000;
        for (uint32_t i = 0; i < reps; ++i) {
            RunConfig cfg{Mode::Undirected, Model::Turnstile, Algo::TurnstileUndirected, 5, t,
                          eps, derive_seed(seed, 2100 + i)};
            SketchState st = build_from_stream(cfg, ts.updates);
            const auto& sk = std::get<TurnstileUndirectedSketch>(st.sketch);
            DenseGraph net = DenseGraph::from_updates(5, Mode::Undirected, ts.net);
            for (VertexId u = 0; u < 5; ++u) {
                // only vertices with residual mass can feed their samplers
                if (net.degree_total(u) - sk.e1().d1[u] > 0 &&
                    sk.successes()[u].size() < sk.capacity().value)
                    ++low;
            }
        }
        double rate = (double)low / (double)(reps * 5);
        double bound = eps / (2.0 * t) + 3.0 * std::sqrt(eps / (2.0 * t) / (double)(reps * 5));
        r.checks.push_back(make_check("sampler_success_concentration", rate, bound));
    }
    return r;
}

CriterionResult criterion_l1_sampler_contract(uint64_t seed, uint32_t trials) {
    CriterionResult r{8, "l1 sampler contract", {}};
    struct Vec {
        std::string name;
        std::vector<std::pair<uint32_t, int64_t>> coords;
    };
    const Vec vectors[] = {
        {"point_mass", {{3, 5}}},
        {"two_equal", {{2, 1}, {9, 1}}},
        {"skewed_811", {{0, 8}, {5, 1}, {11, 1}}},
        {"negative_633", {{1, -6}, {4, 3}, {7, 3}}},
        {"two_level", {{0, 100}, {1, 100}, {2, 100}, {3, 100}, {8, 1}, {9, 1}, {10, 1}, {11, 1}}},
    };
    const uint32_t universe = 16;
    const double delta_s = 0.5;
    int vec_idx = 0;
    for (const auto& vec : vectors) {
        int64_t l1 = 0;
        for (auto [i, f] : vec.coords) l1 += std::llabs(f);
        std::vector<uint64_t> hits(universe, 0);
        uint64_t fails = 0;
        for (uint32_t tr = 0; tr < trials; ++tr) {
            L1Sampler s(universe, delta_s, derive_seed(seed, 2200 + vec_idx * 100000 + tr));
            for (auto [i, f] : vec.coords) s.update(i, f);
            auto out = s.query();
            if (out)
                ++hits[*out];
            else
                ++fails;
        }
        uint64_t succ = trials - fails;
        double tv = 0.0;
        for (uint32_t i = 0; i < universe; ++i) {
            double exact = 0.0;
            for (auto [j, f] : vec.coords)
                if (j == i) exact = (double)std::llabs(f) / (double)l1;
            double emp = succ ? (double)hits[i] / (double)succ : 0.0;
            tv += std::abs(emp - exact);
        }
        tv /= 2.0;
        r.checks.push_back(make_check("tv_" + vec.name, tv, 0.02));
        double frate = (double)fails / (double)trials;
        double fsigma = std::sqrt(delta_s * (1 - delta_s) / (double)trials);
        r.checks.push_back(make_check("failrate_" + vec.name, frate, delta_s + 3.0 * fsigma));
        ++vec_idx;
    }
    // zero vector fails deterministically
    {
        L1Sampler s(universe, delta_s, derive_seed(seed, 2300));
        s.update(4, 7);
        s.update(4, -7);
        r.checks.push_back(exact_check("zero_vector_fails", !s.query().has_value()));
    }
    return r;
}

CriterionResult criterion_self_loop_reinsertion(uint64_t seed, uint64_t queries) {
    CriterionResult r{9, "self-loop reinsertion pipeline", {}};
    struct Case {
        std::string name;
        uint32_t n;
        Mode mode;
        Algo algo;
        std::vector<Update> ups;
        VertexId v0;
    };
    std::vector<Case> cases;
    cases.push_back({"edge_plus_loop", 2, Mode::Undirected, Algo::UndirectedSketch_,
                     {{0, 1, 1}, {0, 0, 1}}, 0});
    cases.push_back({"all_loops", 1, Mode::Undirected, Algo::UndirectedSketch_, {{0, 0, 1}}, 0});
    cases.push_back({"loopy_path", 4, Mode::Undirected, Algo::UndirectedSketch_,
                     {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {1, 1, 1}, {2, 2, 1}, {2, 2, 1}}, 0});
    cases.push_back({"directed_loops", 3, Mode::Directed, Algo::Wr,
                     {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {1, 1, 1}, {0, 0, 1}}, 0});
    {
        auto ups = gen_random_multigraph(5, 12, true, derive_seed(seed, 2400));
        cases.push_back({"random_loopy", 5, Mode::Undirected, Algo::UndirectedSketch_, ups, 0});
    }

    const uint32_t t = 4;
    for (const auto& c : cases) {
        DenseGraph g = DenseGraph::from_updates(c.n, c.mode, c.ups);
        VertexId v0 = c.v0;
        if (g.degree_total(v0) == 0) v0 = max_degree_vertex(g);
        auto exact = exact_distribution(g, v0, t);
        RunConfig cfg{c.mode, Model::Insertion, c.algo, c.n, t, 0.25, 0};
        auto est = fresh_sketch_l1(cfg, c.ups, v0, queries, derive_seed(seed, 2500), exact);
        r.checks.push_back(make_check("composed_l1_" + c.name, est.value, 0.05));
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(uint64_t seed, bool quick) {
    const uint64_t big = quick ? 50000 : 500000;
    const uint64_t mid = quick ? 30000 : 200000;
    const uint64_t ts = quick ? 5000 : 30000;
    const uint32_t mg = quick ? 200 : 1000;
    // The sampler-contract tolerance (TV <= 0.02) sits just above the
    // multinomial noise floor at 10^4 trials; fewer trials would drown it.
    const uint32_t l1t = 10000;
    std::vector<CriterionResult> out;
    out.push_back(criterion_perfect_wr(seed, big));
    out.push_back(criterion_perfect_wor(seed, big));
    out.push_back(criterion_undirected_epsilon(seed, mid));
    out.push_back(criterion_capacity_grid());
    out.push_back(criterion_mg_bounds(seed, mg));
    out.push_back(criterion_space_accounting(seed));
    out.push_back(criterion_turnstile_equivalence(seed, ts));
    out.push_back(criterion_l1_sampler_contract(seed, l1t));
    out.push_back(criterion_self_loop_reinsertion(seed, big));
    return out;
}

namespace {

std::vector<Check> suite_failure(uint64_t seed, bool quick) {
    std::vector<Check> checks;
    const uint64_t trials = quick ? 1000 : 10000;
    // Triangle: no unimportant arcs, never fails.
    {
        std::vector<Update> tri{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
        RunConfig cfg{Mode::Undirected, Model::Insertion, Algo::UndirectedSketch_, 3, 4, 0.25,
                      0};
        auto rate = measure_failure_rate_parallel(trials, derive_seed(seed, 2600),
                                                  [&](uint64_t s) {
                                                      return fresh_sketch_walk(cfg, tri, 0, s);
                                                  });
        checks.push_back(Check{"triangle_failrate_zero", rate.value, 0.0, rate.fails == 0});
    }
    // Directed WR walker never fails when out-degrees are positive.
    {
        auto ups = gen_random_multi_digraph(5, 1, 3, derive_seed(seed, 2601));
        RunConfig cfg{Mode::Directed, Model::Insertion, Algo::Wr, 5, 4, 1.0, 0};
        auto rate = measure_failure_rate_parallel(trials, derive_seed(seed, 2602),
                                                  [&](uint64_t s) {
                                                      return fresh_sketch_walk(cfg, ups, 0, s);
                                                  });
        checks.push_back(Check{"wr_failrate_zero", rate.value, 0.0, rate.fails == 0});
    }
    // Gadget fail rate within the epsilon/2 budget.
    {
        const double eps = 0.25;
        auto gadget = gen_gadget_undirected(16, 2, derive_seed(seed, 2603));
        RunConfig cfg{Mode::Undirected, Model::Insertion, Algo::UndirectedSketch_,
                      gadget.n,         16,               eps,
                      0};
        auto rate = measure_failure_rate_parallel(trials, derive_seed(seed, 2604),
                                                  [&](uint64_t s) {
                                                      return fresh_sketch_walk(
                                                          cfg, gadget.updates, gadget.v0, s);
                                                  });
        double fsigma = std::sqrt(eps / 2 * (1 - eps / 2) / (double)trials);
        checks.push_back(make_check("gadget_failrate", rate.value, eps / 2 + 3.0 * fsigma));
    }
    return checks;
}

void append(std::vector<Check>& into, const CriterionResult& r) {
    for (const auto& c : r.checks) into.push_back(c);
}

}  // namespace

bool known_suite(const std::string& name) {
    return name == "perfect" || name == "epsilon" || name == "failure" ||
           name == "turnstile-equiv";
}

std::vector<Check> run_suite(const std::string& name, uint64_t seed, bool quick) {
    const uint64_t big = quick ? 50000 : 500000;
    const uint64_t mid = quick ? 30000 : 200000;
    const uint64_t ts = quick ? 5000 : 30000;
    std::vector<Check> checks;
    if (name == "perfect") {
        append(checks, criterion_perfect_wr(seed, big));
        append(checks, criterion_perfect_wor(seed, big));
        // Directed gadget as a stress input for the perfect walkers.
        auto gadget = gen_gadget_directed(8, 3, derive_seed(seed, 2700));
        DenseGraph g = DenseGraph::from_updates(gadget.n, Mode::Directed, gadget.updates);
        auto exact = exact_distribution(g, gadget.v0, 3);
        RunConfig cfg{Mode::Directed, Model::Insertion, Algo::Wr, gadget.n, 3, 1.0, 0};
        auto est = fresh_sketch_l1(cfg, gadget.updates, gadget.v0, mid,
                                   derive_seed(seed, 2701), exact);
        checks.push_back(make_check("gadget_directed_wr_l1", est.value, 0.05));
    } else if (name == "epsilon") {
        append(checks, criterion_undirected_epsilon(seed, mid));
        append(checks, criterion_capacity_grid());
        append(checks, criterion_mg_bounds(seed, quick ? 200 : 1000));
        append(checks, criterion_space_accounting(seed));
        append(checks, criterion_self_loop_reinsertion(seed, big));
    } else if (name == "failure") {
        checks = suite_failure(seed, quick);
    } else if (name == "turnstile-equiv") {
        append(checks, criterion_turnstile_equivalence(seed, ts));
        append(checks, criterion_l1_sampler_contract(seed, 10000));
    } else {
        throw std::invalid_argument("unknown verification suite: " + name);
    }
    return checks;
}

}  // namespace walks
