#include "walks/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "walks/rng.hpp"

namespace walks {

namespace {

void shuffle_updates(std::vector<Update>& ups, Rng& rng) {
    for (size_t i = ups.size(); i > 1; --i) std::swap(ups[i - 1], ups[rng.below(i)]);
}

std::vector<VertexId> sample_distinct(uint32_t count, uint32_t n, VertexId exclude, Rng& rng) {
    std::vector<VertexId> pool;
    pool.reserve(n - 1);
    for (VertexId v = 0; v < n; ++v)
        if (v != exclude) pool.push_back(v);
    for (uint32_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    pool.resize(count);
    return pool;
}

}  // namespace

std::vector<Update> gen_random_simple_digraph(uint32_t n, uint32_t min_out, uint32_t max_out,
                                              uint64_t seed) {
    if (n < 2 || min_out < 1 || max_out >= n || min_out > max_out)
        throw std::invalid_argument("gen: bad simple digraph parameters");
    Rng rng(seed);
    std::vector<Update> ups;
    for (VertexId u = 0; u < n; ++u) {
        uint32_t deg = min_out + (uint32_t)rng.below(max_out - min_out + 1);
        for (VertexId v : sample_distinct(deg, n, u, rng)) ups.push_back({u, v, 1});
    }
    shuffle_updates(ups, rng);
    return ups;
}

std::vector<Update> gen_random_multi_digraph(uint32_t n, uint32_t min_out, uint32_t max_out,
                                             uint64_t seed) {
    if (n < 2 || min_out < 1)
        throw std::invalid_argument("gen: bad multi digraph parameters");
    Rng rng(seed);
    std::vector<Update> ups;
    for (VertexId u = 0; u < n; ++u) {
        uint32_t deg = min_out + (uint32_t)rng.below(max_out - min_out + 1);
        for (uint32_t i = 0; i < deg; ++i) {
            VertexId v = (VertexId)rng.below(n - 1);
            if (v >= u) ++v;
            ups.push_back({u, v, 1});
        }
    }
    shuffle_updates(ups, rng);
    return ups;
}

std::vector<Update> gen_random_multigraph(uint32_t n, uint32_t m, bool allow_loops,
                                          uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen: multigraph needs n >= 2");
    Rng rng(seed);
    std::vector<Update> ups;
    ups.reserve(m);
    for (uint32_t i = 0; i < m; ++i) {
        VertexId u = (VertexId)rng.below(n);
        VertexId v;
        if (allow_loops && rng.below(5) == 0) {
            v = u;
        } else {
            v = (VertexId)rng.below(n - 1);
            if (v >= u) ++v;
        }
        ups.push_back({u, v, 1});
    }
    return ups;
}

TurnstileStream gen_random_turnstile(uint32_t n, Mode mode, uint32_t net_edges,
                                     uint32_t churn_pairs, bool allow_loops, uint64_t seed) {
    (void)mode;  // endpoint pairs serve as arcs or edges depending on the session
    Rng rng(seed);
    TurnstileStream out;
    out.net = gen_random_multigraph(n, net_edges, allow_loops, derive_seed(seed, 1));

    // Keyed merge: every churn pair gets two keys with the insert first, so
    // every prefix keeps multiplicities non-negative.
    struct Op {
        uint64_t key;
        Update up;
    };
    std::vector<Op> ops;
    ops.reserve(out.net.size() + 2 * churn_pairs);
    for (const auto& u : out.net) ops.push_back({rng.next(), u});
    for (uint32_t i = 0; i < churn_pairs; ++i) {
        VertexId u = (VertexId)rng.below(n);
        VertexId v = (VertexId)rng.below(n);
        if (!allow_loops && u == v) v = (v + 1) % n;
        uint64_t k1 = rng.next(), k2 = rng.next();
        if (k1 > k2) std::swap(k1, k2);
        if (k1 == k2) ++k2;
        ops.push_back({k1, Update{u, v, 1}});
        ops.push_back({k2, Update{u, v, -1}});
    }
    std::stable_sort(ops.begin(), ops.end(),
                     [](const Op& a, const Op& b) { return a.key < b.key; });
    out.updates.reserve(ops.size());
    for (const auto& op : ops) out.updates.push_back(op.up);
    return out;
}

UndirectedGadget gen_gadget_undirected(uint32_t t, uint32_t groups, uint64_t seed,
                                       Planted pattern) {
    uint32_t side = (uint32_t)std::lround(std::sqrt((double)t));
    if (t < 4 || side * side != t)
        throw std::invalid_argument("gadget: t must be a perfect square >= 4");
    if (groups < 1) throw std::invalid_argument("gadget: need at least one group");

    UndirectedGadget g;
    g.side = side;
    g.groups = groups;
    g.query_block = 1;
    g.n = 2 * side * (groups + 1);
    g.v0 = 0;  // inside V_0 = [0, 2*side)

    Rng rng(seed);
    for (uint32_t j = 1; j <= groups; ++j) {
        std::vector<uint8_t> bits(side * side, 0);
        for (uint32_t i = 0; i < side; ++i) {
            for (uint32_t k = 0; k < side; ++k) {
                uint8_t bit = pattern == Planted::AllOnes   ? 1
                              : pattern == Planted::AllZeros ? 0
                                                             : (uint8_t)rng.below(2);
                bits[i * side + k] = bit;
                if (bit) g.updates.push_back({g.a_vertex(j, i), g.b_vertex(j, k), 1});
            }
        }
        g.planted.push_back(std::move(bits));
    }
    // Completion edges: the query block's A side joined to all of V_0.
    for (uint32_t i = 0; i < side; ++i)
        for (VertexId v = 0; v < 2 * side; ++v)
            g.updates.push_back({g.a_vertex(g.query_block, i), v, 1});

    shuffle_updates(g.updates, rng);
    return g;
}

DirectedGadget gen_gadget_directed(uint32_t n, uint32_t t, uint64_t seed) {
    if (t < 1 || t > n / 2) throw std::invalid_argument("gadget: requires 1 <= t <= n/2");
    DirectedGadget g;
    g.n_param = n;
    g.t = t;
    g.n = 2 * n + 1;
    g.v0 = 0;

    Rng rng(seed);
    g.query_encoder = (VertexId)(n + 1 + rng.below(n));
    for (uint32_t e = 0; e < n; ++e) {
        VertexId enc = n + 1 + e;
        // random t-subset of targets {1..n}
        std::vector<VertexId> pool(n);
        std::iota(pool.begin(), pool.end(), 1);
        for (uint32_t i = 0; i < t; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
        pool.resize(t);
        std::sort(pool.begin(), pool.end());
        for (VertexId v : pool) g.updates.push_back({enc, v, 1});
        g.subsets.push_back(std::move(pool));
    }
    for (VertexId v = 0; v <= n; ++v) g.updates.push_back({v, g.query_encoder, 1});

    shuffle_updates(g.updates, rng);
    return g;
}

}  // namespace walks
