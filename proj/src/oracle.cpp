#include "walks/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace walks {

DenseGraph DenseGraph::from_updates(uint32_t n, Mode mode, const std::vector<Update>& ups) {
    DenseGraph g(n, mode);
    for (const auto& u : ups) {
        if (u.tail >= n || u.head >= n) throw std::out_of_range("from_updates: bad vertex id");
        if (u.tail == u.head) {
            g.at(u.tail, u.tail) += u.delta;
        } else {
            g.at(u.tail, u.head) += u.delta;
            if (mode == Mode::Undirected) g.at(u.head, u.tail) += u.delta;
        }
    }
    return g;
}

DenseGraph DenseGraph::loopless() const {
    DenseGraph g = *this;
    for (VertexId u = 0; u < n; ++u) g.at(u, u) = 0;
    return g;
}

Rational WalkDistribution::total() const {
    Rational s = fail_mass;
    for (const auto& [w, p] : prob) s += p;
    return s;
}

uint64_t count_walk_outcomes(const DenseGraph& g, VertexId v0, uint32_t t, uint64_t cap) {
    // ways[v] = number of distinct prefixes of the current length ending at v.
    std::vector<uint64_t> ways(g.n, 0);
    ways[v0] = 1;
    uint64_t outcomes = 0;  // dead-end prefixes count as one outcome each
    for (uint32_t step = 0; step < t; ++step) {
        std::vector<uint64_t> next(g.n, 0);
        for (VertexId v = 0; v < g.n; ++v) {
            if (!ways[v]) continue;
            if (g.degree_total(v) == 0) {
                outcomes += ways[v];
                continue;
            }
            if (g.loop_weight(v) > 0) next[v] += ways[v];
            for (VertexId w = 0; w < g.n; ++w)
                if (w != v && g.at(v, w) > 0) next[w] += ways[v];
        }
        ways.swap(next);
        uint64_t live = 0;
        for (auto c : ways) live += c;
        if (outcomes > cap || live > cap) return cap + 1;
    }
    for (auto c : ways) outcomes += c;
    return outcomes > cap ? cap + 1 : outcomes;
}

namespace {

void enumerate(const DenseGraph& g, std::vector<VertexId>& prefix, const Rational& p,
               uint32_t remaining, WalkDistribution& out) {
    VertexId v = prefix.back();
    if (remaining == 0) {
        out.prob[prefix] += p;
        return;
    }
    int64_t dt = g.degree_total(v);
    if (dt == 0) {
        out.fail_mass += p;
        return;
    }
    int64_t lw = g.loop_weight(v);
    if (lw > 0) {
        prefix.push_back(v);
        enumerate(g, prefix, p * Rational(lw, dt), remaining - 1, out);
        prefix.pop_back();
    }
    for (VertexId w = 0; w < g.n; ++w) {
        if (w == v) continue;
        int64_t m = g.at(v, w);
        if (m <= 0) continue;
        prefix.push_back(w);
        enumerate(g, prefix, p * Rational(m, dt), remaining - 1, out);
        prefix.pop_back();
    }
}

}  // namespace

WalkDistribution exact_distribution(const DenseGraph& g, VertexId v0, uint32_t t,
                                    uint64_t guard) {
    if (v0 >= g.n) throw std::out_of_range("exact_distribution: bad start vertex");
    if (count_walk_outcomes(g, v0, t, guard) > guard)
        throw std::invalid_argument("exact_distribution: instance exceeds enumeration guard");
    WalkDistribution out;
    std::vector<VertexId> prefix{v0};
    if (g.degree_total(v0) == 0 && t > 0) {
        out.fail_mass = 1;
        return out;
    }
    enumerate(g, prefix, Rational(1), t, out);
    return out;
}

EndpointMarginal endpoint_marginal(const DenseGraph& g, VertexId v0, uint32_t t) {
    EndpointMarginal m;
    m.p.assign(g.n, Rational(0));
    m.p[v0] = 1;
    for (uint32_t step = 0; step < t; ++step) {
        std::vector<Rational> next(g.n, Rational(0));
        for (VertexId v = 0; v < g.n; ++v) {
            if (m.p[v] == 0) continue;
            int64_t dt = g.degree_total(v);
            if (dt == 0) {
                m.fail_mass += m.p[v];
                continue;
            }
            int64_t lw = g.loop_weight(v);
            if (lw > 0) next[v] += m.p[v] * Rational(lw, dt);
            for (VertexId w = 0; w < g.n; ++w)
                if (w != v && g.at(v, w) > 0) next[w] += m.p[v] * Rational(g.at(v, w), dt);
        }
        m.p.swap(next);
    }
    return m;
}

Walk sample_walk_exact(const DenseGraph& g, VertexId v0, uint32_t t, Rng& rng) {
    Walk w;
    w.vertices.reserve(t + 1);
    w.vertices.push_back(v0);
    for (uint32_t step = 0; step < t; ++step) {
        VertexId v = w.vertices.back();
        int64_t dt = g.degree_total(v);
        if (dt == 0) return Walk::fail();
        int64_t x = (int64_t)rng.below((uint64_t)dt);
        int64_t cum = g.loop_weight(v);
        if (x < cum) {
            w.vertices.push_back(v);
            continue;
        }
        VertexId chosen = v;
        for (VertexId u = 0; u < g.n; ++u) {
            if (u == v) continue;
            cum += g.at(v, u);
            if (x < cum) {
                chosen = u;
                break;
            }
        }
        w.vertices.push_back(chosen);
    }
    return w;
}

void WalkTally::merge(const WalkTally& other) {
    for (const auto& [k, c] : other.counts) counts[k] += c;
    fails += other.fails;
    total += other.total;
}

L1Estimate empirical_l1(const WalkTally& tally, const WalkDistribution& exact) {
    if (tally.total == 0) throw std::invalid_argument("empirical_l1: empty sample");
    const double n = (double)tally.total;
    double l1 = 0.0;
    for (const auto& [w, p] : exact.prob) {
        auto it = tally.counts.find(w);
        double emp = it == tally.counts.end() ? 0.0 : (double)it->second / n;
        l1 += std::abs(emp - (double)p);
    }
    for (const auto& [w, c] : tally.counts)
        if (!exact.prob.count(w)) l1 += (double)c / n;
    l1 += std::abs((double)tally.fails / n - (double)exact.fail_mass);

    L1Estimate est;
    est.value = l1;
    est.sigma = std::sqrt((double)(exact.prob.size() + 1) / n);
    return est;
}

L1Estimate empirical_endpoint_l1(const EndpointTally& tally, const EndpointMarginal& exact) {
    if (tally.total == 0) throw std::invalid_argument("empirical_endpoint_l1: empty sample");
    const double n = (double)tally.total;
    double l1 = 0.0;
    for (size_t v = 0; v < exact.p.size(); ++v)
        l1 += std::abs((double)tally.counts[v] / n - (double)exact.p[v]);
    l1 += std::abs((double)tally.fails / n - (double)exact.fail_mass);

    L1Estimate est;
    est.value = l1;
    est.sigma = std::sqrt((double)(exact.p.size() + 1) / n);
    return est;
}

}  // namespace walks
