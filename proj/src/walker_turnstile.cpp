#include "walks/walker_turnstile.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "walks/rng.hpp"

namespace walks {

uint32_t sampler_universe(uint32_t n, double epsilon) {
    if (epsilon < 1.0 / (double)n) {
        double padded = std::ceil(1.0 / epsilon);
        if (padded > (double)n) return (uint32_t)padded;
    }
    return n;
}

uint32_t turnstile_sampler_count_directed(uint32_t t, double epsilon) {
    return (uint32_t)std::ceil(2.0 * t + 16.0 * std::log2(2.0 * t / epsilon));
}

uint32_t turnstile_sampler_count_undirected(uint32_t t, double epsilon, uint32_t C) {
    return (uint32_t)std::ceil(2.0 * C + 16.0 * std::log2(2.0 * t / epsilon));
}

Walk TurnstileDirectedSketch::query(VertexId v0, uint32_t steps, Rng& rng) const {
    (void)rng;  // all randomness is in the frozen sampler outputs
    if (v0 >= n_) throw std::out_of_range("walk: bad start vertex");
    if (steps > t_) throw std::invalid_argument("walk: steps exceed sketch capacity");

    Walk w;
    w.vertices.reserve(steps + 1);
    w.vertices.push_back(v0);
    std::vector<std::pair<VertexId, uint32_t>> visits;
    visits.reserve(steps + 1);
    for (uint32_t i = 0; i < steps; ++i) {
        VertexId u = w.vertices.back();
        if (degrees_.d[u] <= 0) return Walk::fail();
        if (successes_[u].size() < t_) return Walk::fail();
        uint32_t* k = nullptr;
        for (auto& s : visits)
            if (s.first == u) k = &s.second;
        if (!k) {
            visits.emplace_back(u, 0u);
            k = &visits.back().second;
        }
        assert(*k < successes_[u].size());
        w.vertices.push_back(successes_[u][(*k)++]);
    }
    return w;
}

TurnstileDirectedBuilder::TurnstileDirectedBuilder(uint32_t n, uint32_t t, double epsilon,
                                                   uint64_t seed)
    : n_(n), t_(t), epsilon_(epsilon) {
    if (t == 0) throw std::invalid_argument("builder: t must be >= 1");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument("builder: epsilon must be in (0, 1]");
    per_vertex_ = turnstile_sampler_count_directed(t, epsilon);
    const uint32_t universe = sampler_universe(n, epsilon);
    samplers_.reserve((size_t)n * per_vertex_);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t j = 0; j < per_vertex_; ++j)
            samplers_.emplace_back(universe, 0.5, hash3(seed, u, j));
}

void TurnstileDirectedBuilder::on_arc(const ArcEvent& e) {
    for (uint32_t j = 0; j < per_vertex_; ++j)
        samplers_[(size_t)e.tail * per_vertex_ + j].update(e.head, e.delta);
}

TurnstileDirectedSketch TurnstileDirectedBuilder::freeze(const StreamSession& session) const {
    std::vector<std::vector<VertexId>> successes(n_);
    for (uint32_t u = 0; u < n_; ++u) {
        for (uint32_t j = 0; j < per_vertex_; ++j) {
            auto out = samplers_[(size_t)u * per_vertex_ + j].query();
            if (out && *out < n_) successes[u].push_back(*out);
        }
    }
    return TurnstileDirectedSketch(n_, t_, epsilon_, session.degrees(), std::move(successes));
}

Walk TurnstileUndirectedSketch::query(VertexId v0, uint32_t steps, Rng& rng) const {
    if (v0 >= n_) throw std::out_of_range("walk: bad start vertex");

    Walk w;
    w.vertices.reserve(steps + 1);
    w.vertices.push_back(v0);
    std::vector<std::pair<VertexId, uint32_t>> consumed;
    consumed.reserve(steps + 1);
    const uint32_t C = cap_.value;
    for (uint32_t i = 0; i < steps; ++i) {
        VertexId v = w.vertices.back();
        int64_t d = degrees_.d[v];
        if (d <= 0) return Walk::fail();
        // A departure from a vertex with unimportant residual mass needs its
        // full complement of C successful samplers.
        if (d > e1_.d1[v] && successes_[v].size() < C) return Walk::fail();
        int64_t x = (int64_t)rng.below((uint64_t)d);
        if (x < e1_.d1[v]) {
            int64_t cum = 0;
            VertexId next = v;
            for (const auto& oa : e1_.out[v]) {
                cum += oa.multiplicity;
                if (x < cum) {
                    next = oa.head;
                    break;
                }
            }
            assert(x < cum);
            w.vertices.push_back(next);
        } else {
            uint32_t* cv = nullptr;
            for (auto& s : consumed)
                if (s.first == v) cv = &s.second;
            if (!cv) {
                consumed.emplace_back(v, 0u);
                cv = &consumed.back().second;
            }
            if (*cv >= C) return Walk::fail();
            w.vertices.push_back(successes_[v][(*cv)++]);
        }
    }
    return w;
}

TurnstileUndirectedBuilder::TurnstileUndirectedBuilder(uint32_t n, uint32_t t, double epsilon,
                                                       uint64_t seed)
    : n_(n), t_(t), epsilon_(epsilon), cap_(t, epsilon) {
    per_vertex_ = turnstile_sampler_count_undirected(t, epsilon, cap_.value);
    const uint32_t universe = sampler_universe(n, epsilon);
    samplers_.reserve((size_t)n * per_vertex_);
    hh_.reserve(n);
    for (uint32_t u = 0; u < n; ++u) {
        for (uint32_t j = 0; j < per_vertex_; ++j)
            samplers_.emplace_back(universe, 0.5, hash3(seed, u, j));
        hh_.emplace_back(universe, cap_.value, hash3(seed ^ 0x4848u, u, 0), 1e-4);
    }
}

void TurnstileUndirectedBuilder::on_arc(const ArcEvent& e) {
    for (uint32_t j = 0; j < per_vertex_; ++j)
        samplers_[(size_t)e.tail * per_vertex_ + j].update(e.head, e.delta);
    hh_[e.head].update(e.tail, e.delta);
}

TurnstileUndirectedSketch TurnstileUndirectedBuilder::freeze(const StreamSession& session) {
    const DegreeTable& degrees = session.degrees();
    ImportantArcStore e1;
    e1.out.resize(n_);
    e1.d1.assign(n_, 0);

    // Pass 1: recover important arcs per head vertex and compensate the
    // tails' samplers so they hold the unimportant residual vector.
    for (uint32_t v = 0; v < n_; ++v) {
        if (degrees.d[v] <= 0) continue;
        for (const auto& item : hh_[v].query(degrees.d[v])) {
            if (item.index >= n_ || item.estimate <= 0) continue;
            const VertexId u = item.index;
            e1.out[u].push_back({v, item.estimate});
            e1.d1[u] += item.estimate;
            for (uint32_t j = 0; j < per_vertex_; ++j)
                samplers_[(size_t)u * per_vertex_ + j].update(v, -item.estimate);
        }
    }

    // Pass 2: freeze each vertex's ordered successful sampler outputs.
    std::vector<std::vector<VertexId>> successes(n_);
    for (uint32_t u = 0; u < n_; ++u) {
        for (uint32_t j = 0; j < per_vertex_; ++j) {
            auto out = samplers_[(size_t)u * per_vertex_ + j].query();
            if (out && *out < n_) successes[u].push_back(*out);
        }
    }
    return TurnstileUndirectedSketch(n_, cap_, epsilon_, degrees, std::move(e1),
                                     std::move(successes));
}

}  // namespace walks
