#include "walks/walker_directed.hpp"

#include <cassert>
#include <stdexcept>

namespace walks {

namespace {

// Per-query visit counters. A t-step walk departs from at most t distinct
// vertices, so a short linear-scan list beats an n-sized array.
class VisitCounts {
public:
    explicit VisitCounts(uint32_t expected) { slots_.reserve(expected); }

    uint32_t bump(VertexId v) {
        for (auto& s : slots_) {
            if (s.first == v) return ++s.second;
        }
        slots_.emplace_back(v, 1);
        return 1;
    }

private:
    std::vector<std::pair<VertexId, uint32_t>> slots_;
};

}  // namespace

Walk DirectedWrSketch::query(VertexId v0, uint32_t steps, Rng& rng) const {
    (void)rng;  // the WR walk is deterministic given the sketch; rng kept for API symmetry
    if (v0 >= n_) throw std::out_of_range("walk: bad start vertex");
    if (steps > t_) throw std::invalid_argument("walk: steps exceed sketch capacity");

    Walk w;
    w.vertices.reserve(steps + 1);
    w.vertices.push_back(v0);
    VisitCounts visits(steps + 1);
    for (uint32_t i = 0; i < steps; ++i) {
        VertexId u = w.vertices.back();
        if (degrees_.d[u] <= 0) return Walk::fail();
        uint32_t k = visits.bump(u);
        assert(k <= t_);
        w.vertices.push_back(samples_[(size_t)u * t_ + (k - 1)].head);
    }
    return w;
}

DirectedWrBuilder::DirectedWrBuilder(uint32_t n, uint32_t t, uint64_t seed)
    : n_(n), t_(t), rng_(seed) {
    if (t == 0) throw std::invalid_argument("builder: t must be >= 1");
    samplers_.reserve(n);
    for (uint32_t u = 0; u < n; ++u) samplers_.emplace_back(t);
}

void DirectedWrBuilder::on_arc(const ArcEvent& e) {
    if (e.delta != 1) throw std::invalid_argument("insertion-only builder got a deletion");
    samplers_[e.tail].feed(Arc{e.tail, e.head}, rng_);
}

DirectedWrSketch DirectedWrBuilder::freeze(const StreamSession& session) const {
    std::vector<Arc> samples((size_t)n_ * t_);
    for (uint32_t u = 0; u < n_; ++u)
        for (uint32_t i = 0; i < t_; ++i) samples[(size_t)u * t_ + i] = samplers_[u].cell(i);
    return DirectedWrSketch(n_, t_, session.degrees(), std::move(samples));
}

Walk DirectedWorSketch::query(VertexId v0, uint32_t steps, Rng& rng) const {
    if (v0 >= n_) throw std::out_of_range("walk: bad start vertex");
    if (steps > t_) throw std::invalid_argument("walk: steps exceed sketch capacity");

    Walk w;
    w.vertices.reserve(steps + 1);
    w.vertices.push_back(v0);
    // (vertex, used-sample count) pairs, per query.
    std::vector<std::pair<VertexId, uint32_t>> used;
    used.reserve(steps + 1);
    for (uint32_t i = 0; i < steps; ++i) {
        VertexId u = w.vertices.back();
        int64_t d = degrees_.d[u];
        if (d <= 0) return Walk::fail();
        uint32_t* u_used = nullptr;
        for (auto& s : used)
            if (s.first == u) u_used = &s.second;
        if (!u_used) {
            used.emplace_back(u, 0u);
            u_used = &used.back().second;
        }
        const auto& res = reservoirs_[u];
        uint64_t x = rng.below((uint64_t)d);
        if (x < *u_used) {
            // Conditioned on this branch x is uniform over the used prefix.
            w.vertices.push_back(res[x].head);
        } else {
            assert(*u_used < res.size());
            w.vertices.push_back(res[*u_used].head);
            ++*u_used;
        }
    }
    return w;
}

DirectedWorBuilder::DirectedWorBuilder(uint32_t n, uint32_t t, uint64_t seed)
    : n_(n), t_(t), rng_(seed) {
    if (t == 0) throw std::invalid_argument("builder: t must be >= 1");
    samplers_.reserve(n);
    for (uint32_t u = 0; u < n; ++u) samplers_.emplace_back(t);
}

void DirectedWorBuilder::on_arc(const ArcEvent& e) {
    if (e.delta != 1) throw std::invalid_argument("insertion-only builder got a deletion");
    samplers_[e.tail].feed(Arc{e.tail, e.head}, rng_);
}

DirectedWorSketch DirectedWorBuilder::freeze(const StreamSession& session) {
    std::vector<std::vector<Arc>> reservoirs(n_);
    for (uint32_t u = 0; u < n_; ++u) {
        // Algorithm R leaves a stream-dependent array order; the sequential
        // consumption rule needs an exchangeable one.
        samplers_[u].shuffle(rng_);
        reservoirs[u] = samplers_[u].items();
    }
    return DirectedWorSketch(n_, t_, session.degrees(), std::move(reservoirs));
}

}  // namespace walks
