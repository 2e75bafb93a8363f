#include "walks/walker_undirected.hpp"

#include <cassert>
#include <stdexcept>

namespace walks {

Walk UndirectedSketch::query(VertexId v0, uint32_t steps, Rng& rng) const {
    if (v0 >= n_) throw std::out_of_range("walk: bad start vertex");

    Walk w;
    w.vertices.reserve(steps + 1);
    w.vertices.push_back(v0);
    // Per-query counters of consumed unimportant samples.
    std::vector<std::pair<VertexId, uint32_t>> consumed;
    consumed.reserve(steps + 1);
    for (uint32_t i = 0; i < steps; ++i) {
        VertexId v = w.vertices.back();
        int64_t d = degrees_.d[v];
        if (d <= 0) return Walk::fail();
        int64_t x = (int64_t)rng.below((uint64_t)d);
        if (x < e1_.d1[v]) {
            // Important branch: x conditioned on x < d1 is uniform, so it
            // doubles as the multiplicity-weighted index into v's E1 list.
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
            if (*cv >= cap_.value) return Walk::fail();
            const auto& cells = sampler_cells_[v];
            assert(!cells.empty());
            w.vertices.push_back(cells[*cv].head);
            ++*cv;
        }
    }
    return w;
}

size_t UndirectedSketch::stored_entries() const {
    size_t c = e1_.stored_entries();
    for (uint32_t u = 0; u < n_; ++u)
        if (!sampler_cells_[u].empty()) c += sampler_cells_[u].size();
    return c;
}

UndirectedSketchBuilder::UndirectedSketchBuilder(uint32_t n, Capacity cap, uint64_t seed)
    : n_(n), cap_(cap), rng_(seed) {
    tables_.reserve(n);
    samplers_.reserve(n);
    for (uint32_t u = 0; u < n; ++u) {
        tables_.emplace_back(u, cap_.value);
        samplers_.emplace_back(cap_.value);
    }
}

void UndirectedSketchBuilder::on_arc(const ArcEvent& e) {
    if (e.delta != 1) throw std::invalid_argument("insertion-only builder got a deletion");
    // The head's table decides importance; evicted arcs drop into their
    // tail's sampler.
    tables_[e.head].insert(e.tail,
                           [this](const Arc& a) { samplers_[a.tail].feed(a, rng_); });
}

UndirectedSketch UndirectedSketchBuilder::freeze(const StreamSession& session) const {
    ImportantArcStore e1 = mg_finalize(tables_, n_);
    std::vector<std::vector<Arc>> cells(n_);
    std::vector<int64_t> feeds(n_, 0);
    for (uint32_t u = 0; u < n_; ++u) {
        feeds[u] = (int64_t)samplers_[u].seen();
        if (samplers_[u].seen() > 0) cells[u] = samplers_[u].cells();
    }
    return UndirectedSketch(n_, cap_, session.degrees(), std::move(e1), std::move(cells),
                            std::move(feeds));
}

}  // namespace walks
