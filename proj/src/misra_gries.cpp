#include "walks/misra_gries.hpp"

namespace walks {

void MGTable::insert(VertexId u, const OverflowSink& sink) {
    for (auto& e : entries_) {
        if (e.neighbor == u) {
            ++e.estimate;
            return;
        }
    }
    entries_.push_back(Entry{u, 1});
    if (entries_.size() < capacity_ + 1) return;

    // Decrement pass in table-iteration order, one overflow arc per decrement.
    size_t w = 0;
    for (size_t r = 0; r < entries_.size(); ++r) {
        sink(Arc{entries_[r].neighbor, owner_});
        if (--entries_[r].estimate > 0) entries_[w++] = entries_[r];
    }
    entries_.resize(w);
}

int64_t MGTable::estimate(VertexId u) const {
    for (const auto& e : entries_)
        if (e.neighbor == u) return e.estimate;
    return 0;
}

ImportantArcStore mg_finalize(const std::vector<MGTable>& tables, uint32_t n) {
    ImportantArcStore store;
    store.out.resize(n);
    store.d1.assign(n, 0);
    for (const auto& tbl : tables) {
        for (const auto& e : tbl.entries()) {
            store.out[e.neighbor].push_back({tbl.owner(), e.estimate});
            store.d1[e.neighbor] += e.estimate;
        }
    }
    return store;
}

}  // namespace walks
