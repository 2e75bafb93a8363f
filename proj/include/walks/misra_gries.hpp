#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "walks/types.hpp"

namespace walks {

// Frequent-items table owned by vertex v over the stream of v's in-arc
// tails. Every insert first lands in the table; when the table would exceed
// its capacity every entry is decremented by one and each decrement hands
// one copy of the corresponding arc (w, v) to the overflow sink (the arc has
// become unimportant and belongs to w's sampler).
class MGTable {
public:
    struct Entry {
        VertexId neighbor;
        int64_t estimate;  // A_v(neighbor), always > 0 while stored
    };

    using OverflowSink = std::function<void(const Arc&)>;

    MGTable() = default;
    MGTable(VertexId owner, uint32_t capacity) : owner_(owner), capacity_(capacity) {}

    void insert(VertexId u, const OverflowSink& sink);

    VertexId owner() const { return owner_; }
    uint32_t capacity() const { return capacity_; }
    const std::vector<Entry>& entries() const { return entries_; }
    int64_t estimate(VertexId u) const;

private:
    VertexId owner_ = 0;
    uint32_t capacity_ = 0;
    std::vector<Entry> entries_;
};

// The finalized multiset E1 of important arcs, grouped by tail so the walk
// can draw out-arcs proportionally to f1. Stored as (head, multiplicity)
// records; the record count is at most the sum of the table sizes (<= n*C).
struct ImportantArcStore {
    struct OutArc {
        VertexId head;
        int64_t multiplicity;  // f1(tail, head) = A_head(tail)
    };

    std::vector<std::vector<OutArc>> out;  // indexed by tail
    std::vector<int64_t> d1;               // per-tail important out-degree

    size_t stored_entries() const {
        size_t c = 0;
        for (const auto& v : out) c += v.size();
        return c;
    }
    int64_t total_multiplicity() const {
        int64_t c = 0;
        for (const auto& v : d1) c += v;
        return c;
    }
};

// Collects surviving table entries: A_v(u) copies of arc (u, v) grouped
// under tail u.
ImportantArcStore mg_finalize(const std::vector<MGTable>& tables, uint32_t n);

}  // namespace walks
