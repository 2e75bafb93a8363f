#pragma once

#include <cstdint>
#include <vector>

#include "walks/capacity.hpp"
#include "walks/misra_gries.hpp"
#include "walks/reservoir.hpp"
#include "walks/stream.hpp"
#include "walks/types.hpp"

namespace walks {

// Frozen undirected walker: the important-arc multiset E1 (from per-vertex
// Misra-Gries tables) plus C with-replacement samples of unimportant
// out-arcs per vertex. A walk fails once some vertex needs a (C+1)-st
// unimportant departure.
class UndirectedSketch {
public:
    UndirectedSketch() = default;
    UndirectedSketch(uint32_t n, Capacity cap, DegreeTable degrees, ImportantArcStore e1,
                     std::vector<std::vector<Arc>> sampler_cells,
                     std::vector<int64_t> sampler_feeds)
        : n_(n),
          cap_(cap),
          degrees_(std::move(degrees)),
          e1_(std::move(e1)),
          sampler_cells_(std::move(sampler_cells)),
          sampler_feeds_(std::move(sampler_feeds)) {}

    Walk query(VertexId v0, uint32_t steps, Rng& rng) const;

    uint32_t n() const { return n_; }
    const Capacity& capacity() const { return cap_; }
    const DegreeTable& degrees() const { return degrees_; }
    const ImportantArcStore& e1() const { return e1_; }
    const std::vector<std::vector<Arc>>& sampler_cells() const { return sampler_cells_; }
    int64_t sampler_feeds(VertexId u) const { return sampler_feeds_[u]; }

    // Item-count space accounting: E1 records plus occupied sampler cells.
    size_t stored_entries() const;

private:
    uint32_t n_ = 0;
    Capacity cap_;
    DegreeTable degrees_;
    ImportantArcStore e1_;
    std::vector<std::vector<Arc>> sampler_cells_;  // per vertex, empty or C cells
    std::vector<int64_t> sampler_feeds_;           // arcs handed to each sampler
};

class UndirectedSketchBuilder : public ArcConsumer {
public:
    UndirectedSketchBuilder(uint32_t n, Capacity cap, uint64_t seed);

    void on_arc(const ArcEvent& e) override;
    UndirectedSketch freeze(const StreamSession& session) const;

    const std::vector<MGTable>& tables() const { return tables_; }

private:
    uint32_t n_;
    Capacity cap_;
    Rng rng_;
    std::vector<MGTable> tables_;
    std::vector<ReservoirWR<Arc>> samplers_;
};

}  // namespace walks
