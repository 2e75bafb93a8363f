#pragma once

#include <cstdint>
#include <vector>

#include "walks/reservoir.hpp"
#include "walks/stream.hpp"
#include "walks/types.hpp"

namespace walks {

// Frozen directed walker with per-vertex with-replacement samples: the i-th
// departure from u walks the i-th sample. Stores exactly n*t sample cells.
class DirectedWrSketch {
public:
    DirectedWrSketch() = default;
    DirectedWrSketch(uint32_t n, uint32_t t, DegreeTable degrees, std::vector<Arc> samples)
        : n_(n), t_(t), degrees_(std::move(degrees)), samples_(std::move(samples)) {}

    Walk query(VertexId v0, uint32_t steps, Rng& rng) const;

    uint32_t n() const { return n_; }
    uint32_t t() const { return t_; }
    const DegreeTable& degrees() const { return degrees_; }
    const std::vector<Arc>& samples() const { return samples_; }
    size_t stored_samples() const { return samples_.size(); }

private:
    uint32_t n_ = 0;
    uint32_t t_ = 0;
    DegreeTable degrees_;
    std::vector<Arc> samples_;  // cell (u, i) at u*t + i
};

class DirectedWrBuilder : public ArcConsumer {
public:
    DirectedWrBuilder(uint32_t n, uint32_t t, uint64_t seed);

    void on_arc(const ArcEvent& e) override;
    DirectedWrSketch freeze(const StreamSession& session) const;

private:
    uint32_t n_;
    uint32_t t_;
    Rng rng_;
    std::vector<ReservoirWR<Arc>> samplers_;
};

// Frozen directed walker for simple digraphs: per-vertex without-replacement
// reservoirs over out-neighbors, consumed in a freeze-time shuffled order.
// A departure re-walks a uniformly random already-used sample with
// probability d_used/d, otherwise takes the next unused one.
class DirectedWorSketch {
public:
    DirectedWorSketch() = default;
    DirectedWorSketch(uint32_t n, uint32_t t, DegreeTable degrees,
                      std::vector<std::vector<Arc>> reservoirs)
        : n_(n), t_(t), degrees_(std::move(degrees)), reservoirs_(std::move(reservoirs)) {}

    Walk query(VertexId v0, uint32_t steps, Rng& rng) const;

    uint32_t n() const { return n_; }
    uint32_t t() const { return t_; }
    const DegreeTable& degrees() const { return degrees_; }
    const std::vector<std::vector<Arc>>& reservoirs() const { return reservoirs_; }
    size_t stored_samples() const {
        size_t c = 0;
        for (const auto& r : reservoirs_) c += r.size();
        return c;
    }

private:
    uint32_t n_ = 0;
    uint32_t t_ = 0;
    DegreeTable degrees_;
    std::vector<std::vector<Arc>> reservoirs_;
};

class DirectedWorBuilder : public ArcConsumer {
public:
    DirectedWorBuilder(uint32_t n, uint32_t t, uint64_t seed);

    void on_arc(const ArcEvent& e) override;
    DirectedWorSketch freeze(const StreamSession& session);

private:
    uint32_t n_;
    uint32_t t_;
    Rng rng_;
    std::vector<ReservoirWOR<Arc>> samplers_;
};

}  // namespace walks
