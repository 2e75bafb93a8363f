#pragma once

#include <cstdint>
#include <vector>

#include "walks/capacity.hpp"
#include "walks/heavy_hitter.hpp"
#include "walks/l1_sampler.hpp"
#include "walks/misra_gries.hpp"
#include "walks/stream.hpp"
#include "walks/types.hpp"

namespace walks {

// Sampler universe under the padding rule: only widened when epsilon is
// below 1/n.
uint32_t sampler_universe(uint32_t n, double epsilon);

// ceil(2t + 16*log2(2t/epsilon)) and ceil(2C + 16*log2(2t/epsilon)).
uint32_t turnstile_sampler_count_directed(uint32_t t, double epsilon);
uint32_t turnstile_sampler_count_undirected(uint32_t t, double epsilon, uint32_t C);

// Frozen turnstile directed walker: per vertex, the ordered outputs of its
// successful l1 samplers. The i-th departure from u consumes the i-th
// output; a departure from a vertex with fewer than t successes fails the
// walk.
class TurnstileDirectedSketch {
public:
    TurnstileDirectedSketch() = default;
    TurnstileDirectedSketch(uint32_t n, uint32_t t, double epsilon, DegreeTable degrees,
                            std::vector<std::vector<VertexId>> successes)
        : n_(n),
          t_(t),
          epsilon_(epsilon),
          degrees_(std::move(degrees)),
          successes_(std::move(successes)) {}

    Walk query(VertexId v0, uint32_t steps, Rng& rng) const;

    uint32_t n() const { return n_; }
    uint32_t t() const { return t_; }
    double epsilon() const { return epsilon_; }
    const DegreeTable& degrees() const { return degrees_; }
    const std::vector<std::vector<VertexId>>& successes() const { return successes_; }

private:
    uint32_t n_ = 0;
    uint32_t t_ = 0;
    double epsilon_ = 0.0;
    DegreeTable degrees_;
    std::vector<std::vector<VertexId>> successes_;
};

class TurnstileDirectedBuilder : public ArcConsumer {
public:
    TurnstileDirectedBuilder(uint32_t n, uint32_t t, double epsilon, uint64_t seed);

    void on_arc(const ArcEvent& e) override;
    TurnstileDirectedSketch freeze(const StreamSession& session) const;

    uint32_t samplers_per_vertex() const { return per_vertex_; }
    const L1Sampler& sampler(VertexId u, uint32_t j) const {
        return samplers_[(size_t)u * per_vertex_ + j];
    }

private:
    uint32_t n_;
    uint32_t t_;
    double epsilon_;
    uint32_t per_vertex_;
    std::vector<L1Sampler> samplers_;
};

// Frozen turnstile undirected walker: E1 recovered from per-vertex heavy
// hitters, residual unimportant arcs sampled by the compensated l1
// samplers. Walks follow the same important/unimportant draw as the
// insertion-only sketch, Fail on a (C+1)-st unimportant departure or on a
// vertex with fewer than C successful samplers.
class TurnstileUndirectedSketch {
public:
    TurnstileUndirectedSketch() = default;
    TurnstileUndirectedSketch(uint32_t n, Capacity cap, double epsilon, DegreeTable degrees,
                              ImportantArcStore e1,
                              std::vector<std::vector<VertexId>> successes)
        : n_(n),
          cap_(cap),
          epsilon_(epsilon),
          degrees_(std::move(degrees)),
          e1_(std::move(e1)),
          successes_(std::move(successes)) {}

    Walk query(VertexId v0, uint32_t steps, Rng& rng) const;

    uint32_t n() const { return n_; }
    const Capacity& capacity() const { return cap_; }
    double epsilon() const { return epsilon_; }
    const DegreeTable& degrees() const { return degrees_; }
    const ImportantArcStore& e1() const { return e1_; }
    const std::vector<std::vector<VertexId>>& successes() const { return successes_; }

private:
    uint32_t n_ = 0;
    Capacity cap_;
    double epsilon_ = 0.0;
    DegreeTable degrees_;
    ImportantArcStore e1_;
    std::vector<std::vector<VertexId>> successes_;
};

class TurnstileUndirectedBuilder : public ArcConsumer {
public:
    TurnstileUndirectedBuilder(uint32_t n, uint32_t t, double epsilon, uint64_t seed);

    void on_arc(const ArcEvent& e) override;
    TurnstileUndirectedSketch freeze(const StreamSession& session);

    const Capacity& capacity() const { return cap_; }
    uint32_t samplers_per_vertex() const { return per_vertex_; }
    const L1Sampler& sampler(VertexId u, uint32_t j) const {
        return samplers_[(size_t)u * per_vertex_ + j];
    }
    const HHSketch& heavy_hitter(VertexId v) const { return hh_[v]; }

private:
    uint32_t n_;
    uint32_t t_;
    double epsilon_;
    Capacity cap_;
    uint32_t per_vertex_;
    std::vector<L1Sampler> samplers_;
    std::vector<HHSketch> hh_;
};

}  // namespace walks
