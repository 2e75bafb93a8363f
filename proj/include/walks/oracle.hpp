#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "walks/rng.hpp"
#include "walks/types.hpp"

namespace walks {

using Rational = boost::multiprecision::cpp_rational;

// Exact multiplicity matrix for small ground-truth instances. For an
// undirected graph f is symmetric and a self-loop is stored once on the
// diagonal but weighs twice in the degree (both arc directions).
struct DenseGraph {
    uint32_t n = 0;
    Mode mode = Mode::Undirected;
    std::vector<int64_t> f;

    DenseGraph() = default;
    DenseGraph(uint32_t n_in, Mode mode_in) : n(n_in), mode(mode_in), f((size_t)n_in * n_in, 0) {}

    int64_t& at(VertexId u, VertexId v) { return f[(size_t)u * n + v]; }
    int64_t at(VertexId u, VertexId v) const { return f[(size_t)u * n + v]; }

    int64_t loop_weight(VertexId u) const {
        return (mode == Mode::Undirected ? 2 : 1) * at(u, u);
    }
    int64_t degree_loopless(VertexId u) const {
        int64_t s = 0;
        for (VertexId v = 0; v < n; ++v)
            if (v != u) s += at(u, v);
        return s;
    }
    int64_t degree_total(VertexId u) const { return degree_loopless(u) + loop_weight(u); }

    // Replay oracle: exact graph defined by an update prefix.
    static DenseGraph from_updates(uint32_t n, Mode mode, const std::vector<Update>& ups);
    DenseGraph loopless() const;
};

// Exact probability of every complete t-step walk plus the mass of dead-end
// prefixes (walks that reach an out-degree-0 vertex early, which the
// simulators report as Fail).
struct WalkDistribution {
    std::map<std::vector<VertexId>, Rational> prob;
    Rational fail_mass = 0;

    Rational total() const;
};

// Number of distinct enumeration outcomes; used as the guard for
// exact_distribution. Saturates at cap.
uint64_t count_walk_outcomes(const DenseGraph& g, VertexId v0, uint32_t t, uint64_t cap);

// Depth-first enumeration of the exact walk distribution in rational
// arithmetic. Rejects instances with more than `guard` outcomes.
WalkDistribution exact_distribution(const DenseGraph& g, VertexId v0, uint32_t t,
                                    uint64_t guard = 1000000);

// Distribution of the walk endpoint after t steps, by repeated application
// of the transition operator. fail entry carries the dead-end mass.
struct EndpointMarginal {
    std::vector<Rational> p;
    Rational fail_mass = 0;
};
EndpointMarginal endpoint_marginal(const DenseGraph& g, VertexId v0, uint32_t t);

// Perfect reference sampler on the stored graph (loops included).
Walk sample_walk_exact(const DenseGraph& g, VertexId v0, uint32_t t, Rng& rng);

// Empirical outcome counts for a batch of walk queries.
struct WalkTally {
    std::map<std::vector<VertexId>, uint64_t> counts;
    uint64_t fails = 0;
    uint64_t total = 0;

    void add(const Walk& w) {
        ++total;
        if (w.failed)
            ++fails;
        else
            ++counts[w.vertices];
    }
    void merge(const WalkTally& other);
};

// l1 distance between empirical frequencies and the exact distribution,
// outcome for outcome (Fail compared against the exact dead-end mass).
// sigma = sqrt(K/N) with K = exact support size + 1 is a conservative
// multinomial scale: the statistic moves by at most 2/N per sample, and its
// mean offset under perfect sampling is below 0.8*sqrt(K/N).
struct L1Estimate {
    double value = 0.0;
    double sigma = 0.0;
};
L1Estimate empirical_l1(const WalkTally& tally, const WalkDistribution& exact);

// Endpoint-level counterpart used where full-walk enumeration is infeasible.
struct EndpointTally {
    std::vector<uint64_t> counts;
    uint64_t fails = 0;
    uint64_t total = 0;

    explicit EndpointTally(uint32_t n = 0) : counts(n, 0) {}
    void add(const Walk& w) {
        ++total;
        if (w.failed)
            ++fails;
        else
            ++counts[w.vertices.back()];
    }
};
L1Estimate empirical_endpoint_l1(const EndpointTally& tally, const EndpointMarginal& exact);

// Fraction of Fail outcomes over independent trials with a binomial 3-sigma
// error bar.
struct FailureRate {
    double value = 0.0;
    double sigma = 0.0;  // sqrt(p*(1-p)/trials) at the observed rate
    uint64_t fails = 0;
    uint64_t trials = 0;
};

template <typename TrialFn>
FailureRate measure_failure_rate(uint64_t trials, uint64_t seed, TrialFn&& trial) {
    FailureRate r;
    r.trials = trials;
    for (uint64_t i = 0; i < trials; ++i) {
        Walk w = trial(derive_seed(seed, i));
        if (w.failed) ++r.fails;
    }
    r.value = trials ? (double)r.fails / (double)trials : 0.0;
    double p = r.value;
    r.sigma = trials ? std::sqrt(p * (1.0 - p) / (double)trials) : 0.0;
    return r;
}

}  // namespace walks
