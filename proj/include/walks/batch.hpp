#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "walks/oracle.hpp"
#include "walks/rng.hpp"
#include "walks/types.hpp"

namespace walks {

// Batch query kernels. Query i runs under derive_seed(master, i), so the
// OpenMP kernels produce bit-identical results to the serial references;
// the tests assert that and the bench target measures the speedup.

// fn: uint64_t query_seed -> Walk
template <typename Fn>
std::vector<Walk> run_walk_batch_serial(uint64_t count, uint64_t master_seed, Fn&& fn) {
    std::vector<Walk> out(count);
    for (uint64_t i = 0; i < count; ++i) out[i] = fn(derive_seed(master_seed, i));
    return out;
}

template <typename Fn>
std::vector<Walk> run_walk_batch(uint64_t count, uint64_t master_seed, Fn&& fn) {
    std::vector<Walk> out(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int64_t i = 0; i < (int64_t)count; ++i)
        out[(uint64_t)i] = fn(derive_seed(master_seed, (uint64_t)i));
    return out;
}

template <typename Fn>
WalkTally tally_walks_serial(uint64_t count, uint64_t master_seed, Fn&& fn) {
    WalkTally tally;
    for (uint64_t i = 0; i < count; ++i) tally.add(fn(derive_seed(master_seed, i)));
    return tally;
}

template <typename Fn>
WalkTally tally_walks(uint64_t count, uint64_t master_seed, Fn&& fn) {
#ifdef _OPENMP
    WalkTally tally;
#pragma omp parallel
    {
        WalkTally local;
#pragma omp for schedule(static)
        for (int64_t i = 0; i < (int64_t)count; ++i)
            local.add(fn(derive_seed(master_seed, (uint64_t)i)));
#pragma omp critical
        tally.merge(local);
    }
    return tally;
#else
    return tally_walks_serial(count, master_seed, fn);
#endif
}

template <typename Fn>
EndpointTally tally_endpoints(uint32_t n, uint64_t count, uint64_t master_seed, Fn&& fn) {
    EndpointTally tally(n);
#ifdef _OPENMP
#pragma omp parallel
    {
        EndpointTally local(n);
#pragma omp for schedule(static)
        for (int64_t i = 0; i < (int64_t)count; ++i)
            local.add(fn(derive_seed(master_seed, (uint64_t)i)));
#pragma omp critical
        {
            for (uint32_t v = 0; v < n; ++v) tally.counts[v] += local.counts[v];
            tally.fails += local.fails;
            tally.total += local.total;
        }
    }
#else
    for (uint64_t i = 0; i < count; ++i) tally.add(fn(derive_seed(master_seed, i)));
#endif
    return tally;
}

// Parallel fail counter for failure-rate measurements.
template <typename Fn>
FailureRate measure_failure_rate_parallel(uint64_t trials, uint64_t seed, Fn&& trial) {
    uint64_t fails = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : fails)
#endif
    for (int64_t i = 0; i < (int64_t)trials; ++i)
        if (trial(derive_seed(seed, (uint64_t)i)).failed) ++fails;
    FailureRate r;
    r.fails = fails;
    r.trials = trials;
    r.value = trials ? (double)fails / (double)trials : 0.0;
    r.sigma = trials ? std::sqrt(r.value * (1.0 - r.value) / (double)trials) : 0.0;
    return r;
}

}  // namespace walks
