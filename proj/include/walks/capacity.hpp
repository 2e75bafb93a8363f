#pragma once

#include <cstdint>

namespace walks {

// Per-vertex sample budget for the undirected walkers, derived from the
// walk length t and the target l1 simulation error epsilon:
//
//   delta = epsilon / (2t)
//   q     = 2 + log2(1/delta) / sqrt(t)
//   C     = ceil(4 * sqrt(t) * q / log2(q))
//
// The constructor checks (e*t/C^2)^C < delta, which is the bound the
// capacity choice exists to guarantee.
struct Capacity {
    uint32_t t = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    double q = 0.0;
    uint32_t value = 0;  // C

    Capacity() = default;
    Capacity(uint32_t t, double epsilon);

    // (e*t/C^2)^C < delta, evaluated in log space.
    static bool failure_bound_holds(uint32_t t, uint32_t C, double delta);
};

}  // namespace walks
