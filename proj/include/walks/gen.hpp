#pragma once

#include <cstdint>
#include <vector>

#include "walks/types.hpp"

namespace walks {

// All generators are deterministic functions of their parameters and seed.

// Simple digraph: every vertex gets between min_out and max_out distinct
// out-neighbors (never itself).
std::vector<Update> gen_random_simple_digraph(uint32_t n, uint32_t min_out, uint32_t max_out,
                                              uint64_t seed);

// Directed multigraph: like the above but arcs may repeat.
std::vector<Update> gen_random_multi_digraph(uint32_t n, uint32_t min_out, uint32_t max_out,
                                             uint64_t seed);

// Undirected multigraph with m edge occurrences; loops optional.
std::vector<Update> gen_random_multigraph(uint32_t n, uint32_t m, bool allow_loops,
                                          uint64_t seed);

// Turnstile stream: the net stream's inserts interleaved with churn_pairs
// insert-then-delete pairs. Net multiplicities stay non-negative at every
// prefix. Returns {full stream, net insertion-only reduction}.
struct TurnstileStream {
    std::vector<Update> updates;
    std::vector<Update> net;
};
TurnstileStream gen_random_turnstile(uint32_t n, Mode mode, uint32_t net_edges,
                                     uint32_t churn_pairs, bool allow_loops, uint64_t seed);

// Lower-bound construction for undirected walks: blocks V_0..V_groups of
// 2*sqrt(t) vertices each; block j >= 1 splits into A_j, B_j with a planted
// random bipartite bit matrix, and the query block's A side is fully joined
// to V_0. Requires t to be a perfect square >= 4.
enum class Planted { Random, AllOnes, AllZeros };

struct UndirectedGadget {
    uint32_t n = 0;
    uint32_t side = 0;  // sqrt(t)
    uint32_t groups = 0;
    uint32_t query_block = 1;
    VertexId v0 = 0;
    std::vector<Update> updates;
    // planted[j-1][i*side + k] = 1 iff edge (A_j[i], B_j[k]) exists
    std::vector<std::vector<uint8_t>> planted;

    VertexId a_vertex(uint32_t group, uint32_t i) const {
        return 2 * side + (group - 1) * 2 * side + i;
    }
    VertexId b_vertex(uint32_t group, uint32_t k) const {
        return 2 * side + (group - 1) * 2 * side + side + k;
    }
};
UndirectedGadget gen_gadget_undirected(uint32_t t, uint32_t groups, uint64_t seed,
                                       Planted pattern = Planted::Random);

// Lower-bound construction for directed walks: encoder vertices n+1..2n each
// point at a random t-subset of targets 1..n, and every vertex of 0..n
// points at the queried encoder. Requires t <= n/2.
struct DirectedGadget {
    uint32_t n_param = 0;
    uint32_t t = 0;
    uint32_t n = 0;  // 2*n_param + 1 vertices
    VertexId v0 = 0;
    VertexId query_encoder = 0;
    std::vector<Update> updates;
    std::vector<std::vector<VertexId>> subsets;  // S_u per encoder, sorted
};
DirectedGadget gen_gadget_directed(uint32_t n, uint32_t t, uint64_t seed);

}  // namespace walks
