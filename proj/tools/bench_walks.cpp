// Throughput comparison of the serial batch-query reference against the
// OpenMP kernel, on a mid-size undirected sketch and a directed WR sketch.

#include <chrono>
#include <cstdio>

#include "walks/batch.hpp"
#include "walks/capacity.hpp"
#include "walks/gen.hpp"
#include "walks/state.hpp"

using namespace walks;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
void bench(const char* name, uint64_t count, uint64_t seed, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = run_walk_batch_serial(count, seed, fn);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel = run_walk_batch(count, seed, fn);
    double tp = seconds_since(t0);

    bool equal = serial == parallel;
    std::printf("%-24s %10.0f q/s serial %10.0f q/s parallel  speedup %.2fx  %s\n", name,
                count / ts, count / tp, ts / tp, equal ? "outputs-identical" : "MISMATCH");
}

}  // namespace

int main() {
    const uint64_t seed = 177;

    {
        auto ups = gen_random_multigraph(2000, 20000, false, seed);
        RunConfig cfg{Mode::Undirected, Model::Insertion, Algo::UndirectedSketch_, 2000, 64,
                      0.25, seed};
        SketchState st = build_from_stream(cfg, ups);
        bench("undirected t=64", 100000, seed, [&](uint64_t s) {
            Rng rng(s);
            return st.query(0, 64, rng);
        });
    }
    {
        auto ups = gen_random_multi_digraph(2000, 2, 8, seed);
        RunConfig cfg{Mode::Directed, Model::Insertion, Algo::Wr, 2000, 32, 1.0, seed};
        SketchState st = build_from_stream(cfg, ups);
        bench("directed wr t=32", 100000, seed, [&](uint64_t s) {
            Rng rng(s);
            return st.query(0, 32, rng);
        });
    }
    {
        // Fresh-sketch Monte-Carlo, the shape of the verification suites.
        auto ups = gen_random_multigraph(6, 18, false, seed);
        RunConfig cfg{Mode::Undirected, Model::Insertion, Algo::UndirectedSketch_, 6, 4, 0.25,
                      seed};
        bench("fresh-sketch mc n=6", 200000, seed, [&](uint64_t s) {
            RunConfig c = cfg;
            c.seed = derive_seed(s, 0);
            SketchState st = build_from_stream(c, ups);
            Rng rng(derive_seed(s, 1));
            return st.query(0, 4, rng);
        });
    }
    return 0;
}
