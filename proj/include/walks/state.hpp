#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "walks/stream.hpp"
#include "walks/types.hpp"
#include "walks/walker_directed.hpp"
#include "walks/walker_turnstile.hpp"
#include "walks/walker_undirected.hpp"

namespace walks {

enum class Algo {
    Wr,
    Wor,
    UndirectedSketch_,
    TurnstileDirected,
    TurnstileUndirected,
};

const char* algo_name(Algo a);
bool parse_algo(const std::string& s, Algo& out);

// The five supported (algorithm, mode, model) pairings.
bool valid_combination(Algo algo, Mode mode, Model model);

struct RunConfig {
    Mode mode = Mode::Directed;
    Model model = Model::Insertion;
    Algo algo = Algo::Wr;
    uint32_t n = 0;
    uint32_t t = 1;
    double epsilon = 0.25;  // ignored by the perfect directed walkers
    uint64_t seed = 1;
};

// A frozen sketch of any algorithm plus the config it was built under.
// Queries compose the loopless walker with self-loop reinsertion, so walks
// are on the original input graph.
struct SketchState {
    RunConfig config;
    std::variant<DirectedWrSketch, DirectedWorSketch, UndirectedSketch,
                 TurnstileDirectedSketch, TurnstileUndirectedSketch>
        sketch;

    const DegreeTable& degrees() const;
    Walk query(VertexId v0, uint32_t steps, Rng& rng) const;
    Walk query_loopless(VertexId v0, uint32_t steps, Rng& rng) const;
};

// One pass over the updates through a StreamSession into the configured
// builder.
SketchState build_from_stream(const RunConfig& config, const std::vector<Update>& updates);

// Item-count space accounting (sampled arcs, important-arc records, degree
// words), printed by the ingest command.
std::vector<std::pair<std::string, uint64_t>> space_report(const SketchState& state);

// Versioned binary state file; load rejects bad magic/version/truncation.
void save_state(const std::string& path, const SketchState& state);
SketchState load_state(const std::string& path);
void dump_state(std::ostream& out, const SketchState& state);

}  // namespace walks
