#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "walks/rng.hpp"
#include "walks/types.hpp"

namespace walks {

// Exact per-vertex degree counters for the loopless graph plus the removed
// self-loop multiplicities. d[u] is the out-degree of u after self-loop
// removal (undirected edges count once per endpoint, as two opposite arcs).
struct DegreeTable {
    std::vector<int64_t> d;
    std::vector<int64_t> d_self;

    explicit DegreeTable(size_t n = 0) : d(n, 0), d_self(n, 0) {}
    int64_t total(VertexId u) const { return d[u] + d_self[u]; }
};

// Sketch builders implement this to receive non-loop arc events in stream
// order. An undirected edge update is forwarded as two arc events.
class ArcConsumer {
public:
    virtual ~ArcConsumer() = default;
    virtual void on_arc(const ArcEvent& e) = 0;
};

// Single-writer ingestion session. Tracks exact degrees, strips self-loops
// (a directed self-loop adds 1 to d_self, an undirected one adds 2), and
// fans non-loop updates out to attached consumers. Deletions that would
// drive an edge multiplicity negative violate the model's contract and are
// not detected; only aggregate degrees are tracked.
class StreamSession {
public:
    StreamSession(uint32_t n, Mode mode, Model model);

    void attach(ArcConsumer* c) { consumers_.push_back(c); }
    void ingest(const Update& u);

    uint32_t n() const { return n_; }
    Mode mode() const { return mode_; }
    Model model() const { return model_; }
    const DegreeTable& degrees() const { return degrees_; }
    int64_t forwarded_arc_events() const { return forwarded_; }

private:
    uint32_t n_;
    Mode mode_;
    Model model_;
    DegreeTable degrees_;
    std::vector<ArcConsumer*> consumers_;
    int64_t forwarded_ = 0;

    void forward(const ArcEvent& e);
};

// Text stream format: one record per line, `u v` in insertion mode and
// `u v +1` / `u v -1` in turnstile mode. Lines starting with '#' are
// comments. Throws std::runtime_error with the 1-based line number on a
// malformed record.
std::vector<Update> parse_stream(std::istream& in, Model model);
std::vector<Update> parse_stream_file(const std::string& path, Model model);
void write_stream_file(const std::string& path, const std::vector<Update>& updates,
                       Model model);

// Replays a loopless walk on the original graph: at each emitted position u,
// with probability d_self(u)/(d(u)+d_self(u)) emits u again, otherwise
// consumes the next loopless step. Exactly t steps are emitted; surplus
// loopless steps are discarded. Fail propagates; a walk too short for the
// consumed steps also yields Fail. Generic over the random source so the
// tests can drive it with scripted draws.
template <typename R>
Walk reinsert_self_loops(const Walk& loopless, const DegreeTable& degrees, uint32_t t,
                         R& rng) {
    if (loopless.failed) return Walk::fail();
    if (loopless.vertices.empty()) return Walk::fail();

    Walk out;
    out.vertices.reserve(t + 1);
    out.vertices.push_back(loopless.vertices[0]);
    size_t consumed = 0;
    for (uint32_t step = 0; step < t; ++step) {
        VertexId u = out.vertices.back();
        int64_t total = degrees.total(u);
        if (total <= 0) return Walk::fail();
        if ((int64_t)rng.below((uint64_t)total) < degrees.d_self[u]) {
            out.vertices.push_back(u);  // self-loop step
        } else {
            ++consumed;
            if (consumed >= loopless.vertices.size()) return Walk::fail();
            out.vertices.push_back(loopless.vertices[consumed]);
        }
    }
    return out;
}

// Query pipeline used by the CLI and tests: handles the start-vertex edge
// cases (d_total(v0)=0 fails; d(v0)=0 with self-loops never leaves v0) and
// otherwise composes a loopless walker query with reinsert_self_loops.
template <typename QueryFn>
Walk walk_with_self_loops(QueryFn&& loopless_query, const DegreeTable& degrees,
                          VertexId v0, uint32_t t, Rng& rng) {
    if (degrees.total(v0) == 0) return Walk::fail();
    Walk base;
    if (degrees.d[v0] == 0) {
        base.vertices = {v0};  // only self-loops at v0: the walk can never leave
    } else {
        base = loopless_query(v0, t, rng);
    }
    return reinsert_self_loops(base, degrees, t, rng);
}

}  // namespace walks
