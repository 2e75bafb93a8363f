#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "walks/state.hpp"

namespace walks {

namespace {

constexpr char kMagic[4] = {'W', 'S', 'K', 'F'};
constexpr uint32_t kVersion = 1;

struct Writer {
    std::ofstream out;
    explicit Writer(const std::string& path) : out(path, std::ios::binary) {
        if (!out) throw std::runtime_error("cannot write state file: " + path);
    }
    void bytes(const void* p, size_t len) { out.write((const char*)p, (std::streamsize)len); }
    void u8(uint8_t v) { bytes(&v, 1); }
    void u32(uint32_t v) { bytes(&v, 4); }
    void u64(uint64_t v) { bytes(&v, 8); }
    void i64(int64_t v) { bytes(&v, 8); }
    void f64(double v) { bytes(&v, 8); }
};

struct Reader {
    std::ifstream in;
    explicit Reader(const std::string& path) : in(path, std::ios::binary) {
        if (!in) throw std::runtime_error("cannot open state file: " + path);
    }
    void bytes(void* p, size_t len) {
        in.read((char*)p, (std::streamsize)len);
        if (in.gcount() != (std::streamsize)len)
            throw std::runtime_error("state file truncated");
    }
    uint8_t u8() {
        uint8_t v;
        bytes(&v, 1);
        return v;
    }
    uint32_t u32() {
        uint32_t v;
        bytes(&v, 4);
        return v;
    }
    uint64_t u64() {
        uint64_t v;
        bytes(&v, 8);
        return v;
    }
    int64_t i64() {
        int64_t v;
        bytes(&v, 8);
        return v;
    }
    double f64() {
        double v;
        bytes(&v, 8);
        return v;
    }
};

void write_degrees(Writer& w, const DegreeTable& d) {
    for (auto v : d.d) w.i64(v);
    for (auto v : d.d_self) w.i64(v);
}

DegreeTable read_degrees(Reader& r, uint32_t n) {
    DegreeTable d(n);
    for (auto& v : d.d) v = r.i64();
    for (auto& v : d.d_self) v = r.i64();
    return d;
}

void write_arc_list(Writer& w, const std::vector<Arc>& arcs) {
    w.u32((uint32_t)arcs.size());
    for (const auto& a : arcs) {
        w.u32(a.tail);
        w.u32(a.head);
    }
}

std::vector<Arc> read_arc_list(Reader& r) {
    std::vector<Arc> arcs(r.u32());
    for (auto& a : arcs) {
        a.tail = r.u32();
        a.head = r.u32();
    }
    return arcs;
}

void write_store(Writer& w, const ImportantArcStore& e1) {
    for (const auto& lst : e1.out) {
        w.u32((uint32_t)lst.size());
        for (const auto& oa : lst) {
            w.u32(oa.head);
            w.i64(oa.multiplicity);
        }
    }
}

ImportantArcStore read_store(Reader& r, uint32_t n) {
    ImportantArcStore e1;
    e1.out.resize(n);
    e1.d1.assign(n, 0);
    for (uint32_t u = 0; u < n; ++u) {
        uint32_t c = r.u32();
        e1.out[u].resize(c);
        for (auto& oa : e1.out[u]) {
            oa.head = r.u32();
            oa.multiplicity = r.i64();
            e1.d1[u] += oa.multiplicity;
        }
    }
    return e1;
}

void write_id_lists(Writer& w, const std::vector<std::vector<VertexId>>& lists) {
    for (const auto& lst : lists) {
        w.u32((uint32_t)lst.size());
        for (auto v : lst) w.u32(v);
    }
}

std::vector<std::vector<VertexId>> read_id_lists(Reader& r, uint32_t n) {
    std::vector<std::vector<VertexId>> lists(n);
    for (auto& lst : lists) {
        lst.resize(r.u32());
        for (auto& v : lst) v = r.u32();
    }
    return lists;
}

}  // namespace

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::Wr: return "wr";
        case Algo::Wor: return "wor";
        case Algo::UndirectedSketch_: return "undirected-sketch";
        case Algo::TurnstileDirected: return "turnstile-directed";
        case Algo::TurnstileUndirected: return "turnstile-undirected";
    }
    return "?";
}

bool parse_algo(const std::string& s, Algo& out) {
    for (Algo a : {Algo::Wr, Algo::Wor, Algo::UndirectedSketch_, Algo::TurnstileDirected,
                   Algo::TurnstileUndirected}) {
        if (s == algo_name(a)) {
            out = a;
            return true;
        }
    }
    return false;
}

bool valid_combination(Algo algo, Mode mode, Model model) {
    switch (algo) {
        case Algo::Wr:
        case Algo::Wor:
            return mode == Mode::Directed && model == Model::Insertion;
        case Algo::UndirectedSketch_:
            return mode == Mode::Undirected && model == Model::Insertion;
        case Algo::TurnstileDirected:
            return mode == Mode::Directed && model == Model::Turnstile;
        case Algo::TurnstileUndirected:
            return mode == Mode::Undirected && model == Model::Turnstile;
    }
    return false;
}

const DegreeTable& SketchState::degrees() const {
    return std::visit([](const auto& sk) -> const DegreeTable& { return sk.degrees(); },
                      sketch);
}

Walk SketchState::query_loopless(VertexId v0, uint32_t steps, Rng& rng) const {
    return std::visit([&](const auto& sk) { return sk.query(v0, steps, rng); }, sketch);
}

Walk SketchState::query(VertexId v0, uint32_t steps, Rng& rng) const {
    return walk_with_self_loops(
        [this](VertexId s, uint32_t st, Rng& r) { return query_loopless(s, st, r); },
        degrees(), v0, steps, rng);
}

SketchState build_from_stream(const RunConfig& config, const std::vector<Update>& updates) {
    if (!valid_combination(config.algo, config.mode, config.model))
        throw std::invalid_argument("unsupported (algo, mode, model) combination");
    StreamSession session(config.n, config.mode, config.model);
    SketchState state;
    state.config = config;
    switch (config.algo) {
        case Algo::Wr: {
            DirectedWrBuilder b(config.n, config.t, config.seed);
            session.attach(&b);
            for (const auto& u : updates) session.ingest(u);
            state.sketch = b.freeze(session);
            break;
        }
        case Algo::Wor: {
            DirectedWorBuilder b(config.n, config.t, config.seed);
            session.attach(&b);
            for (const auto& u : updates) session.ingest(u);
            state.sketch = b.freeze(session);
            break;
        }
        case Algo::UndirectedSketch_: {
            UndirectedSketchBuilder b(config.n, Capacity(config.t, config.epsilon),
                                      config.seed);
            session.attach(&b);
            for (const auto& u : updates) session.ingest(u);
            state.sketch = b.freeze(session);
            break;
        }
        case Algo::TurnstileDirected: {
            TurnstileDirectedBuilder b(config.n, config.t, config.epsilon, config.seed);
            session.attach(&b);
            for (const auto& u : updates) session.ingest(u);
            state.sketch = b.freeze(session);
            break;
        }
        case Algo::TurnstileUndirected: {
            TurnstileUndirectedBuilder b(config.n, config.t, config.epsilon, config.seed);
            session.attach(&b);
            for (const auto& u : updates) session.ingest(u);
            state.sketch = b.freeze(session);
            break;
        }
    }
    return state;
}

std::vector<std::pair<std::string, uint64_t>> space_report(const SketchState& state) {
    std::vector<std::pair<std::string, uint64_t>> rep;
    rep.emplace_back("degree_words", 2ull * state.config.n);
    std::visit(
        [&](const auto& sk) {
            using T = std::decay_t<decltype(sk)>;
            if constexpr (std::is_same_v<T, DirectedWrSketch>) {
                rep.emplace_back("sampled_arcs", sk.stored_samples());
            } else if constexpr (std::is_same_v<T, DirectedWorSketch>) {
                rep.emplace_back("sampled_arcs", sk.stored_samples());
            } else if constexpr (std::is_same_v<T, UndirectedSketch>) {
                rep.emplace_back("important_arc_entries", sk.e1().stored_entries());
                rep.emplace_back("important_arc_multiplicity",
                                 (uint64_t)sk.e1().total_multiplicity());
                uint64_t cells = 0;
                for (uint32_t u = 0; u < sk.n(); ++u) cells += sk.sampler_cells()[u].size();
                rep.emplace_back("sampler_cells", cells);
                rep.emplace_back("capacity_C", sk.capacity().value);
            } else if constexpr (std::is_same_v<T, TurnstileDirectedSketch>) {
                uint64_t c = 0;
                for (const auto& s : sk.successes()) c += s.size();
                rep.emplace_back("frozen_sampler_outputs", c);
            } else if constexpr (std::is_same_v<T, TurnstileUndirectedSketch>) {
                rep.emplace_back("important_arc_entries", sk.e1().stored_entries());
                uint64_t c = 0;
                for (const auto& s : sk.successes()) c += s.size();
                rep.emplace_back("frozen_sampler_outputs", c);
                rep.emplace_back("capacity_C", sk.capacity().value);
            }
        },
        state.sketch);
    return rep;
}

void save_state(const std::string& path, const SketchState& state) {
    Writer w(path);
    w.bytes(kMagic, 4);
    w.u32(kVersion);
    w.u8((uint8_t)state.config.algo);
    w.u8((uint8_t)state.config.mode);
    w.u8((uint8_t)state.config.model);
    w.u32(state.config.n);
    w.u32(state.config.t);
    w.f64(state.config.epsilon);
    w.u64(state.config.seed);

    std::visit(
        [&](const auto& sk) {
            using T = std::decay_t<decltype(sk)>;
            write_degrees(w, sk.degrees());
            if constexpr (std::is_same_v<T, DirectedWrSketch>) {
                write_arc_list(w, sk.samples());
            } else if constexpr (std::is_same_v<T, DirectedWorSketch>) {
                for (const auto& r : sk.reservoirs()) write_arc_list(w, r);
            } else if constexpr (std::is_same_v<T, UndirectedSketch>) {
                write_store(w, sk.e1());
                for (uint32_t u = 0; u < sk.n(); ++u) {
                    write_arc_list(w, sk.sampler_cells()[u]);
                    w.i64(sk.sampler_feeds(u));
                }
            } else if constexpr (std::is_same_v<T, TurnstileDirectedSketch>) {
                write_id_lists(w, sk.successes());
            } else if constexpr (std::is_same_v<T, TurnstileUndirectedSketch>) {
                write_store(w, sk.e1());
                write_id_lists(w, sk.successes());
            }
        },
        state.sketch);
    if (!w.out) throw std::runtime_error("error while writing state file");
}

SketchState load_state(const std::string& path) {
    Reader r(path);
    char magic[4];
    r.bytes(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("not a sketch state file (bad magic)");
    if (r.u32() != kVersion) throw std::runtime_error("unsupported state file version");

    RunConfig cfg;
    uint8_t algo = r.u8();
    if (algo > (uint8_t)Algo::TurnstileUndirected)
        throw std::runtime_error("corrupt state file: bad algorithm tag");
    cfg.algo = (Algo)algo;
    cfg.mode = (Mode)r.u8();
    cfg.model = (Model)r.u8();
    cfg.n = r.u32();
    cfg.t = r.u32();
    cfg.epsilon = r.f64();
    cfg.seed = r.u64();
    if (cfg.n == 0) throw std::runtime_error("corrupt state file: n = 0");

    SketchState state;
    state.config = cfg;
    DegreeTable degrees = read_degrees(r, cfg.n);
    switch (cfg.algo) {
        case Algo::Wr: {
            auto samples = read_arc_list(r);
            if (samples.size() != (size_t)cfg.n * cfg.t)
                throw std::runtime_error("corrupt state file: sample count mismatch");
            state.sketch = DirectedWrSketch(cfg.n, cfg.t, std::move(degrees), std::move(samples));
            break;
        }
        case Algo::Wor: {
            std::vector<std::vector<Arc>> res(cfg.n);
            for (auto& lst : res) lst = read_arc_list(r);
            state.sketch = DirectedWorSketch(cfg.n, cfg.t, std::move(degrees), std::move(res));
            break;
        }
        case Algo::UndirectedSketch_: {
            Capacity cap(cfg.t, cfg.epsilon);
            auto e1 = read_store(r, cfg.n);
            std::vector<std::vector<Arc>> cells(cfg.n);
            std::vector<int64_t> feeds(cfg.n);
            for (uint32_t u = 0; u < cfg.n; ++u) {
                cells[u] = read_arc_list(r);
                feeds[u] = r.i64();
            }
            state.sketch = UndirectedSketch(cfg.n, cap, std::move(degrees), std::move(e1),
                                            std::move(cells), std::move(feeds));
            break;
        }
        case Algo::TurnstileDirected: {
            state.sketch = TurnstileDirectedSketch(cfg.n, cfg.t, cfg.epsilon,
                                                   std::move(degrees), read_id_lists(r, cfg.n));
            break;
        }
        case Algo::TurnstileUndirected: {
            Capacity cap(cfg.t, cfg.epsilon);
            auto e1 = read_store(r, cfg.n);
            state.sketch = TurnstileUndirectedSketch(cfg.n, cap, cfg.epsilon,
                                                     std::move(degrees), std::move(e1),
                                                     read_id_lists(r, cfg.n));
            break;
        }
    }
    return state;
}

void dump_state(std::ostream& out, const SketchState& state) {
    const auto& cfg = state.config;
    out << "algo=" << algo_name(cfg.algo)
        << " mode=" << (cfg.mode == Mode::Directed ? "directed" : "undirected")
        << " model=" << (cfg.model == Model::Insertion ? "insertion" : "turnstile")
        << " n=" << cfg.n << " t=" << cfg.t << " epsilon=" << cfg.epsilon
        << " seed=" << cfg.seed << "\n";
    for (const auto& [k, v] : space_report(state)) out << k << "=" << v << "\n";
    const auto& deg = state.degrees();
    for (uint32_t u = 0; u < cfg.n; ++u) {
        out << "v" << u << ": d=" << deg.d[u] << " d_self=" << deg.d_self[u];
        std::visit(
            [&](const auto& sk) {
                using T = std::decay_t<decltype(sk)>;
                if constexpr (std::is_same_v<T, UndirectedSketch>) {
                    out << " d1=" << sk.e1().d1[u] << " e1_entries=" << sk.e1().out[u].size()
                        << " sampler_cells=" << sk.sampler_cells()[u].size();
                } else if constexpr (std::is_same_v<T, DirectedWorSketch>) {
                    out << " reservoir=" << sk.reservoirs()[u].size();
                } else if constexpr (std::is_same_v<T, TurnstileDirectedSketch>) {
                    out << " successes=" << sk.successes()[u].size();
                } else if constexpr (std::is_same_v<T, TurnstileUndirectedSketch>) {
                    out << " d1=" << sk.e1().d1[u] << " successes=" << sk.successes()[u].size();
                }
            },
            state.sketch);
        out << "\n";
    }
}

}  // namespace walks
