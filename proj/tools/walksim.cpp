// Command-line driver: stream ingestion into frozen walk sketches, walk
// queries, statistical verification suites, and test-stream generation.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "walks/batch.hpp"
#include "walks/gen.hpp"
#include "walks/state.hpp"
#include "walks/stream.hpp"
#include "walks/verify.hpp"

using nlohmann::json;

namespace {

struct CliOptions {
    std::string mode = "directed";
    std::string model = "insertion";
    std::string algo = "wr";
    uint32_t n = 0;
    uint32_t t = 0;
    double epsilon = 0.25;
    uint64_t seed = 1;
    std::string in_path;
    std::string state_path;
    std::string out_path;
    int64_t start = 0;
    uint64_t count = 1;
    std::string suite;
    std::string kind;
};

walks::Mode parse_mode(const std::string& s) {
    if (s == "directed") return walks::Mode::Directed;
    if (s == "undirected") return walks::Mode::Undirected;
    throw CLI::ValidationError("--mode must be directed or undirected");
}

walks::Model parse_model(const std::string& s) {
    if (s == "insertion") return walks::Model::Insertion;
    if (s == "turnstile") return walks::Model::Turnstile;
    throw CLI::ValidationError("--model must be insertion or turnstile");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_ingest(const CliOptions& opt) {
    walks::RunConfig cfg;
    cfg.mode = parse_mode(opt.mode);
    cfg.model = parse_model(opt.model);
    if (!walks::parse_algo(opt.algo, cfg.algo))
        throw std::runtime_error("unknown --algo: " + opt.algo);
    cfg.n = opt.n;
    cfg.t = opt.t;
    cfg.epsilon = opt.epsilon;
    cfg.seed = opt.seed;
    if (cfg.n == 0) throw std::runtime_error("--n is required and must be >= 1");
    if (cfg.t == 0) throw std::runtime_error("--t is required and must be >= 1");
    if (!walks::valid_combination(cfg.algo, cfg.mode, cfg.model))
        throw std::runtime_error("unsupported (algo, mode, model) combination");

    auto updates = walks::parse_stream_file(opt.in_path, cfg.model);
    walks::SketchState state = walks::build_from_stream(cfg, updates);
    walks::save_state(opt.state_path, state);

    std::cout << "ingested " << updates.size() << " updates into " << opt.state_path << "\n";
    for (const auto& [k, v] : walks::space_report(state)) std::cout << k << "=" << v << "\n";
    return 0;
}

int cmd_walk(const CliOptions& opt) {
    walks::SketchState state = walks::load_state(opt.state_path);
    if (opt.start < 0 || (uint64_t)opt.start >= state.config.n)
        throw std::runtime_error("--start out of range");
    uint32_t steps = opt.t ? opt.t : state.config.t;
    if (steps > state.config.t)
        throw std::runtime_error("--t exceeds the sketch's walk length");

    auto walksout = walks::run_walk_batch(opt.count, opt.seed, [&](uint64_t qseed) {
        walks::Rng rng(qseed);
        return state.query((walks::VertexId)opt.start, steps, rng);
    });

    std::ofstream file;
    std::ostream& out = open_output(file, opt.out_path);
    for (const auto& w : walksout) out << w.to_string() << "\n";
    return 0;
}

int cmd_verify(const CliOptions& opt) {
    if (!walks::known_suite(opt.suite))
        throw std::runtime_error(
            "--suite must be one of: perfect, epsilon, failure, turnstile-equiv");
    auto checks = walks::run_suite(opt.suite, opt.seed);
    std::ofstream file;
    std::ostream& out = open_output(file, opt.out_path);
    bool all_pass = true;
    for (const auto& c : checks) {
        json rec{{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"pass", c.pass}};
        out << rec.dump() << "\n";
        all_pass = all_pass && c.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_gen(const CliOptions& opt) {
    if (opt.out_path.empty()) throw std::runtime_error("gen requires --out");
    std::vector<walks::Update> ups;
    if (opt.kind == "gadget-undirected") {
        auto g = walks::gen_gadget_undirected(opt.t, (uint32_t)std::max<uint64_t>(1, opt.count),
                                              opt.seed);
        ups = g.updates;
        std::cout << "gadget: n=" << g.n << " v0=" << g.v0 << " groups=" << g.groups << "\n";
    } else if (opt.kind == "gadget-directed") {
        auto g = walks::gen_gadget_directed(opt.n, opt.t, opt.seed);
        ups = g.updates;
        std::cout << "gadget: n=" << g.n << " v0=" << g.v0
                  << " query_encoder=" << g.query_encoder << "\n";
    } else if (opt.kind == "random-simple") {
        if (parse_mode(opt.mode) == walks::Mode::Directed) {
            ups = walks::gen_random_simple_digraph(opt.n, 1,
                                                   std::min(opt.n - 1, (uint32_t)3), opt.seed);
        } else {
            // distinct unordered pairs
            walks::Rng rng(opt.seed);
            std::vector<std::pair<uint32_t, uint32_t>> pairs;
            for (uint32_t u = 0; u < opt.n; ++u)
                for (uint32_t v = u + 1; v < opt.n; ++v) pairs.emplace_back(u, v);
            uint64_t m = std::min<uint64_t>(opt.count, pairs.size());
            for (uint64_t i = 0; i < m; ++i)
                std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
            for (uint64_t i = 0; i < m; ++i)
                ups.push_back({pairs[i].first, pairs[i].second, 1});
        }
    } else if (opt.kind == "random-multi") {
        ups = walks::gen_random_multigraph(opt.n, (uint32_t)opt.count, false, opt.seed);
    } else {
        throw std::runtime_error(
            "gen kind must be one of: gadget-directed, gadget-undirected, random-simple, "
            "random-multi");
    }
    walks::write_stream_file(opt.out_path, ups, walks::Model::Insertion);
    std::cout << "wrote " << ups.size() << " updates to " << opt.out_path << "\n";
    return 0;
}

int cmd_dump(const CliOptions& opt) {
    walks::SketchState state = walks::load_state(opt.state_path);
    std::ofstream file;
    std::ostream& out = open_output(file, opt.out_path);
    walks::dump_state(out, state);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-pass random-walk sketching over graph streams"};
    app.require_subcommand(1);
    CliOptions opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--mode", opt.mode, "directed | undirected");
        cmd->add_option("--model", opt.model, "insertion | turnstile");
        cmd->add_option("--algo", opt.algo,
                        "wr | wor | undirected-sketch | turnstile-directed | "
                        "turnstile-undirected");
        cmd->add_option("--n", opt.n, "vertex count");
        cmd->add_option("--t", opt.t, "walk length in steps");
        cmd->add_option("--epsilon", opt.epsilon, "target l1 simulation error");
        cmd->add_option("--seed", opt.seed, "64-bit seed");
        cmd->add_option("--in", opt.in_path, "input stream file");
        cmd->add_option("--state", opt.state_path, "sketch state file");
        cmd->add_option("--out", opt.out_path, "output file (default stdout)");
        cmd->add_option("--start", opt.start, "walk start vertex");
        cmd->add_option("--count", opt.count, "query count / edge count / group count");
        cmd->add_option("--suite", opt.suite,
                        "perfect | epsilon | failure | turnstile-equiv");
    };

    auto* ingest = app.add_subcommand("ingest", "one pass over a stream into a state file");
    auto* walk = app.add_subcommand("walk", "run walk queries against a state file");
    auto* verify = app.add_subcommand("verify", "run a statistical verification suite");
    auto* gen = app.add_subcommand("gen", "generate a test stream");
    auto* dump = app.add_subcommand("dump", "print a state file in readable form");
    for (auto* c : {ingest, walk, verify, gen, dump}) add_common(c);
    gen->add_option("kind", opt.kind,
                    "gadget-directed | gadget-undirected | random-simple | random-multi")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) return cmd_ingest(opt);
        if (*walk) return cmd_walk(opt);
        if (*verify) return cmd_verify(opt);
        if (*gen) return cmd_gen(opt);
        if (*dump) return cmd_dump(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
