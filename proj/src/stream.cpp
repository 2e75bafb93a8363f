#include "walks/stream.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace walks {

StreamSession::StreamSession(uint32_t n, Mode mode, Model model)
    : n_(n), mode_(mode), model_(model), degrees_(n) {
    if (n == 0) throw std::invalid_argument("stream: vertex count must be >= 1");
}

void StreamSession::ingest(const Update& u) {
    if (u.tail >= n_ || u.head >= n_)
        throw std::out_of_range("stream: vertex id out of range");
    if (u.delta != 1 && u.delta != -1)
        throw std::invalid_argument("stream: delta must be +1 or -1");
    if (model_ == Model::Insertion && u.delta < 0)
        throw std::invalid_argument("stream: deletion in insertion-only session");

    if (u.tail == u.head) {
        // Self-loops never reach the sketches; only the reinsertion counters
        // advance. An undirected loop contributes both arc directions.
        degrees_.d_self[u.tail] += (mode_ == Mode::Undirected ? 2 : 1) * (int64_t)u.delta;
        return;
    }

    degrees_.d[u.tail] += u.delta;
    forward(ArcEvent{u.tail, u.head, u.delta});
    if (mode_ == Mode::Undirected) {
        degrees_.d[u.head] += u.delta;
        forward(ArcEvent{u.head, u.tail, u.delta});
    }
}

void StreamSession::forward(const ArcEvent& e) {
    forwarded_ += e.delta;
    for (auto* c : consumers_) c->on_arc(e);
}

std::vector<Update> parse_stream(std::istream& in, Model model) {
    std::vector<Update> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream ls(line);
        long long u = -1, v = -1;
        if (!(ls >> u >> v) || u < 0 || v < 0)
            throw std::runtime_error("stream parse error at line " + std::to_string(lineno) +
                                     ": expected two non-negative vertex ids");
        Update rec{(VertexId)u, (VertexId)v, 1};
        if (model == Model::Turnstile) {
            std::string tok;
            if (!(ls >> tok) || (tok != "+1" && tok != "-1"))
                throw std::runtime_error("stream parse error at line " +
                                         std::to_string(lineno) +
                                         ": turnstile record needs +1 or -1");
            rec.delta = (tok == "+1") ? 1 : -1;
        }
        std::string trailing;
        if (ls >> trailing)
            throw std::runtime_error("stream parse error at line " + std::to_string(lineno) +
                                     ": trailing tokens");
        out.push_back(rec);
    }
    return out;
}

std::vector<Update> parse_stream_file(const std::string& path, Model model) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stream file: " + path);
    return parse_stream(in, model);
}

void write_stream_file(const std::string& path, const std::vector<Update>& updates,
                       Model model) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write stream file: " + path);
    for (const auto& u : updates) {
        out << u.tail << ' ' << u.head;
        if (model == Model::Turnstile) out << ' ' << (u.delta > 0 ? "+1" : "-1");
        out << '\n';
    }
}

}  // namespace walks
