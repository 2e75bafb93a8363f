#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace walks {

using VertexId = uint32_t;

enum class Mode { Directed, Undirected };
enum class Model { Insertion, Turnstile };

// One stream record: an arc or undirected edge with a +-1 multiplicity delta.
// Orientation is a property of the session, not the record.
struct Update {
    VertexId tail = 0;
    VertexId head = 0;
    int delta = 1;
};

// An arc event as forwarded to sketch builders: always directed tail->head.
struct ArcEvent {
    VertexId tail = 0;
    VertexId head = 0;
    int delta = 1;
};

// Directed arc, used as the stored item in samplers.
struct Arc {
    VertexId tail = 0;
    VertexId head = 0;
    friend bool operator==(const Arc& a, const Arc& b) {
        return a.tail == b.tail && a.head == b.head;
    }
};

// A t-step walk is t+1 vertices, or the distinguished Fail outcome.
struct Walk {
    std::vector<VertexId> vertices;
    bool failed = false;

    static Walk fail() { return Walk{{}, true}; }
    bool ok() const { return !failed; }
    size_t steps() const { return vertices.empty() ? 0 : vertices.size() - 1; }

    friend bool operator==(const Walk& a, const Walk& b) {
        if (a.failed != b.failed) return false;
        return a.failed || a.vertices == b.vertices;
    }

    std::string to_string() const {
        if (failed) return "FAIL";
        std::string s;
        for (size_t i = 0; i < vertices.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(vertices[i]);
        }
        return s;
    }
};

}  // namespace walks
