// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run with --quick for a fast smoke pass at reduced trial counts.

#include <cstdio>
#include <cstring>

#include "walks/verify.hpp"

int main(int argc, char** argv) {
    bool quick = false;
    uint64_t seed = 20240901;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
        if (std::strncmp(argv[i], "--seed=", 7) == 0) seed = std::strtoull(argv[i] + 7, nullptr, 10);
    }

    auto results = walks::run_acceptance(seed, quick);
    int failures = 0;
    for (const auto& r : results) {
        bool pass = r.pass();
        if (!pass) ++failures;
        std::printf("[%s] criterion %d: %s (%zu checks, worst margin %+.4f)\n",
                    pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.checks.size(),
                    r.worst_margin());
        for (const auto& c : r.checks) {
            if (!c.pass)
                std::printf("    FAILED %s: value=%.6f bound=%.6f\n", c.name.c_str(), c.value,
                            c.bound);
        }
    }
    std::printf("%d/%zu criteria passed\n", (int)results.size() - failures, results.size());
    return failures;
}
