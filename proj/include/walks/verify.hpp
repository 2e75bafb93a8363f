#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace walks {

struct Check {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    double worst_margin() const;
};

// The nine acceptance criteria at their pinned tolerances.
CriterionResult criterion_perfect_wr(uint64_t seed, uint64_t queries = 500000);
CriterionResult criterion_perfect_wor(uint64_t seed, uint64_t queries = 500000);
CriterionResult criterion_undirected_epsilon(uint64_t seed, uint64_t queries = 200000);
CriterionResult criterion_capacity_grid();
CriterionResult criterion_mg_bounds(uint64_t seed, uint32_t streams = 1000);
CriterionResult criterion_space_accounting(uint64_t seed);
CriterionResult criterion_turnstile_equivalence(uint64_t seed, uint64_t queries = 30000);
CriterionResult criterion_l1_sampler_contract(uint64_t seed, uint32_t trials = 10000);
CriterionResult criterion_self_loop_reinsertion(uint64_t seed, uint64_t queries = 500000);

std::vector<CriterionResult> run_acceptance(uint64_t seed, bool quick = false);

// CLI verification suites (perfect, epsilon, failure, turnstile-equiv).
bool known_suite(const std::string& name);
std::vector<Check> run_suite(const std::string& name, uint64_t seed, bool quick = false);

}  // namespace walks
