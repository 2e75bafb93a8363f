#pragma once

#include <cstdint>
#include <vector>

#include "walks/types.hpp"

namespace walks {

// Turnstile l1 heavy hitter with one-sided estimates. A count-min array
// over the (entrywise non-negative at query time) frequency vector gives
// overestimates; subtracting the l1/(2k) noise allowance turns them into
// underestimates, so reported estimates never exceed the true frequency.
// Query enumerates the universe, which is what the small vertex-id
// universes here call for.
class HHSketch {
public:
    struct Item {
        uint32_t index;
        int64_t estimate;  // >= 0, underestimate of f_index
    };

    HHSketch() = default;
    HHSketch(uint32_t universe, uint32_t k, uint64_t seed, double fail_target = 1e-4);

    void update(uint32_t index, int64_t delta);

    // l1 is the exact total mass ||f||_1, maintained by the caller.
    // Membership: point estimate >= l1/k. Estimates: fhat - floor(l1/(2k)),
    // clamped at zero.
    std::vector<Item> query(int64_t l1) const;

    uint32_t universe() const { return universe_; }
    uint32_t k() const { return k_; }
    uint32_t rows() const { return rows_; }
    const std::vector<int64_t>& cells() const { return cells_; }

private:
    uint32_t universe_ = 0;
    uint32_t k_ = 1;
    uint64_t seed_ = 0;
    uint32_t rows_ = 5;
    uint32_t width_ = 8;
    std::vector<int64_t> cells_;

    uint32_t column(uint32_t row, uint32_t i) const;
};

}  // namespace walks
