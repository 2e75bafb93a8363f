#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "walks/types.hpp"

namespace walks {

// Linear sketch that samples an index with probability |f_i| / ||f||_1 from
// a turnstile stream of coordinate updates, or reports Fail (at most
// delta_s, in practice far less).
//
// Construction: every coordinate carries a fixed pseudorandom exponential
// scale, so the largest scaled coordinate is l1-distributed (an exponential
// race). The scaled vector is kept in two independent banks of sign-hashed
// counter arrays over geometric subsampling levels; the query recovers the
// largest coordinate from bank 0 and rejects unless the second bank and the
// candidate's deepest subsampling level agree (collisions in a single
// sparse array can otherwise fake a tie with the true winner). Scales are
// quantized to integers so that sketch state is an exact linear function of
// the stream: inserting and deleting the same item restores the state bit
// for bit.
class L1Sampler {
public:
    L1Sampler() = default;
    L1Sampler(uint32_t universe, double delta_s, uint64_t seed);

    void update(uint32_t index, int64_t delta);

    // Deterministic given the state; Fail is an expected outcome, not an error.
    std::optional<uint32_t> query() const;

    uint32_t universe() const { return universe_; }
    double delta_s() const { return delta_s_; }
    const std::vector<int64_t>& cells() const { return cells_; }

    static constexpr uint32_t kRows = 5;
    static constexpr uint32_t kBanks = 2;

private:
    uint32_t universe_ = 0;
    double delta_s_ = 0.5;
    uint64_t seed_ = 0;
    uint32_t width_ = 8;
    uint32_t levels_ = 1;
    std::vector<int64_t> cells_;  // banks * levels * kRows * width

    int64_t weight(uint32_t i) const;
    uint32_t depth(uint32_t i) const;  // deepest subsampling level holding i
    size_t cell_index(uint32_t bank, uint32_t level, uint32_t row, uint32_t i,
                      int* sign_out) const;
    int64_t estimate(uint32_t bank, uint32_t level, uint32_t i) const;
};

}  // namespace walks
