#include "walks/l1_sampler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "walks/rng.hpp"

namespace walks {

namespace {
constexpr uint64_t kTagExp = 0x45585031;  // scale draws
constexpr uint64_t kTagLvl = 0x4c564c31;  // level membership
constexpr double kScale = 1048576.0;      // 2^20 quantization of 1/e
}  // namespace

L1Sampler::L1Sampler(uint32_t universe, double delta_s, uint64_t seed)
    : universe_(universe), delta_s_(delta_s), seed_(seed) {
    if (universe == 0) throw std::invalid_argument("l1 sampler: empty universe");
    if (!(delta_s > 0.0) || delta_s > 1.0)
        throw std::invalid_argument("l1 sampler: delta_s must be in (0, 1]");
    width_ = std::bit_ceil(std::max<uint32_t>(8, 2 * universe));
    width_ = std::min<uint32_t>(width_, 64);
    levels_ = std::bit_width(std::max<uint32_t>(universe, 2) - 1) + 1;
    cells_.assign((size_t)kBanks * levels_ * kRows * width_, 0);
}

int64_t L1Sampler::weight(uint32_t i) const {
    double e = exp_from_hash(hash3(seed_, kTagExp, i));
    return (int64_t)std::llround(kScale / e);
}

uint32_t L1Sampler::depth(uint32_t i) const {
    uint64_t h = hash3(seed_, kTagLvl, i);
    uint32_t z = (uint32_t)std::countl_zero(h | 1u);  // geometric, P[>=l] = 2^-l
    return std::min(z, levels_ - 1);
}

size_t L1Sampler::cell_index(uint32_t bank, uint32_t level, uint32_t row, uint32_t i,
                             int* sign_out) const {
    uint64_t h = hash3(seed_ + bank + 1, (uint64_t)level * kRows + row, i);
    *sign_out = (h >> 32) & 1 ? 1 : -1;
    return (((size_t)bank * levels_ + level) * kRows + row) * width_ + (uint32_t)(h % width_);
}

void L1Sampler::update(uint32_t index, int64_t delta) {
    if (index >= universe_) throw std::out_of_range("l1 sampler: index out of universe");
    const int64_t scaled = delta * weight(index);
    const uint32_t dep = depth(index);
    for (uint32_t bank = 0; bank < kBanks; ++bank) {
        for (uint32_t l = 0; l <= dep; ++l) {
            for (uint32_t r = 0; r < kRows; ++r) {
                int sign;
                size_t cell = cell_index(bank, l, r, index, &sign);
                cells_[cell] += sign * scaled;
            }
        }
    }
}

int64_t L1Sampler::estimate(uint32_t bank, uint32_t level, uint32_t i) const {
    int64_t vals[kRows];
    for (uint32_t r = 0; r < kRows; ++r) {
        int sign;
        size_t cell = cell_index(bank, level, r, i, &sign);
        vals[r] = sign * cells_[cell];
    }
    std::sort(vals, vals + kRows);
    return vals[kRows / 2];
}

namespace {
// Same sign and within 25% of the larger magnitude.
bool consistent(int64_t a, int64_t b) {
    if ((a > 0) != (b > 0)) return false;
    int64_t mag = std::max(std::llabs(a), std::llabs(b));
    return std::llabs(a - b) * 4 <= mag;
}
}  // namespace

std::optional<uint32_t> L1Sampler::query() const {
    // Candidate: the largest scaled coordinate recovered from bank 0.
    int64_t best = 0;
    uint32_t cand = universe_;
    for (uint32_t i = 0; i < universe_; ++i) {
        int64_t est = estimate(0, 0, i);
        if (std::llabs(est) > best) {
            best = std::llabs(est);
            cand = i;
        }
    }
    if (cand == universe_) return std::nullopt;  // zero state, or total cancellation

    // Accept/reject: the independent bank and the deepest subsampling level
    // must agree. Both hash families are independent of the race scales, so
    // rejection does not bias which index wins.
    const int64_t e0 = estimate(0, 0, cand);
    if (!consistent(e0, estimate(1, 0, cand))) return std::nullopt;
    const uint32_t dep = depth(cand);
    if (dep > 0 && !consistent(e0, estimate(0, dep, cand))) return std::nullopt;
    return cand;
}

}  // namespace walks
