#include "walks/heavy_hitter.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "walks/rng.hpp"

namespace walks {

HHSketch::HHSketch(uint32_t universe, uint32_t k, uint64_t seed, double fail_target)
    : universe_(universe), k_(k), seed_(seed) {
    if (universe == 0) throw std::invalid_argument("heavy hitter: empty universe");
    if (k == 0) throw std::invalid_argument("heavy hitter: k must be >= 1");
    // Per-row overflow beyond l1/(2k) has probability <= 2k/width (Markov);
    // rows of independent hashes push the min-estimate failure under target.
    width_ = std::bit_ceil(std::max<uint32_t>(8, 8 * k));
    rows_ = std::max<uint32_t>(5, (uint32_t)std::ceil(std::log2(1.0 / fail_target) / 2.0));
    cells_.assign((size_t)rows_ * width_, 0);
}

uint32_t HHSketch::column(uint32_t row, uint32_t i) const {
    return (uint32_t)(hash3(seed_, row, i) % width_);
}

void HHSketch::update(uint32_t index, int64_t delta) {
    if (index >= universe_) throw std::out_of_range("heavy hitter: index out of universe");
    for (uint32_t r = 0; r < rows_; ++r) cells_[(size_t)r * width_ + column(r, index)] += delta;
}

std::vector<HHSketch::Item> HHSketch::query(int64_t l1) const {
    std::vector<Item> out;
    if (l1 <= 0) return out;
    const int64_t slack = l1 / (2 * (int64_t)k_);  // floor(l1 / 2k)
    for (uint32_t i = 0; i < universe_; ++i) {
        int64_t fhat = cells_[column(0, i)];
        for (uint32_t r = 1; r < rows_; ++r)
            fhat = std::min(fhat, cells_[(size_t)r * width_ + column(r, i)]);
        if (fhat <= 0) continue;
        if (fhat * (int64_t)k_ < l1) continue;  // below the l1/k membership threshold
        out.push_back(Item{i, std::max<int64_t>(0, fhat - slack)});
    }
    return out;
}

}  // namespace walks
