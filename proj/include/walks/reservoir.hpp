#pragma once

#include <cstdint>
#include <vector>

#include "walks/rng.hpp"

namespace walks {

// Uniform sample of up to `capacity` stream items without replacement
// (algorithm R). The retained array order is stream-dependent, so callers
// that consume slots sequentially must call shuffle() once after the stream
// ends to make the order exchangeable.
template <typename T>
class ReservoirWOR {
public:
    ReservoirWOR() = default;
    explicit ReservoirWOR(uint32_t capacity) : capacity_(capacity) {}

    void feed(const T& item, Rng& rng) {
        ++seen_;
        if (held_.size() < capacity_) {
            held_.push_back(item);
            return;
        }
        uint64_t j = rng.below(seen_);
        if (j < capacity_) held_[j] = item;
    }

    void shuffle(Rng& rng) {
        for (size_t i = held_.size(); i > 1; --i) {
            size_t j = rng.below(i);
            std::swap(held_[i - 1], held_[j]);
        }
    }

    uint32_t capacity() const { return capacity_; }
    uint64_t seen() const { return seen_; }
    const std::vector<T>& items() const { return held_; }
    std::vector<T>& items() { return held_; }

private:
    uint32_t capacity_ = 0;
    uint64_t seen_ = 0;
    std::vector<T> held_;
};

// Uniform sample of `capacity` stream items with replacement: capacity
// independent single-slot reservoirs fed in lockstep. Cell i adopts the
// k-th item with probability 1/k, independently of the other cells.
template <typename T>
class ReservoirWR {
public:
    ReservoirWR() = default;
    explicit ReservoirWR(uint32_t capacity) : cells_(capacity) {}

    void feed(const T& item, Rng& rng) {
        ++seen_;
        for (auto& cell : cells_)
            if (rng.below(seen_) == 0) cell = item;
    }

    uint64_t seen() const { return seen_; }
    uint32_t capacity() const { return (uint32_t)cells_.size(); }
    bool empty() const { return seen_ == 0; }
    const T& cell(uint32_t i) const { return cells_[i]; }
    const std::vector<T>& cells() const { return cells_; }
    std::vector<T>& cells() { return cells_; }
    void set_seen(uint64_t s) { seen_ = s; }

private:
    uint64_t seen_ = 0;
    std::vector<T> cells_;
};

}  // namespace walks
