#pragma once

#include <cmath>
#include <cstdint>

namespace walks {

// One round of the splitmix64 output function. Used both as a seed mixer and
// as a stateless hash for sketch hash functions.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t hash2(uint64_t a, uint64_t b) { return mix64(a ^ mix64(b)); }
inline uint64_t hash3(uint64_t a, uint64_t b, uint64_t c) {
    return mix64(a ^ mix64(b ^ mix64(c)));
}

// Splittable per-query seed scheme: query i under master seed s uses
// mix64(s + (i+1)*golden). Documented in the README; queries are
// reproducible independently of execution order.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    return mix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

// xoshiro256++ seeded through splitmix64. Cheap to construct, which matters
// for the Monte-Carlo harnesses that build one generator per query.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        auto rotl = [](uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased uniform integer in [0, bound). Lemire's multiply-shift with
    // rejection; exact uniformity is load-bearing for the statistical tests.
    uint64_t below(uint64_t bound) {
        uint64_t x = next();
        __uint128_t m = (__uint128_t)x * bound;
        uint64_t lo = (uint64_t)m;
        if (lo < bound) {
            uint64_t thr = (0 - bound) % bound;
            while (lo < thr) {
                x = next();
                m = (__uint128_t)x * bound;
                lo = (uint64_t)m;
            }
        }
        return (uint64_t)(m >> 64);
    }

    // Uniform double in [0, 1).
    double unit() { return (next() >> 11) * 0x1.0p-53; }

    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

private:
    uint64_t s_[4];
};

// Exp(1) variate as a pure function of (seed-derived) hash bits, clamped to
// a range that keeps the quantized race weights inside 64 bits.
inline double exp_from_hash(uint64_t h) {
    double u = ((h >> 11) + 0.5) * 0x1.0p-53;  // (0, 1)
    double e = -std::log(u);
    if (e < 0x1.0p-20) e = 0x1.0p-20;
    if (e > 32.0) e = 32.0;
    return e;
}

}  // namespace walks
