#pragma once

#include <cstdint>

namespace qk {

// splitmix64: deterministic across platforms and standard libraries, unlike
// std::uniform_int_distribution. Everything seeded in this project flows
// through here so reports reproduce byte-for-byte.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // [0, n); n > 0
    uint64_t below(uint64_t n) { return next() % n; }

    // [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(uint32_t numer, uint32_t denom) { return below(denom) < numer; }
};

inline uint64_t fnv1a(const char* s) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001B3ull;
    return h;
}

} // namespace qk
