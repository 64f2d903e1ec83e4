#pragma once

#include <cstdint>

namespace grt {

// splitmix64 stream; the one generator behind all seeded sampling, so
// reports are reproducible bit-for-bit across runs and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; simple modulo (bias is irrelevant
    // for test sampling and keeps the sequence spec trivial)
    uint64_t below(uint64_t bound) { return next() % bound; }

    int pick(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

private:
    uint64_t state_;
};

} // namespace grt
