#pragma once

#include <cstdint>

namespace tts {

// SplitMix64. All randomized pieces of the library use this generator so
// seeded outputs are identical across platforms and standard-library
// implementations (std::uniform_int_distribution is not portable).
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1; rejection sampling keeps it unbiased
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int below_int(int bound) { return (int)below((uint64_t)bound); }

    // uniform double in [0, 1)
    double next_double() { return (next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

// Deterministic stream splitting: derive an independent seed from a parent
// seed and a stream index (instance number, model tag, ...).
inline uint64_t split_seed(uint64_t seed, uint64_t stream) {
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL + stream * 0x9e3779b97f4a7c15ULL));
    mix.next();
    return mix.next();
}

}  // namespace tts
