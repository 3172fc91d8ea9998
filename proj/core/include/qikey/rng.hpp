#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qikey {

// Counter-based pseudo-random generator. Output i depends only on
// (seed, stream, i), so sketches built from the same seed are identical
// bit-for-bit across runs and platforms. The mixer is the splitmix64
// finalizer.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x5851F42D4C957F2DULL))) {}

    std::uint64_t next() {
        counter_ += 0x9E3779B97F4A7C15ULL;
        return mix(key_ ^ counter_);
    }

    // Unbiased integer in [0, bound). bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// r distinct values from [0, n), uniform without replacement, in sampling
// order. Sparse partial Fisher-Yates: O(r) time and memory independent of n.
std::vector<std::uint32_t> sample_without_replacement(std::uint64_t n, std::uint64_t r,
                                                      CounterRng& rng);

// Uniform unordered pair of distinct indices from [0, n), n >= 2.
std::pair<std::uint32_t, std::uint32_t> sample_distinct_pair(std::uint64_t n, CounterRng& rng);

}  // namespace qikey
