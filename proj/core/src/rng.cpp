#include "qikey/rng.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qikey {

std::uint64_t CounterRng::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // Lemire's multiply-then-reject method, no modulo bias.
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (lo < threshold) {
            x = next();
            m = static_cast<__uint128_t>(x) * bound;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

std::vector<std::uint32_t> sample_without_replacement(std::uint64_t n, std::uint64_t r,
                                                      CounterRng& rng) {
    if (r > n) throw std::invalid_argument("sample_without_replacement: r > n");
    std::vector<std::uint32_t> out;
    out.reserve(r);
    // Virtual Fisher-Yates over [0, n): only displaced slots are stored.
    std::unordered_map<std::uint64_t, std::uint64_t> displaced;
    displaced.reserve(2 * r);
    for (std::uint64_t i = 0; i < r; ++i) {
        std::uint64_t j = i + rng.uniform_below(n - i);
        auto it_j = displaced.find(j);
        std::uint64_t value_j = (it_j == displaced.end()) ? j : it_j->second;
        auto it_i = displaced.find(i);
        std::uint64_t value_i = (it_i == displaced.end()) ? i : it_i->second;
        displaced[j] = value_i;
        out.push_back(static_cast<std::uint32_t>(value_j));
    }
    return out;
}

std::pair<std::uint32_t, std::uint32_t> sample_distinct_pair(std::uint64_t n, CounterRng& rng) {
    if (n < 2) throw std::invalid_argument("sample_distinct_pair: need n >= 2");
    std::uint64_t a = rng.uniform_below(n);
    std::uint64_t b = rng.uniform_below(n - 1);
    if (b >= a) ++b;
    if (a > b) std::swap(a, b);
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

}  // namespace qikey
