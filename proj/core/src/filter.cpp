#include "qikey/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qikey/rng.hpp"

namespace qikey {

std::uint64_t required_samples(std::uint32_t m, double epsilon, SketchKind kind,
                               double constant) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("required_samples: epsilon must be in (0, 1)");
    if (!(constant > 0.0)) throw std::invalid_argument("required_samples: constant must be > 0");
    double denom = kind == SketchKind::tuple ? std::sqrt(epsilon) : epsilon;
    double x = constant * static_cast<double>(m) / denom;
    // Tolerate ~1 ulp of float noise so exact-integer targets stay exact.
    return static_cast<std::uint64_t>(std::ceil(x - x * 1e-12));
}

namespace {

void gather_row(const Dataset& ds, std::uint32_t row, std::vector<std::uint32_t>& out) {
    for (std::uint32_t j = 0; j < ds.column_count(); ++j) out.push_back(ds.code_at(row, j));
}

}  // namespace

TupleSketch build_tuple_sketch(const Dataset& ds, double epsilon, double constant,
                               std::uint64_t seed) {
    const std::uint64_t n = ds.row_count();
    const std::uint32_t m = ds.column_count();
    std::uint64_t r = std::min<std::uint64_t>(n, required_samples(m, epsilon, SketchKind::tuple,
                                                                  constant));
    TupleSketch sk;
    sk.epsilon = epsilon;
    sk.constant = constant;
    sk.seed = seed;
    sk.m = m;
    sk.source_rows = n;
    sk.column_names = ds.column_names();

    CounterRng rng(seed);
    sk.sample_rows = sample_without_replacement(n, r, rng);
    sk.codes.reserve(r * m);
    for (auto row : sk.sample_rows) gather_row(ds, row, sk.codes);
    return sk;
}

PairSketch build_pair_sketch(const Dataset& ds, double epsilon, double constant,
                             std::uint64_t seed) {
    const std::uint64_t n = ds.row_count();
    const std::uint32_t m = ds.column_count();
    std::uint64_t r = std::min<std::uint64_t>(ds.pair_count(),
                                              required_samples(m, epsilon, SketchKind::pair,
                                                               constant));
    PairSketch sk;
    sk.epsilon = epsilon;
    sk.constant = constant;
    sk.seed = seed;
    sk.m = m;
    sk.source_rows = n;
    sk.column_names = ds.column_names();
    sk.source_pairs.reserve(r);
    sk.left_codes.reserve(r * m);
    sk.right_codes.reserve(r * m);

    CounterRng rng(seed);
    for (std::uint64_t i = 0; i < r; ++i) {
        auto [a, b] = sample_distinct_pair(n, rng);
        sk.source_pairs.emplace_back(a, b);
        gather_row(ds, a, sk.left_codes);
        gather_row(ds, b, sk.right_codes);
    }
    return sk;
}

namespace {

bool rows_agree(const TupleSketch& sk, std::uint32_t a, std::uint32_t b,
                const AttributeSet& A) {
    auto ra = sk.row(a);
    auto rb = sk.row(b);
    for (auto c : A.indices())
        if (ra[c] != rb[c]) return false;
    return true;
}

// LSD radix sort on the fingerprint half of (fingerprint << 32 | index)
// keys; the index half never needs ordering.
void sort_by_fingerprint(std::vector<std::uint64_t>& keys) {
    constexpr std::uint32_t kBits = 11;
    constexpr std::uint32_t kBins = 1u << kBits;
    std::vector<std::uint64_t> tmp(keys.size());
    std::uint32_t counts[kBins];
    auto* src = &keys;
    auto* dst = &tmp;
    for (std::uint32_t shift = 32; shift < 64; shift += kBits) {
        std::fill(std::begin(counts), std::end(counts), 0u);
        for (auto k : *src) ++counts[(k >> shift) & (kBins - 1)];
        std::uint32_t offset = 0;
        for (auto& c : counts) {
            std::uint32_t next = offset + c;
            c = offset;
            offset = next;
        }
        for (auto k : *src) (*dst)[counts[(k >> shift) & (kBins - 1)]++] = k;
        std::swap(src, dst);
    }
    if (src != &keys) keys = *src;
}

}  // namespace

FilterDecision query(const TupleSketch& sk, const AttributeSet& A) {
    A.validate_against(sk.m);
    const std::uint32_t r = sk.size();
    if (r < 2) return {true, std::nullopt};
    if (A.empty()) return {false, {{sk.sample_rows[0], sk.sample_rows[1]}}};

    // Sort the sampled projections by a 32-bit fingerprint, then confirm
    // candidate runs with exact comparisons. Equal projections always share a
    // fingerprint, so every duplicate lands in some run; unequal projections
    // colliding in a run are filtered by the exact check.
    std::vector<std::uint64_t> keyed(r);
    for (std::uint32_t i = 0; i < r; ++i) {
        auto row = sk.row(i);
        std::uint64_t h = 0x9E3779B97F4A7C15ULL;
        for (auto c : A.indices()) {
            h ^= row[c] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
            h *= 0xBF58476D1CE4E5B9ULL;
        }
        keyed[i] = ((h ^ (h >> 32)) << 32) | i;
    }
    sort_by_fingerprint(keyed);
    std::size_t run_start = 0;
    for (std::size_t pos = 1; pos <= keyed.size(); ++pos) {
        if (pos < keyed.size() && (keyed[pos] >> 32) == (keyed[run_start] >> 32)) continue;
        for (std::size_t i = run_start; i < pos; ++i) {
            for (std::size_t j = i + 1; j < pos; ++j) {
                auto a = static_cast<std::uint32_t>(keyed[i] & 0xFFFFFFFFu);
                auto b = static_cast<std::uint32_t>(keyed[j] & 0xFFFFFFFFu);
                if (rows_agree(sk, a, b, A))
                    return {false, {{sk.sample_rows[a], sk.sample_rows[b]}}};
            }
        }
        run_start = pos;
    }
    return {true, std::nullopt};
}

FilterDecision query(const PairSketch& sk, const AttributeSet& A) {
    A.validate_against(sk.m);
    const std::uint32_t r = sk.size();
    const std::uint32_t m = sk.m;
    for (std::uint32_t i = 0; i < r; ++i) {
        const auto* left = sk.left_codes.data() + static_cast<std::size_t>(i) * m;
        const auto* right = sk.right_codes.data() + static_cast<std::size_t>(i) * m;
        bool agree = true;
        for (auto c : A.indices()) {
            if (left[c] != right[c]) {
                agree = false;
                break;
            }
        }
        if (agree) return {false, {sk.source_pairs[i]}};
    }
    return {true, std::nullopt};
}

}  // namespace qikey
