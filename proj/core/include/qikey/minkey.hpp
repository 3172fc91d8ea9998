#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qikey/dataset.hpp"
#include "qikey/filter.hpp"

namespace qikey {

struct GreedyStep {
    std::uint32_t column = 0;
    std::uint64_t gain = 0;  // sample pairs newly separated by this column
};

struct GreedyResult {
    AttributeSet key;                // chosen columns, ascending
    std::vector<GreedyStep> steps;   // selection order with per-step gains
    std::uint64_t residual_pairs = 0;  // sample pairs no attribute separates
    std::uint32_t sample_size = 0;
};

// Greedy set cover over all pairs of the given rows: repeatedly add the
// column with the largest gain
//   g_k = 1/2 * sum_i (|C_i|^2 - sum_a |D_a^(i)|^2)
// where refining by k splits block C_i into the D_a^(i). Ties break to the
// smallest column index. Stops when every block is a singleton or no column
// has positive gain (duplicate rows); duplicates surface as residual_pairs.
// Candidate evaluation is O(rows) per column via a precomputed lookup table.
GreedyResult greedy_minkey(std::span<const std::uint32_t> codes, std::uint32_t rows,
                           std::uint32_t columns);
GreedyResult greedy_minkey(const TupleSketch& sk);

// Minimum-cardinality column set separating every pair of the given rows,
// found by enumerating subsets in size-then-lexicographic order. Returns
// nullopt when duplicate rows make every set fail. Throws when columns > 24.
std::optional<AttributeSet> exact_minkey(std::span<const std::uint32_t> codes,
                                         std::uint32_t rows, std::uint32_t columns);
std::optional<AttributeSet> exact_minkey(const Dataset& ds);
std::optional<AttributeSet> exact_minkey(const TupleSketch& sk);

inline constexpr std::uint32_t kExactMinkeyColumnCap = 24;

}  // namespace qikey
