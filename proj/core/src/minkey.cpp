#include "qikey/minkey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "qikey/separation.hpp"

namespace qikey {

GreedyResult greedy_minkey(std::span<const std::uint32_t> codes, std::uint32_t rows,
                           std::uint32_t columns) {
    if (codes.size() != static_cast<std::size_t>(rows) * columns)
        throw std::invalid_argument("greedy_minkey: code matrix size mismatch");
    GreedyResult result;
    result.sample_size = rows;
    if (rows < 2) return result;

    LookupTable lut = build_lookup_table(codes, rows, columns);

    // Active blocks hold sample positions; singletons are retired as they
    // appear since no column can gain from them.
    std::vector<std::vector<std::uint32_t>> blocks(1);
    blocks[0].resize(rows);
    std::iota(blocks[0].begin(), blocks[0].end(), 0u);

    std::vector<bool> chosen(columns, false);
    std::vector<std::uint32_t> scratch_count;
    std::vector<std::uint32_t> touched;

    while (!blocks.empty()) {
        std::uint64_t best_gain2 = 0;
        std::uint32_t best_col = columns;
        for (std::uint32_t k = 0; k < columns; ++k) {
            if (chosen[k]) continue;
            const auto& ids = lut.block_ids[k];
            if (scratch_count.size() < lut.group_counts[k])
                scratch_count.resize(lut.group_counts[k], 0);
            std::uint64_t gain2 = 0;
            for (const auto& block : blocks) {
                touched.clear();
                for (auto j : block) {
                    if (scratch_count[ids[j]]++ == 0) touched.push_back(ids[j]);
                }
                std::uint64_t sum_sq = 0;
                for (auto g : touched) {
                    std::uint64_t d = scratch_count[g];
                    sum_sq += d * d;
                    scratch_count[g] = 0;
                }
                std::uint64_t c = block.size();
                gain2 += c * c - sum_sq;
            }
            if (gain2 > best_gain2) {
                best_gain2 = gain2;
                best_col = k;
            }
        }
        if (best_gain2 == 0) break;  // only duplicate rows remain

        chosen[best_col] = true;
        result.steps.push_back({best_col, best_gain2 / 2});

        const auto& ids = lut.block_ids[best_col];
        std::vector<std::vector<std::uint32_t>> next;
        std::vector<std::uint32_t> group_of;
        for (auto& block : blocks) {
            touched.clear();
            for (auto j : block) {
                auto g = ids[j];
                if (scratch_count.size() <= g) scratch_count.resize(g + 1, 0);
                if (scratch_count[g]++ == 0) touched.push_back(g);
            }
            if (touched.size() == 1) {
                scratch_count[touched[0]] = 0;
                if (block.size() >= 2) next.push_back(std::move(block));
                continue;
            }
            // Map group id -> slot in `next`, keeping only blocks of size >= 2.
            group_of.clear();
            for (auto g : touched) {
                std::uint32_t sz = scratch_count[g];
                scratch_count[g] = static_cast<std::uint32_t>(group_of.size());
                group_of.push_back(sz >= 2 ? static_cast<std::uint32_t>(next.size()) : UINT32_MAX);
                if (sz >= 2) next.emplace_back().reserve(sz);
            }
            for (auto j : block) {
                auto slot = group_of[scratch_count[ids[j]]];
                if (slot != UINT32_MAX) next[slot].push_back(j);
            }
            for (auto g : touched) scratch_count[g] = 0;
        }
        blocks = std::move(next);
    }

    for (const auto& block : blocks) {
        std::uint64_t s = block.size();
        result.residual_pairs += s * (s - 1) / 2;
    }
    std::vector<std::uint32_t> key_cols;
    key_cols.reserve(result.steps.size());
    for (const auto& st : result.steps) key_cols.push_back(st.column);
    result.key = AttributeSet(std::move(key_cols));
    return result;
}

GreedyResult greedy_minkey(const TupleSketch& sk) {
    return greedy_minkey(sk.codes, sk.size(), sk.m);
}

namespace {

struct RowHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 0x9E3779B97F4A7C15ULL;
        for (auto x : v) {
            h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

bool separates_all(std::span<const std::uint32_t> codes, std::uint32_t rows,
                   std::uint32_t columns, std::span<const std::uint32_t> attrs) {
    std::unordered_set<std::vector<std::uint32_t>, RowHash> seen;
    seen.reserve(2 * rows);
    std::vector<std::uint32_t> proj(attrs.size());
    for (std::uint32_t i = 0; i < rows; ++i) {
        const auto* row = codes.data() + static_cast<std::size_t>(i) * columns;
        for (std::size_t w = 0; w < attrs.size(); ++w) proj[w] = row[attrs[w]];
        if (!seen.insert(proj).second) return false;
    }
    return true;
}

}  // namespace

std::optional<AttributeSet> exact_minkey(std::span<const std::uint32_t> codes,
                                         std::uint32_t rows, std::uint32_t columns) {
    if (columns > kExactMinkeyColumnCap)
        throw std::invalid_argument("exact_minkey: refusing " + std::to_string(columns) +
                                    " columns (cap is " +
                                    std::to_string(kExactMinkeyColumnCap) + ")");
    if (codes.size() != static_cast<std::size_t>(rows) * columns)
        throw std::invalid_argument("exact_minkey: code matrix size mismatch");
    if (rows < 2) return AttributeSet{};

    std::vector<std::uint32_t> all(columns);
    std::iota(all.begin(), all.end(), 0u);
    if (!separates_all(codes, rows, columns, all)) return std::nullopt;

    // Size-then-lexicographic enumeration makes the answer deterministic.
    for (std::uint32_t size = 1; size <= columns; ++size) {
        std::vector<std::uint32_t> comb(size);
        std::iota(comb.begin(), comb.end(), 0u);
        while (true) {
            if (separates_all(codes, rows, columns, comb)) return AttributeSet(comb);
            // next combination
            std::int32_t i = static_cast<std::int32_t>(size) - 1;
            while (i >= 0 && comb[i] == columns - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (std::uint32_t j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return AttributeSet(all);  // unreachable: full set already separated
}

std::optional<AttributeSet> exact_minkey(const Dataset& ds) {
    const std::uint32_t n = ds.row_count(), m = ds.column_count();
    if (m > kExactMinkeyColumnCap)
        throw std::invalid_argument("exact_minkey: refusing " + std::to_string(m) +
                                    " columns (cap is " +
                                    std::to_string(kExactMinkeyColumnCap) + ")");
    std::vector<std::uint32_t> codes;
    codes.reserve(static_cast<std::size_t>(n) * m);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < m; ++j) codes.push_back(ds.code_at(i, j));
    return exact_minkey(codes, n, m);
}

std::optional<AttributeSet> exact_minkey(const TupleSketch& sk) {
    return exact_minkey(sk.codes, sk.size(), sk.m);
}

}  // namespace qikey
