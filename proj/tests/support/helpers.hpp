#pragma once

// Shared test fixtures and independent oracles. Everything here recomputes
// results from first principles (pairwise scans, enumeration) so the library
// paths under test are checked against genuinely different machinery.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qikey/qikey.hpp"

namespace testsupport {

// O(n^2) pairwise oracle for the number of pairs a set fails to separate.
inline std::uint64_t brute_gamma(const qikey::Dataset& ds, const qikey::AttributeSet& A) {
    const std::uint32_t n = ds.row_count();
    std::uint64_t gamma = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            bool agree = true;
            for (auto c : A.indices()) {
                if (ds.code_at(i, c) != ds.code_at(j, c)) {
                    agree = false;
                    break;
                }
            }
            gamma += agree;
        }
    }
    return gamma;
}

// Same oracle over a row-major code matrix restricted to `attrs`.
inline std::uint64_t brute_gamma_codes(const std::vector<std::uint32_t>& codes,
                                       std::uint32_t rows, std::uint32_t m,
                                       const qikey::AttributeSet& attrs) {
    std::uint64_t gamma = 0;
    for (std::uint32_t i = 0; i < rows; ++i) {
        for (std::uint32_t j = i + 1; j < rows; ++j) {
            const auto* a = codes.data() + static_cast<std::size_t>(i) * m;
            const auto* b = codes.data() + static_cast<std::size_t>(j) * m;
            bool agree = true;
            for (auto c : attrs.indices()) {
                if (a[c] != b[c]) {
                    agree = false;
                    break;
                }
            }
            gamma += agree;
        }
    }
    return gamma;
}

// Gamma for every attribute subset (indexed by bitmask), via depth-first
// refinement over the subset lattice. m must be small.
inline std::vector<std::uint64_t> gamma_all_subsets(const qikey::Dataset& ds) {
    const std::uint32_t m = ds.column_count();
    const std::uint32_t n = ds.row_count();
    std::vector<std::uint64_t> gamma(std::size_t{1} << m);
    std::vector<std::uint32_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0u);
    auto dfs = [&](auto&& self, std::uint64_t mask, std::uint32_t next,
                   const qikey::Partition& p) -> void {
        gamma[mask] = qikey::unseparated_pairs(p);
        for (std::uint32_t k = next; k < m; ++k) {
            auto child = qikey::partition_by_attribute(p, ds, rows, k);
            self(self, mask | (std::uint64_t{1} << k), k + 1, child);
        }
    };
    dfs(dfs, 0, 0, qikey::Partition::trivial(n));
    return gamma;
}

// Random table: every column gets its own alphabet size in [1, max_card].
inline qikey::Dataset random_dataset(qikey::CounterRng& rng, std::uint32_t n, std::uint32_t m,
                                     std::uint32_t max_card) {
    std::vector<std::vector<std::string>> cols(m);
    for (auto& col : cols) {
        std::uint64_t card = 1 + rng.uniform_below(max_card);
        col.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i)
            col.push_back(std::to_string(rng.uniform_below(card)));
    }
    return qikey::Dataset::from_columns(std::move(cols));
}

// e_r from power sums via Newton's identities; independent of the DP.
inline double newton_elementary_symmetric(const std::vector<double>& s, std::uint32_t r) {
    std::vector<double> p(r + 1, 0.0);  // power sums p[j] = sum s_i^j
    for (std::uint32_t j = 1; j <= r; ++j)
        for (double x : s) p[j] += std::pow(x, j);
    std::vector<double> e(r + 1, 0.0);
    e[0] = 1.0;
    for (std::uint32_t kk = 1; kk <= r; ++kk) {
        double acc = 0.0;
        double sign = 1.0;
        for (std::uint32_t i = 1; i <= kk; ++i) {
            acc += sign * e[kk - i] * p[i];
            sign = -sign;
        }
        e[kk] = acc / kk;
    }
    return e[r];
}

// Exhaustive non-collision probability for integer clique sizes: every unit
// is a ball carrying its clique's color, draws enumerated outright.
inline double enumerate_non_collision(const std::vector<std::uint32_t>& sizes, std::uint32_t r,
                                      bool with_replacement) {
    std::vector<std::uint32_t> color;
    for (std::uint32_t c = 0; c < sizes.size(); ++c)
        color.insert(color.end(), sizes[c], c);
    const std::uint32_t balls = static_cast<std::uint32_t>(color.size());
    std::uint64_t good = 0, total = 0;
    std::vector<std::uint32_t> pick(r);
    auto rec = [&](auto&& self, std::uint32_t depth) -> void {
        if (depth == r) {
            ++total;
            for (std::uint32_t i = 0; i < r; ++i)
                for (std::uint32_t j = i + 1; j < r; ++j)
                    if (color[pick[i]] == color[pick[j]]) return;
            ++good;
            return;
        }
        for (std::uint32_t b = 0; b < balls; ++b) {
            if (!with_replacement) {
                bool used = false;
                for (std::uint32_t i = 0; i < depth; ++i)
                    if (pick[i] == b) used = true;
                if (used) continue;
            }
            pick[depth] = b;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return static_cast<double>(good) / static_cast<double>(total);
}

}  // namespace testsupport
