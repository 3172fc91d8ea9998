#include "qikey/separation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace qikey {

Partition Partition::trivial(std::size_t rows) {
    Partition p;
    p.block_of.assign(rows, 0);
    if (rows > 0) p.block_sizes.assign(1, static_cast<std::uint32_t>(rows));
    return p;
}

std::uint64_t unseparated_pairs(const Partition& p) {
    std::uint64_t total = 0;
    for (std::uint64_t s : p.block_sizes) total += s * (s - 1) / 2;
    return total;
}

namespace {

// Shared refinement core: keys[j] is the refining value for position j.
template <typename KeyAt>
Partition refine(const Partition& p, std::size_t count, KeyAt&& key_at,
                 RefineStrategy strategy) {
    if (p.block_of.size() != count)
        throw std::invalid_argument("partition does not cover the given rows");
    Partition out;
    out.block_of.resize(count);
    if (strategy == RefineStrategy::hash) {
        std::unordered_map<std::uint64_t, std::uint32_t> ids;
        ids.reserve(2 * count);
        for (std::size_t j = 0; j < count; ++j) {
            std::uint64_t key = (static_cast<std::uint64_t>(p.block_of[j]) << 32) | key_at(j);
            auto [it, inserted] = ids.try_emplace(key, out.num_blocks());
            if (inserted) out.block_sizes.push_back(0);
            out.block_of[j] = it->second;
            ++out.block_sizes[it->second];
        }
    } else {
        std::vector<std::uint32_t> order(count);
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (p.block_of[a] != p.block_of[b]) return p.block_of[a] < p.block_of[b];
            return key_at(a) < key_at(b);
        });
        std::uint32_t current = 0;
        for (std::size_t pos = 0; pos < count; ++pos) {
            std::uint32_t j = order[pos];
            if (pos > 0) {
                std::uint32_t prev = order[pos - 1];
                if (p.block_of[prev] != p.block_of[j] || key_at(prev) != key_at(j)) ++current;
            }
            out.block_of[j] = current;
        }
        if (count > 0) {
            out.block_sizes.assign(current + 1, 0);
            for (auto b : out.block_of) ++out.block_sizes[b];
        }
    }
    return out;
}

}  // namespace

Partition partition_by_attribute(const Partition& p, const Dataset& ds,
                                 std::span<const std::uint32_t> rows, std::uint32_t k,
                                 RefineStrategy strategy) {
    if (k >= ds.column_count()) throw std::out_of_range("column index out of range");
    auto col = ds.column(k);
    return refine(
        p, rows.size(), [&](std::size_t j) -> std::uint32_t { return col[rows[j]]; }, strategy);
}

Partition partition_by_attribute(const Partition& p, const LookupTable& lut, std::uint32_t k) {
    if (k >= lut.columns) throw std::out_of_range("column index out of range");
    const auto& ids = lut.block_ids[k];
    return refine(
        p, ids.size(), [&](std::size_t j) -> std::uint32_t { return ids[j]; },
        RefineStrategy::hash);
}

namespace {

LookupTable build_lookup_table_impl(std::uint32_t rows, std::uint32_t columns,
                                    auto&& code_at) {
    LookupTable lut;
    lut.columns = columns;
    lut.rows = rows;
    lut.block_ids.resize(columns);
    lut.group_counts.resize(columns);
    std::vector<std::uint32_t> order(rows);
    for (std::uint32_t k = 0; k < columns; ++k) {
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return code_at(a, k) < code_at(b, k);
        });
        auto& ids = lut.block_ids[k];
        ids.resize(rows);
        std::uint32_t current = 0;
        for (std::uint32_t pos = 0; pos < rows; ++pos) {
            if (pos > 0 && code_at(order[pos - 1], k) != code_at(order[pos], k)) ++current;
            ids[order[pos]] = current;
        }
        lut.group_counts[k] = rows > 0 ? current + 1 : 0;
    }
    return lut;
}

}  // namespace

LookupTable build_lookup_table(const Dataset& ds, std::span<const std::uint32_t> rows) {
    return build_lookup_table_impl(
        static_cast<std::uint32_t>(rows.size()), ds.column_count(),
        [&](std::uint32_t j, std::uint32_t k) { return ds.column(k)[rows[j]]; });
}

LookupTable build_lookup_table(std::span<const std::uint32_t> codes, std::uint32_t rows,
                               std::uint32_t columns) {
    if (codes.size() != static_cast<std::size_t>(rows) * columns)
        throw std::invalid_argument("code matrix size mismatch");
    return build_lookup_table_impl(rows, columns, [&](std::uint32_t j, std::uint32_t k) {
        return codes[static_cast<std::size_t>(j) * columns + k];
    });
}

std::uint64_t count_unseparated(const Dataset& ds, const AttributeSet& A) {
    A.validate_against(ds.column_count());
    const std::uint32_t n = ds.row_count();
    if (n < 2) return 0;
    if (A.empty()) return ds.pair_count();
    std::vector<std::uint32_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0u);
    Partition p = Partition::trivial(n);
    for (auto k : A.indices()) {
        p = partition_by_attribute(p, ds, rows, k);
        if (p.num_blocks() == n) return 0;
    }
    return unseparated_pairs(p);
}

bool is_bad(const Dataset& ds, const AttributeSet& A, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("is_bad: epsilon must be in (0, 1)");
    std::uint64_t gamma = count_unseparated(ds, A);
    return static_cast<double>(gamma) > epsilon * static_cast<double>(ds.pair_count());
}

}  // namespace qikey
