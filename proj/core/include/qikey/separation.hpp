#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qikey/dataset.hpp"

namespace qikey {

// Disjoint-clique structure of the auxiliary graph over a row set: two rows
// share a block iff they agree on every attribute used to build the
// partition. block_of is positional, aligned with the row list the partition
// was built over. Block ids are dense and every block is non-empty.
struct Partition {
    std::vector<std::uint32_t> block_of;
    std::vector<std::uint32_t> block_sizes;

    std::uint32_t num_blocks() const { return static_cast<std::uint32_t>(block_sizes.size()); }
    std::size_t covered_rows() const { return block_of.size(); }

    static Partition trivial(std::size_t rows);
};

// Unseparated pairs implied by the blocks: sum of |b|(|b|-1)/2.
std::uint64_t unseparated_pairs(const Partition& p);

enum class RefineStrategy {
    hash,  // bucket by (old block, code); block ids in first-encounter order
    sort,  // sort by (old block, code); block ids in sorted order
};

// Refine p by the value of column k. p must cover exactly the given rows
// (positionally). The two strategies yield the same partition up to block
// relabeling; both are deterministic.
Partition partition_by_attribute(const Partition& p, const Dataset& ds,
                                 std::span<const std::uint32_t> rows, std::uint32_t k,
                                 RefineStrategy strategy = RefineStrategy::hash);

// Single-attribute block ids for every row of a fixed row set, one array per
// column: block_ids[k][j] is the block of row j under the partition by
// column k alone (sorted-order ids). Trades an extra m-factor of space for
// linear-time refinement.
struct LookupTable {
    std::uint32_t columns = 0;
    std::uint32_t rows = 0;
    std::vector<std::vector<std::uint32_t>> block_ids;  // [k][j]
    std::vector<std::uint32_t> group_counts;            // blocks per column
};

LookupTable build_lookup_table(const Dataset& ds, std::span<const std::uint32_t> rows);
// codes is row-major, rows x columns.
LookupTable build_lookup_table(std::span<const std::uint32_t> codes, std::uint32_t rows,
                               std::uint32_t columns);

// Linear-time refinement using the lookup table (bucket by the precomputed
// single-attribute block ids).
Partition partition_by_attribute(const Partition& p, const LookupTable& lut, std::uint32_t k);

// Exact number of pairs of rows not separated by A. Gamma of the empty set
// is n(n-1)/2.
std::uint64_t count_unseparated(const Dataset& ds, const AttributeSet& A);

// True iff A separates fewer than (1-epsilon) of all row pairs, i.e.
// Gamma_A > epsilon * n(n-1)/2. Requires 0 < epsilon < 1.
bool is_bad(const Dataset& ds, const AttributeSet& A, double epsilon);

}  // namespace qikey
