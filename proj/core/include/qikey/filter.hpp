#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qikey/dataset.hpp"

namespace qikey {

enum class SketchKind { tuple, pair };

// ceil(C * m / sqrt(eps)) for tuple mode, ceil(C * m / eps) for pair mode.
// Requires 0 < eps < 1 and C > 0.
std::uint64_t required_samples(std::uint32_t m, double epsilon, SketchKind kind,
                               double constant = 10.0);

// Rows sampled without replacement, projections materialized so the sketch
// answers queries without the dataset. r = min(n, ceil(C*m/sqrt(eps))).
struct TupleSketch {
    double epsilon = 0;
    double constant = 0;
    std::uint64_t seed = 0;
    std::uint32_t m = 0;
    std::uint64_t source_rows = 0;                // n of the dataset sampled from
    std::vector<std::uint32_t> sample_rows;       // r distinct row indices
    std::vector<std::uint32_t> codes;             // r x m, row-major
    std::vector<std::string> column_names;        // empty when the source had none

    std::uint32_t size() const { return static_cast<std::uint32_t>(sample_rows.size()); }
    std::span<const std::uint32_t> row(std::uint32_t i) const {
        return {codes.data() + static_cast<std::size_t>(i) * m, m};
    }
};

// Pairs of rows sampled uniformly with replacement from all distinct pairs,
// both sides materialized. r' = min(n(n-1)/2, ceil(C*m/eps)).
struct PairSketch {
    double epsilon = 0;
    double constant = 0;
    std::uint64_t seed = 0;
    std::uint32_t m = 0;
    std::uint64_t source_rows = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> source_pairs;
    std::vector<std::uint32_t> left_codes;   // r' x m, row-major
    std::vector<std::uint32_t> right_codes;  // r' x m, row-major
    std::vector<std::string> column_names;

    std::uint32_t size() const { return static_cast<std::uint32_t>(source_pairs.size()); }
};

TupleSketch build_tuple_sketch(const Dataset& ds, double epsilon, double constant,
                               std::uint64_t seed);
PairSketch build_pair_sketch(const Dataset& ds, double epsilon, double constant,
                             std::uint64_t seed);

// Reject always carries a witness: two source row indices that agree on every
// attribute of the queried set.
struct FilterDecision {
    bool accepted = false;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

// Reject iff two sampled rows agree on all of A. Duplicate detection sorts
// the projections, O(r log r) comparisons of width |A|.
FilterDecision query(const TupleSketch& sk, const AttributeSet& A);

// Reject iff some stored pair agrees on all of A; single scan, O(r'|A|).
FilterDecision query(const PairSketch& sk, const AttributeSet& A);

}  // namespace qikey
