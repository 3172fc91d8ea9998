#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qikey/dataset.hpp"

namespace qikey {

// Non-separation estimation sketch: S = ceil(K * k * log2(m) / (alpha*eps^2))
// row pairs drawn uniformly with replacement from all distinct pairs.
struct EstimatorSketch {
    std::uint32_t k = 0;      // maximum query size
    double alpha = 0;         // reporting threshold fraction
    double epsilon = 0;       // accuracy
    double constant = 0;      // K
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    std::uint32_t m = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> source_pairs;
    std::vector<std::uint32_t> left_codes;   // S x m, row-major
    std::vector<std::uint32_t> right_codes;  // S x m, row-major
    std::vector<std::string> column_names;

    std::uint64_t size() const { return source_pairs.size(); }
};

// Requires 0 < alpha < 1, 0 < eps < 1, 1 <= k <= m, m >= 2, n >= 2.
EstimatorSketch build_estimator(const Dataset& ds, std::uint32_t k, double alpha,
                                double epsilon, double constant, std::uint64_t seed);

struct EstimateResult {
    bool small = false;
    double estimate = 0;            // valid when !small
    std::uint64_t agreeing_pairs = 0;  // D_A
    std::uint64_t sample_pairs = 0;    // S
};

// D_A = stored pairs agreeing on all of A. Returns Small when
// D_A < K*k*log2(m)/(10*eps^2), otherwise the estimate D_A * (n choose 2)/S.
// Queries with |A| > k are refused (std::invalid_argument).
EstimateResult estimate(const EstimatorSketch& sk, const AttributeSet& A);

}  // namespace qikey
