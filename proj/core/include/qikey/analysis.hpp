#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qikey {

// Relaxed clique-size vector: non-negative reals s with target sum n.
// Feasible when sum(s) == n (1e-9 relative), sum(s^2) >= eps*n^2/4 and all
// entries are non-negative.
struct CliqueSizeVector {
    std::vector<double> s;
    double n = 0;
    double epsilon = 0;

    // value repeated `count` times, convenience for tests and the CLI
    static CliqueSizeVector from_blocks(std::span<const std::pair<double, std::uint64_t>> blocks,
                                        double n, double epsilon);
};

bool is_feasible(const CliqueSizeVector& v);
void require_feasible(const CliqueSizeVector& v);

// Degree-r elementary symmetric polynomial e_r(s) via the O(len*r) dynamic
// program, compensated summation on each accumulator. Throws when
// r > s.size().
double elementary_symmetric(std::span<const double> s, std::uint32_t r);
double elementary_symmetric(const CliqueSizeVector& v, std::uint32_t r);

enum class SamplingScheme { with_replacement, without_replacement };

// Probability that r draws from the color distribution s/n produce no two
// balls of the same color:
//   with replacement     r!/n^r * e_r(s)
//   without replacement  r!/(n(n-1)...(n-r+1)) * e_r(s)
// Factorial ratios are evaluated in log space. Requires a feasible s.
double non_collision_prob(const CliqueSizeVector& v, std::uint32_t r, SamplingScheme scheme);

// Smallest q (at least 2) with q >= (1 + sqrt(8*N*ln(1/delta) + 1)) / 2, the
// point where the birthday bound forces collision probability >= 1 - delta.
std::uint64_t birthday_min_samples(std::uint64_t bins, double delta_star);

// Numerical check of the bound P_without < e^m * P_with, valid when
// n > r(r-1)/m + r - 1.
struct ReplacementClaimReport {
    bool precondition_ok = false;
    double with_replacement = 0;
    double without_replacement = 0;
    double ratio = 0;  // without / with (inf when with == 0)
    double bound = 0;  // e^m
    bool holds = false;
};

ReplacementClaimReport verify_replacement_claim(const CliqueSizeVector& v, std::uint32_t r,
                                                std::uint32_t m);

// Maximizes e_r(s) over the feasible set two ways: an exhaustive grid over
// the discretized simplex (step n/60, entries compared as multisets) and a
// continuous search over vectors with at most two distinct positive values
// (uniform-over-support points plus points where the quadratic constraint
// binds). Reports whether the two-value family attains the grid optimum.
// Requires n <= 12, r <= 5 and the hypothesis 4 <= r <= 1 + (1-sqrt(eps)/2)n.
struct WorstCaseReport {
    double grid_value = 0;
    std::vector<double> grid_argmax;
    double two_value_value = 0;
    std::vector<double> two_value_argmax;
    std::uint32_t grid_argmax_distinct_positive = 0;
    bool two_value_attains_grid_optimum = false;  // within 1e-6 relative
    std::uint64_t grid_points_scanned = 0;
    std::uint64_t grid_points_feasible = 0;
};

WorstCaseReport worstcase_search(std::uint32_t n, std::uint32_t r, double epsilon);

}  // namespace qikey
