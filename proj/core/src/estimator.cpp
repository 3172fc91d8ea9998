#include "qikey/estimator.hpp"

#include <cmath>
#include <stdexcept>

#include "qikey/rng.hpp"

namespace qikey {

EstimatorSketch build_estimator(const Dataset& ds, std::uint32_t k, double alpha,
                                double epsilon, double constant, std::uint64_t seed) {
    const std::uint64_t n = ds.row_count();
    const std::uint32_t m = ds.column_count();
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("build_estimator: alpha must be in (0, 1)");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("build_estimator: epsilon must be in (0, 1)");
    if (!(constant > 0.0)) throw std::invalid_argument("build_estimator: constant must be > 0");
    if (k < 1 || k > m) throw std::invalid_argument("build_estimator: need 1 <= k <= m");
    if (m < 2) throw std::invalid_argument("build_estimator: need m >= 2");
    if (n < 2) throw std::invalid_argument("build_estimator: need n >= 2");

    double x = constant * k * std::log2(static_cast<double>(m)) / (alpha * epsilon * epsilon);
    auto pairs = static_cast<std::uint64_t>(std::ceil(x - x * 1e-12));

    EstimatorSketch sk;
    sk.k = k;
    sk.alpha = alpha;
    sk.epsilon = epsilon;
    sk.constant = constant;
    sk.seed = seed;
    sk.n = n;
    sk.m = m;
    sk.column_names = ds.column_names();
    sk.source_pairs.reserve(pairs);
    sk.left_codes.reserve(pairs * m);
    sk.right_codes.reserve(pairs * m);

    CounterRng rng(seed);
    for (std::uint64_t i = 0; i < pairs; ++i) {
        auto [a, b] = sample_distinct_pair(n, rng);
        sk.source_pairs.emplace_back(a, b);
        for (std::uint32_t j = 0; j < m; ++j) {
            sk.left_codes.push_back(ds.code_at(a, j));
            sk.right_codes.push_back(ds.code_at(b, j));
        }
    }
    return sk;
}

EstimateResult estimate(const EstimatorSketch& sk, const AttributeSet& A) {
    if (A.size() > sk.k)
        throw std::invalid_argument("estimate: query size " + std::to_string(A.size()) +
                                    " exceeds sketch limit k=" + std::to_string(sk.k));
    A.validate_against(sk.m);

    const std::uint64_t S = sk.size();
    std::uint64_t d_a = 0;
    for (std::uint64_t i = 0; i < S; ++i) {
        const auto* left = sk.left_codes.data() + i * sk.m;
        const auto* right = sk.right_codes.data() + i * sk.m;
        bool agree = true;
        for (auto c : A.indices()) {
            if (left[c] != right[c]) {
                agree = false;
                break;
            }
        }
        d_a += agree;
    }

    EstimateResult res;
    res.agreeing_pairs = d_a;
    res.sample_pairs = S;
    double threshold = sk.constant * sk.k * std::log2(static_cast<double>(sk.m)) /
                       (10.0 * sk.epsilon * sk.epsilon);
    if (static_cast<double>(d_a) < threshold) {
        res.small = true;
        return res;
    }
    double total_pairs = static_cast<double>(sk.n) * static_cast<double>(sk.n - 1) / 2.0;
    res.estimate = static_cast<double>(d_a) * total_pairs / static_cast<double>(S);
    return res;
}

}  // namespace qikey
