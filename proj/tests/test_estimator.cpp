#include <cmath>

#include "doctest.h"
#include "qikey/estimator.hpp"
#include "qikey/separation.hpp"
#include "support/helpers.hpp"

using namespace qikey;

TEST_SUITE_BEGIN("estimator");

namespace {

// column 0 carries one planted clique of the requested size, column 1 is a
// key, remaining columns constant
Dataset planted_dataset(std::uint32_t n, std::uint32_t clique, std::uint32_t m = 4) {
    std::vector<std::vector<std::string>> cols(m);
    for (std::uint32_t i = 0; i < n; ++i) {
        cols[0].push_back(i < clique ? "dup" : "v" + std::to_string(i));
        cols[1].push_back(std::to_string(i));
        for (std::uint32_t j = 2; j < m; ++j) cols[j].push_back("c");
    }
    return Dataset::from_columns(std::move(cols));
}

}  // namespace

TEST_CASE("build preconditions") {
    auto ds = planted_dataset(100, 10);
    CHECK_THROWS_AS(build_estimator(ds, 1, 1.0, 0.1, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_estimator(ds, 1, 0.1, 1.0, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_estimator(ds, 0, 0.1, 0.1, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_estimator(ds, 5, 0.1, 0.1, 10, 0), std::invalid_argument);
    auto tiny = Dataset::from_rows({{"a", "b"}});
    CHECK_THROWS_AS(build_estimator(tiny, 1, 0.1, 0.1, 10, 0), std::invalid_argument);
}

TEST_CASE("sample size formula uses log2") {
    CounterRng rng(61);
    auto ds = testsupport::random_dataset(rng, 50, 16, 9);
    auto sk = build_estimator(ds, 4, 0.1, 0.1, 1.0, 0);
    CHECK(sk.size() == 16000);  // ceil(1*4*log2(16) / (0.1*0.01))
}

TEST_CASE("query size above k is refused") {
    auto ds = planted_dataset(50, 5);
    auto sk = build_estimator(ds, 1, 0.2, 0.2, 2.0, 0);
    CHECK_THROWS_AS(estimate(sk, AttributeSet({0, 1})), std::invalid_argument);
}

TEST_CASE("a true key reports small") {
    auto ds = planted_dataset(400, 40);
    auto sk = build_estimator(ds, 1, 0.1, 0.1, 10.0, 7);
    auto res = estimate(sk, AttributeSet({1}));
    CHECK(res.small);
    CHECK(res.agreeing_pairs == 0);
}

TEST_CASE("the empty set estimates the total pair count exactly") {
    auto ds = planted_dataset(300, 30);
    auto sk = build_estimator(ds, 1, 0.1, 0.1, 10.0, 3);
    auto res = estimate(sk, AttributeSet{});
    REQUIRE(!res.small);
    CHECK(res.agreeing_pairs == res.sample_pairs);
    CHECK(res.estimate == doctest::Approx(static_cast<double>(ds.pair_count())).epsilon(1e-12));
}

TEST_CASE("planted gamma around 0.3 of all pairs is estimated within 1 +/- eps") {
    const std::uint32_t n = 1000;
    // clique c with C(c,2) ~ 0.3 * C(n,2): c ~ sqrt(0.3)*n
    const std::uint32_t clique = 548;
    auto ds = planted_dataset(n, clique);
    const double eps = 0.1;
    std::uint64_t oracle = count_unseparated(ds, AttributeSet({0}));
    CHECK(oracle == std::uint64_t{clique} * (clique - 1) / 2);
    int hits = 0;
    const int trials = 40;
    for (int seed = 0; seed < trials; ++seed) {
        auto sk = build_estimator(ds, 1, 0.1, eps, 10.0, seed);
        auto res = estimate(sk, AttributeSet({0}));
        REQUIRE(!res.small);
        if (res.estimate >= (1 - eps) * static_cast<double>(oracle) &&
            res.estimate <= (1 + eps) * static_cast<double>(oracle))
            ++hits;
    }
    CHECK(hits == trials);
}

TEST_CASE("estimates are unbiased across seeds") {
    const std::uint32_t n = 600;
    auto ds = planted_dataset(n, 190);
    double oracle = static_cast<double>(count_unseparated(ds, AttributeSet({0})));
    const int trials = 200;
    std::vector<double> estimates;
    for (int seed = 0; seed < trials; ++seed) {
        // small K keeps this quick; unbiasedness is independent of K
        auto sk = build_estimator(ds, 1, 0.2, 0.15, 2.0, 1000 + seed);
        std::uint64_t d_a = 0;
        auto res = estimate(sk, AttributeSet({0}));
        d_a = res.agreeing_pairs;
        // raw unbiased estimator, bypassing the small-branch
        estimates.push_back(static_cast<double>(d_a) *
                            static_cast<double>(ds.pair_count()) /
                            static_cast<double>(res.sample_pairs));
    }
    double mean = 0;
    for (double e : estimates) mean += e / trials;
    double var = 0;
    for (double e : estimates) var += (e - mean) * (e - mean) / (trials - 1);
    double se = std::sqrt(var / trials);
    CHECK(std::abs(mean - oracle) <= 3 * se + 1e-9);
}

TEST_CASE("small is returned below the alpha/100 threshold") {
    const std::uint32_t n = 1000;
    // C(45,2) = 990 <= (alpha/100) * C(1000,2) = 499.5? no - use alpha = 0.2:
    // bar = 0.002 * 499500 = 999, so a 45-clique (990 pairs) sits under it
    auto ds = planted_dataset(n, 45);
    std::uint64_t oracle = count_unseparated(ds, AttributeSet({0}));
    const double alpha = 0.2;
    REQUIRE(static_cast<double>(oracle) <=
            alpha / 100.0 * static_cast<double>(ds.pair_count()));
    int smalls = 0;
    const int trials = 50;
    for (int seed = 0; seed < trials; ++seed) {
        auto sk = build_estimator(ds, 1, alpha, 0.1, 10.0, seed);
        if (estimate(sk, AttributeSet({0})).small) ++smalls;
    }
    CHECK(smalls == trials);
}

TEST_SUITE_END();
