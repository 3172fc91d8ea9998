#include <cmath>

#include "doctest.h"
#include "qikey/analysis.hpp"
#include "qikey/rng.hpp"
#include "support/helpers.hpp"

using namespace qikey;

TEST_SUITE_BEGIN("analysis");

namespace {

CliqueSizeVector vec(std::vector<double> s, double n, double eps) {
    CliqueSizeVector v;
    v.s = std::move(s);
    v.n = n;
    v.epsilon = eps;
    return v;
}

std::vector<double> published_s2() {
    std::vector<double> s{10};
    s.insert(s.end(), 30, 1.0);
    return s;
}

}  // namespace

TEST_CASE("published example values of f_r") {
    // s2 = (10, 1 x30): integer value, exact match expected
    CHECK(elementary_symmetric(published_s2(), 10) == 173116515.0);
    // s1 = (2.5 x16): 8008 * 2.5^10
    std::vector<double> s1(16, 2.5);
    double expect = 8008.0 * std::pow(2.5, 10);
    CHECK(std::abs(elementary_symmetric(s1, 10) - expect) <= 1e-9 * expect);
    // the pair rejects uniform-over-support intuition: f(s1) < f(s2)
    CHECK(elementary_symmetric(s1, 10) < elementary_symmetric(published_s2(), 10));
}

TEST_CASE("e_1 is the sum, degree above length throws") {
    std::vector<double> s{1, 2, 3.5};
    CHECK(elementary_symmetric(s, 1) == doctest::Approx(6.5));
    CHECK(elementary_symmetric(s, 0) == 1.0);
    CHECK_THROWS_AS(elementary_symmetric(s, 4), std::invalid_argument);
}

TEST_CASE("e_r agrees with Newton's identities") {
    // moderate degrees and values keep the power-sum route itself stable
    CounterRng rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t len = 3 + rng.uniform_below(18);
        std::vector<double> s(len);
        for (auto& x : s) x = static_cast<double>(rng.uniform_below(32)) / 8.0;
        auto r = static_cast<std::uint32_t>(1 + rng.uniform_below(std::min<std::size_t>(len, 8)));
        double dp = elementary_symmetric(s, r);
        double newton = testsupport::newton_elementary_symmetric(s, r);
        CHECK(dp == doctest::Approx(newton).epsilon(1e-8));
    }
}

TEST_CASE("non-collision probabilities at the extremes") {
    // all singletons, without replacement: every draw is a fresh color
    auto singles = vec(std::vector<double>(12, 1.0), 12, 0.05);
    CHECK(non_collision_prob(singles, 5, SamplingScheme::without_replacement) ==
          doctest::Approx(1.0));
    // one block holding everything: r >= 2 always collides
    auto one = vec({12, 0, 0}, 12, 0.5);
    CHECK(non_collision_prob(one, 2, SamplingScheme::with_replacement) == 0.0);
    CHECK(non_collision_prob(one, 3, SamplingScheme::without_replacement) == 0.0);
}

TEST_CASE("n=4, s=(2,2), r=2 with replacement is exactly 1/2") {
    auto v = vec({2, 2, 0, 0}, 4, 0.5);
    CHECK(non_collision_prob(v, 2, SamplingScheme::with_replacement) == doctest::Approx(0.5));
}

TEST_CASE("closed form matches exhaustive enumeration on small integer vectors") {
    CounterRng rng(72);
    for (int trial = 0; trial < 15; ++trial) {
        // up to 6 balls across up to 4 cliques
        std::vector<std::uint32_t> sizes;
        std::uint32_t total = 0;
        while (total < 3 + rng.uniform_below(4)) {
            std::uint32_t s = 1 + static_cast<std::uint32_t>(rng.uniform_below(3));
            sizes.push_back(s);
            total += s;
        }
        std::vector<double> s(sizes.begin(), sizes.end());
        auto v = vec(s, total, 1e-6);
        for (std::uint32_t r = 1; r <= std::min<std::uint32_t>(3, total); ++r) {
            CHECK(non_collision_prob(v, r, SamplingScheme::with_replacement) ==
                  doctest::Approx(testsupport::enumerate_non_collision(sizes, r, true)));
            CHECK(non_collision_prob(v, r, SamplingScheme::without_replacement) ==
                  doctest::Approx(testsupport::enumerate_non_collision(sizes, r, false)));
        }
    }
}

TEST_CASE("non-collision probability is non-increasing in r") {
    auto v = vec({5, 3, 2, 1, 1, 0}, 12, 0.1);
    for (auto scheme :
         {SamplingScheme::with_replacement, SamplingScheme::without_replacement}) {
        double prev = 1.0;
        for (std::uint32_t r = 1; r <= 6; ++r) {
            double p = non_collision_prob(v, r, scheme);
            CHECK(p <= prev + 1e-12);
            prev = p;
        }
    }
}

TEST_CASE("merging two blocks never increases the non-collision probability") {
    CounterRng rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> s;
        double total = 0;
        for (int i = 0; i < 6; ++i) {
            double x = 1.0 + static_cast<double>(rng.uniform_below(5));
            s.push_back(x);
            total += x;
        }
        auto v = vec(s, total, 1e-6);
        auto merged = s;
        merged[0] += merged[1];
        merged[1] = 0;
        auto vm = vec(merged, total, 1e-6);
        for (std::uint32_t r = 2; r <= 4; ++r) {
            CHECK(non_collision_prob(vm, r, SamplingScheme::with_replacement) <=
                  non_collision_prob(v, r, SamplingScheme::with_replacement) + 1e-12);
        }
    }
}

TEST_CASE("infeasible vectors are rejected") {
    // sums to 9, target 10
    CHECK_THROWS_AS(non_collision_prob(vec({9}, 10, 0.1), 1,
                                       SamplingScheme::with_replacement),
                    std::invalid_argument);
    // edge constraint violated: sum of squares 4 < eps*n^2/4 = 16 at eps=0.64, n=10
    CHECK_THROWS_AS(non_collision_prob(vec(std::vector<double>(10, 1.0), 10, 0.64), 2,
                                       SamplingScheme::with_replacement),
                    std::invalid_argument);
}

TEST_CASE("birthday bound") {
    CHECK(birthday_min_samples(365, 0.5) == 23);
    CHECK(birthday_min_samples(1, 0.5) == 2);
    CHECK(birthday_min_samples(1, 0.99) == 2);
    // classic check: 23 people give collision probability above 1/2
    double non_collision = 1.0;
    for (int i = 0; i < 23; ++i) non_collision *= 1.0 - i / 365.0;
    CHECK(non_collision <= 0.5);
    // the bound re-substitutes for the returned q
    CounterRng rng(74);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint64_t bins = 1 + rng.uniform_below(1'000'000);
        double delta = 0.01 + 0.98 * rng.uniform01();
        std::uint64_t q = birthday_min_samples(bins, delta);
        CHECK(q >= 2);
        double miss = std::exp(-static_cast<double>(q) * (static_cast<double>(q) - 1.0) /
                               (2.0 * static_cast<double>(bins)));
        CHECK(miss <= delta + 1e-12);
    }
}

TEST_CASE("replacement claim: without-replacement below e^m of with-replacement") {
    for (double n : {20.0, 50.0}) {
        for (std::uint32_t r : {3u, 5u}) {
            for (std::uint32_t m : {2u, 4u}) {
                // one clique of 4 plus singletons; feasible for small eps
                std::vector<double> s{4};
                s.insert(s.end(), static_cast<std::size_t>(n) - 4, 1.0);
                auto v = vec(s, n, 4.0 / (n * n));
                auto rep = verify_replacement_claim(v, r, m);
                CHECK(rep.precondition_ok);
                CHECK(rep.holds);
                CHECK(rep.without_replacement > rep.with_replacement);  // ratio above 1
                CHECK(rep.ratio < rep.bound);
            }
        }
    }
    // violated precondition is reported, not hidden
    std::vector<double> s(6, 1.0);
    auto v = vec(s, 6, 0.01);
    auto rep = verify_replacement_claim(v, 5, 2);  // needs n > 5*4/2+4 = 14
    CHECK(!rep.precondition_ok);
}

TEST_CASE("worstcase search reproduces the two-value structure") {
    SUBCASE("interior optimum is uniform (single value)") {
        auto rep = worstcase_search(10, 4, 0.0625);
        CHECK(rep.two_value_attains_grid_optimum);
        CHECK(rep.grid_argmax_distinct_positive <= 2);
        CHECK(rep.grid_value == doctest::Approx(210.0));  // C(10,4) at s = all-ones
        CHECK(rep.two_value_value == doctest::Approx(210.0));
    }
    SUBCASE("grid-off-lattice uniform still attained by the continuous family") {
        auto rep = worstcase_search(8, 4, 0.25);
        CHECK(rep.two_value_attains_grid_optimum);
        CHECK(rep.two_value_value == doctest::Approx(70.0));  // C(8,4)
        CHECK(rep.two_value_value >= rep.grid_value);
    }
    SUBCASE("binding edge constraint keeps at most two distinct values") {
        auto rep = worstcase_search(8, 4, 0.6);
        CHECK(rep.two_value_attains_grid_optimum);
        CHECK(rep.grid_points_feasible < rep.grid_points_scanned);
    }
    SUBCASE("hypothesis violations refuse") {
        CHECK_THROWS_AS(worstcase_search(8, 3, 0.25), std::invalid_argument);   // r < 4
        CHECK_THROWS_AS(worstcase_search(4, 5, 0.9), std::invalid_argument);    // r above cap
        CHECK_THROWS_AS(worstcase_search(40, 4, 0.25), std::invalid_argument);  // n cap
    }
}

TEST_SUITE_END();
