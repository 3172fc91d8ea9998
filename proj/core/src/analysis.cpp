#include "qikey/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qikey {

CliqueSizeVector CliqueSizeVector::from_blocks(
    std::span<const std::pair<double, std::uint64_t>> blocks, double n, double epsilon) {
    CliqueSizeVector v;
    v.n = n;
    v.epsilon = epsilon;
    for (const auto& [value, count] : blocks)
        v.s.insert(v.s.end(), count, value);
    return v;
}

bool is_feasible(const CliqueSizeVector& v) {
    double sum = 0, sum_sq = 0;
    for (double x : v.s) {
        if (x < 0) return false;
        sum += x;
        sum_sq += x * x;
    }
    if (std::abs(sum - v.n) > 1e-9 * std::max(1.0, std::abs(v.n))) return false;
    return sum_sq >= v.epsilon * v.n * v.n / 4.0 - 1e-9 * std::max(1.0, v.n * v.n);
}

void require_feasible(const CliqueSizeVector& v) {
    if (!is_feasible(v))
        throw std::invalid_argument("clique-size vector violates the feasibility constraints");
}

double elementary_symmetric(std::span<const double> s, std::uint32_t r) {
    if (r > s.size())
        throw std::invalid_argument("elementary_symmetric: degree exceeds vector length");
    if (r == 0) return 1.0;
    // e[j] accumulates with a Neumaier compensation term c[j].
    std::vector<double> e(r + 1, 0.0), c(r + 1, 0.0);
    e[0] = 1.0;
    std::size_t seen = 0;
    for (double x : s) {
        ++seen;
        std::uint32_t top = static_cast<std::uint32_t>(std::min<std::size_t>(r, seen));
        for (std::uint32_t j = top; j >= 1; --j) {
            double term = x * (e[j - 1] + c[j - 1]);
            double sum = e[j] + term;
            if (std::abs(e[j]) >= std::abs(term))
                c[j] += (e[j] - sum) + term;
            else
                c[j] += (term - sum) + e[j];
            e[j] = sum;
        }
    }
    return e[r] + c[r];
}

double elementary_symmetric(const CliqueSizeVector& v, std::uint32_t r) {
    return elementary_symmetric(std::span<const double>(v.s), r);
}

double non_collision_prob(const CliqueSizeVector& v, std::uint32_t r, SamplingScheme scheme) {
    require_feasible(v);
    if (r == 0) return 1.0;
    if (r > v.s.size()) return 0.0;
    double f = elementary_symmetric(v, r);
    if (f <= 0.0) return 0.0;
    double log_p = std::lgamma(static_cast<double>(r) + 1.0) + std::log(f);
    if (scheme == SamplingScheme::with_replacement) {
        log_p -= static_cast<double>(r) * std::log(v.n);
    } else {
        for (std::uint32_t i = 0; i < r; ++i) log_p -= std::log(v.n - static_cast<double>(i));
    }
    return std::clamp(std::exp(log_p), 0.0, 1.0);
}

std::uint64_t birthday_min_samples(std::uint64_t bins, double delta_star) {
    if (bins < 1) throw std::invalid_argument("birthday_min_samples: need at least one bin");
    if (!(delta_star > 0.0 && delta_star < 1.0))
        throw std::invalid_argument("birthday_min_samples: delta must be in (0, 1)");
    double q = 0.5 * (1.0 + std::sqrt(8.0 * static_cast<double>(bins) * std::log(1.0 / delta_star) + 1.0));
    auto result = static_cast<std::uint64_t>(std::ceil(q));
    return std::max<std::uint64_t>(result, 2);
}

ReplacementClaimReport verify_replacement_claim(const CliqueSizeVector& v, std::uint32_t r,
                                                std::uint32_t m) {
    require_feasible(v);
    ReplacementClaimReport rep;
    rep.bound = std::exp(static_cast<double>(m));
    double lhs = static_cast<double>(r) * (static_cast<double>(r) - 1.0) / m +
                 static_cast<double>(r) - 1.0;
    rep.precondition_ok = v.n > lhs;
    rep.with_replacement = non_collision_prob(v, r, SamplingScheme::with_replacement);
    rep.without_replacement = non_collision_prob(v, r, SamplingScheme::without_replacement);
    rep.ratio = rep.with_replacement > 0
                    ? rep.without_replacement / rep.with_replacement
                    : std::numeric_limits<double>::infinity();
    rep.holds = rep.without_replacement < rep.bound * rep.with_replacement;
    return rep;
}

namespace {

constexpr std::uint32_t kGridUnits = 60;

std::uint32_t distinct_positive(std::span<const double> s, double rel_tol = 1e-9) {
    std::vector<double> pos;
    for (double x : s)
        if (x > 0) pos.push_back(x);
    std::sort(pos.begin(), pos.end());
    std::uint32_t distinct = 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (i == 0 || pos[i] - pos[i - 1] > rel_tol * pos[i]) ++distinct;
    return distinct;
}

// e_r of a two-value vector (ka copies of a, kb copies of b) by splitting the
// degree between the groups: sum_i C(ka,i) C(kb,r-i) a^i b^(r-i).
double two_value_er(std::uint32_t ka, double a, std::uint32_t kb, double b, std::uint32_t r) {
    auto log_choose = [](std::uint32_t n, std::uint32_t k) {
        return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    };
    double total = 0;
    for (std::uint32_t i = 0; i <= r; ++i) {
        std::uint32_t j = r - i;
        if (i > ka || j > kb) continue;
        if ((a == 0.0 && i > 0) || (b == 0.0 && j > 0)) continue;
        double log_term = log_choose(ka, i) + log_choose(kb, j);
        if (i > 0) log_term += i * std::log(a);
        if (j > 0) log_term += j * std::log(b);
        total += std::exp(log_term);
    }
    return total;
}

}  // namespace

WorstCaseReport worstcase_search(std::uint32_t n, std::uint32_t r, double epsilon) {
    if (n > 12 || r > 5) throw std::invalid_argument("worstcase_search: supports n <= 12, r <= 5");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("worstcase_search: epsilon must be in (0, 1)");
    double upper = 1.0 + (1.0 - std::sqrt(epsilon) / 2.0) * n;
    if (r < 4 || static_cast<double>(r) > upper)
        throw std::invalid_argument("worstcase_search: hypothesis 4 <= r <= 1+(1-sqrt(eps)/2)n violated");

    WorstCaseReport rep;
    const double step = static_cast<double>(n) / kGridUnits;
    // Feasibility in grid units: sum(u^2) * step^2 >= eps*n^2/4.
    const double min_unit_sq = epsilon * n * n / (4.0 * step * step) - 1e-9;

    // Enumerate partitions of kGridUnits into at most n parts (multisets
    // cover the whole simplex since e_r is symmetric).
    std::vector<std::uint32_t> parts;
    std::vector<double> point;
    auto visit = [&](const std::vector<std::uint32_t>& u) {
        ++rep.grid_points_scanned;
        double unit_sq = 0;
        for (auto x : u) unit_sq += static_cast<double>(x) * x;
        if (unit_sq < min_unit_sq) return;
        ++rep.grid_points_feasible;
        if (u.size() < r) return;  // e_r would be zero
        point.clear();
        for (auto x : u) point.push_back(x * step);
        double value = elementary_symmetric(point, r);
        if (value > rep.grid_value) {
            rep.grid_value = value;
            rep.grid_argmax = point;
        }
    };
    auto enumerate = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        if (parts.size() == n) return;
        std::uint32_t top = std::min(remaining, max_part);
        for (std::uint32_t part = top; part >= 1; --part) {
            // Prune: remaining units must fit in the slots left.
            std::uint32_t slots = n - static_cast<std::uint32_t>(parts.size()) - 1;
            if (static_cast<std::uint64_t>(part) * (slots + 1) < remaining) break;
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    enumerate(enumerate, kGridUnits, kGridUnits);

    // Two-value family. Case 1: uniform over a support of size p (only the
    // sum constraint binds; the symmetric maximum on that face).
    auto consider = [&](std::uint32_t ka, double a, std::uint32_t kb, double b) {
        if (a < 0 || b < 0) return;
        double value = two_value_er(ka, a, kb, b, r);
        if (value > rep.two_value_value) {
            rep.two_value_value = value;
            rep.two_value_argmax.assign(ka, a);
            rep.two_value_argmax.insert(rep.two_value_argmax.end(), kb, b);
        }
    };
    const double edge = epsilon * n * n / 4.0;
    for (std::uint32_t p = 1; p <= n; ++p) {
        double a = static_cast<double>(n) / p;
        if (p * a * a >= edge - 1e-12) consider(p, a, 0, 0.0);
    }
    // Case 2: both constraints bind. Solve ka*a + kb*b = n and
    // ka*a^2 + kb*b^2 = edge; quadratic in a.
    for (std::uint32_t ka = 1; ka < n; ++ka) {
        for (std::uint32_t kb = 1; ka + kb <= n; ++kb) {
            double A = static_cast<double>(ka) * (ka + kb);
            double B = -2.0 * n * ka;
            double C = static_cast<double>(n) * n - edge * kb;
            double disc = B * B - 4.0 * A * C;
            if (disc < 0) continue;
            double sq = std::sqrt(disc);
            for (double a : {(-B + sq) / (2 * A), (-B - sq) / (2 * A)}) {
                if (a < -1e-12) continue;
                a = std::max(a, 0.0);
                double b = (n - ka * a) / kb;
                if (b < -1e-12) continue;
                b = std::max(b, 0.0);
                consider(ka, a, kb, b);
            }
        }
    }

    rep.grid_argmax_distinct_positive = distinct_positive(rep.grid_argmax);
    rep.two_value_attains_grid_optimum =
        rep.two_value_value >= rep.grid_value * (1.0 - 1e-6);
    return rep;
}

}  // namespace qikey
