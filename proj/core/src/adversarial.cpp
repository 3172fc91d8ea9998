#include "qikey/adversarial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qikey/rng.hpp"

namespace qikey {

Dataset gen_grid(std::uint32_t q, std::uint32_t m, std::uint64_t row_cap) {
    if (q < 1 || m < 1) throw std::invalid_argument("gen_grid: need q >= 1 and m >= 1");
    std::uint64_t n = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
        if (n > row_cap / q)
            throw std::invalid_argument("gen_grid: q^m exceeds the row cap of " +
                                        std::to_string(row_cap));
        n *= q;
    }
    std::vector<std::vector<std::string>> cols(m);
    for (auto& c : cols) c.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t rest = i;
        for (std::uint32_t j = m; j-- > 0;) {
            cols[j].push_back(std::to_string(1 + rest % q));
            rest /= q;
        }
    }
    return Dataset::from_columns(std::move(cols));
}

Dataset gen_clique(std::uint64_t n, double epsilon, std::uint32_t m) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("gen_clique: epsilon must be in (0, 1)");
    if (m < 2) throw std::invalid_argument("gen_clique: need m >= 2");
    auto clique = static_cast<std::uint64_t>(std::sqrt(2.0 * epsilon) * static_cast<double>(n));
    if (clique < 2) throw std::invalid_argument("gen_clique: sqrt(2*eps)*n must be at least 2");
    if (clique > n) clique = n;

    std::vector<std::vector<std::string>> cols(m);
    for (auto& c : cols) c.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i)
        cols[0].push_back(i < clique ? "1" : std::to_string(2 + (i - clique)));

    // Mixed-radix row index across columns 1..m-1; any injective fill keeps
    // the full set a key, this one is reproducible.
    std::uint64_t base = std::max<std::uint64_t>(
        2, static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(n),
                                                         1.0 / (m - 1)))));
    while (true) {
        std::uint64_t span = 1;
        bool enough = false;
        for (std::uint32_t j = 0; j + 1 < m; ++j) {
            span *= base;
            if (span >= n) {
                enough = true;
                break;
            }
        }
        if (enough || n <= 1) break;
        ++base;
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t rest = i;
        for (std::uint32_t j = 1; j < m; ++j) {
            cols[j].push_back(std::to_string(rest % base));
            rest /= base;
        }
    }
    return Dataset::from_columns(std::move(cols));
}

BitMatrix random_encoding_matrix(std::uint32_t k, std::uint32_t t, std::uint32_t m,
                                 std::uint64_t seed) {
    const std::uint32_t rows = k * t;
    BitMatrix c(rows, std::vector<std::uint8_t>(m, 0));
    CounterRng rng(seed);
    for (std::uint32_t col = 0; col < m; ++col) {
        auto ones = sample_without_replacement(rows, k, rng);
        for (auto row : ones) c[row][col] = 1;
    }
    return c;
}

Dataset gen_encoding(const BitMatrix& c_matrix, std::uint32_t k, std::uint32_t t) {
    if (k < 1 || t < 1) throw std::invalid_argument("gen_encoding: need k >= 1 and t >= 1");
    const std::uint32_t n = k * t;
    if (c_matrix.size() != n)
        throw std::invalid_argument("gen_encoding: matrix must have k*t rows");
    const std::size_t m = c_matrix.empty() ? 0 : c_matrix[0].size();
    if (m == 0) throw std::invalid_argument("gen_encoding: matrix needs at least one column");
    for (std::size_t col = 0; col < m; ++col) {
        std::uint32_t weight = 0;
        for (std::uint32_t row = 0; row < n; ++row) {
            if (c_matrix[row].size() != m)
                throw std::invalid_argument("gen_encoding: ragged matrix");
            weight += c_matrix[row][col] ? 1 : 0;
        }
        if (weight != k)
            throw std::invalid_argument("gen_encoding: column " + std::to_string(col) +
                                        " has weight " + std::to_string(weight) +
                                        ", expected " + std::to_string(k));
    }

    std::vector<std::vector<std::string>> cols(m + n);
    for (auto& c : cols) c.reserve(2 * static_cast<std::size_t>(n));
    for (std::uint32_t i = 0; i < 2 * n; ++i) {
        bool top = i < n;
        for (std::size_t j = 0; j < m; ++j)
            cols[j].push_back(top ? (c_matrix[i][j] ? "1" : "0") : "1");
        for (std::uint32_t j = 0; j < n; ++j)
            cols[m + j].push_back(top && i == j ? "1" : "0");
    }
    return Dataset::from_columns(std::move(cols));
}

std::int64_t closed_form_gamma(std::uint32_t k, std::uint32_t t, std::uint32_t u) {
    if (u > k) throw std::invalid_argument("closed_form_gamma: need u <= k");
    auto K = static_cast<std::int64_t>(k);
    auto T = static_cast<std::int64_t>(t);
    auto U = static_cast<std::int64_t>(u);
    // (t^2 - t + 5/2)k^2 - (t - 1/2)k + u^2 - 3ku, kept in integers:
    // the half-terms combine to (5k^2 - (2t-1)... ) with matching parity.
    std::int64_t doubled = 2 * (T * T - T) * K * K + 5 * K * K - (2 * T - 1) * K;
    return doubled / 2 + U * U - 3 * K * U;
}

}  // namespace qikey
