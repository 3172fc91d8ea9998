#pragma once

#include <cstdint>
#include <vector>

#include "qikey/dataset.hpp"

namespace qikey {

// All q^m tuples over {1..q}, rows in lexicographic order. Every singleton
// column partitions the rows into q blocks of q^(m-1). Throws when q^m
// exceeds row_cap.
Dataset gen_grid(std::uint32_t q, std::uint32_t m, std::uint64_t row_cap = 10'000'000);

// Column 0 holds one planted clique: floor(sqrt(2*eps)*n) rows share the
// value 1, the rest get pairwise-distinct values. The remaining m-1 columns
// spell the row index in mixed radix, so the full attribute set is a key.
// Requires sqrt(2*eps)*n >= 2 and m >= 2.
Dataset gen_clique(std::uint64_t n, double epsilon, std::uint32_t m);

// Bit matrix with kt rows; every column must contain exactly k ones.
using BitMatrix = std::vector<std::vector<std::uint8_t>>;

// Uniformly random BitMatrix of the required column weight, kt x m.
BitMatrix random_encoding_matrix(std::uint32_t k, std::uint32_t t, std::uint32_t m,
                                 std::uint64_t seed);

// The encoding gadget: 2kt rows, m + kt columns. Top half is C next to an
// identity block, bottom half is all-ones next to zeros. Cells are the
// strings "0"/"1" through the ordinary dictionary path.
Dataset gen_encoding(const BitMatrix& c_matrix, std::uint32_t k, std::uint32_t t);

// Unseparated pairs of the gadget under A = {a C-column} U {the identity
// columns of k guessed rows}, of which u guesses are correct:
//   (t^2 - t + 5/2) k^2 - (t - 1/2) k + u^2 - 3ku
std::int64_t closed_form_gamma(std::uint32_t k, std::uint32_t t, std::uint32_t u);

}  // namespace qikey
