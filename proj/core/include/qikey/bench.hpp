#pragma once

#include <cstdint>
#include <vector>

#include "qikey/dataset.hpp"

namespace qikey::bench {

struct BenchConfig {
    double epsilon = 0.001;
    double constant = 10.0;
    std::uint32_t queries = 100;
    std::uint32_t trials = 10;
    std::uint64_t seed = 0;
    std::uint32_t jobs = 1;
};

struct SideStats {
    std::uint64_t sample_size = 0;
    double build_ms_mean = 0;
    double query_ms_mean = 0;  // whole query batch per trial
};

struct BenchResult {
    std::uint64_t n = 0;
    std::uint32_t m = 0;
    double epsilon = 0;
    double constant = 0;
    std::uint32_t trials = 0;
    std::uint32_t queries = 0;
    SideStats tuple;
    SideStats pair;
    double size_ratio = 0;      // pair sample size / tuple sample size
    double agreement_pct = 0;   // identical decisions, pooled over trials
    double speedup = 0;         // pair (build+queries) / tuple (build+queries)
};

// Both sketch variants over the same random attribute-set queries. Each
// trial builds fresh sketches from an RNG stream derived from
// (seed, trial id); the query set comes from the base seed, so results are
// reproducible. Trials run in parallel up to `jobs`.
BenchResult run_bench(const Dataset& ds, const BenchConfig& cfg);

// Deterministic mixed-cardinality table shaped like a census extract:
// a handful of near-unique columns next to low-cardinality categorical ones.
Dataset synthetic_dataset(std::uint64_t n, std::uint32_t m, std::uint64_t seed);

}  // namespace qikey::bench
