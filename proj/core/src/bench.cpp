#include "qikey/bench.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "qikey/filter.hpp"
#include "qikey/rng.hpp"

namespace qikey::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct TrialStats {
    double tuple_build_ms = 0;
    double tuple_query_ms = 0;
    double pair_build_ms = 0;
    double pair_query_ms = 0;
    std::uint64_t tuple_size = 0;
    std::uint64_t pair_size = 0;
    std::uint64_t agreements = 0;
};

}  // namespace

BenchResult run_bench(const Dataset& ds, const BenchConfig& cfg) {
    if (cfg.queries == 0 || cfg.trials == 0)
        throw std::invalid_argument("run_bench: queries and trials must be positive");
    const std::uint32_t m = ds.column_count();

    // Query set shared by all trials, each attribute tossed in with prob 1/2.
    std::vector<AttributeSet> queries;
    queries.reserve(cfg.queries);
    CounterRng qrng(cfg.seed, 0x71C4);
    for (std::uint32_t i = 0; i < cfg.queries; ++i) {
        std::vector<std::uint32_t> idx;
        for (std::uint32_t c = 0; c < m; ++c)
            if (qrng.uniform_below(2) == 1) idx.push_back(c);
        queries.emplace_back(std::move(idx));
    }

    std::vector<TrialStats> stats(cfg.trials);
    auto run_trial = [&](std::uint32_t trial) {
        TrialStats& st = stats[trial];
        std::uint64_t trial_seed = CounterRng::mix(cfg.seed + 0x9E3779B97F4A7C15ULL * (trial + 1));

        auto t0 = Clock::now();
        TupleSketch tuple = build_tuple_sketch(ds, cfg.epsilon, cfg.constant, trial_seed);
        st.tuple_build_ms = ms_since(t0);
        st.tuple_size = tuple.size();

        t0 = Clock::now();
        PairSketch pair = build_pair_sketch(ds, cfg.epsilon, cfg.constant, trial_seed);
        st.pair_build_ms = ms_since(t0);
        st.pair_size = pair.size();

        std::vector<bool> tuple_decisions(queries.size());
        t0 = Clock::now();
        for (std::size_t i = 0; i < queries.size(); ++i)
            tuple_decisions[i] = query(tuple, queries[i]).accepted;
        st.tuple_query_ms = ms_since(t0);

        t0 = Clock::now();
        for (std::size_t i = 0; i < queries.size(); ++i) {
            bool accepted = query(pair, queries[i]).accepted;
            if (accepted == tuple_decisions[i]) ++st.agreements;
        }
        st.pair_query_ms = ms_since(t0);
    };

    std::uint32_t jobs = std::max<std::uint32_t>(1, cfg.jobs);
    if (jobs == 1) {
        for (std::uint32_t t = 0; t < cfg.trials; ++t) run_trial(t);
    } else {
        std::atomic<std::uint32_t> next{0};
        std::vector<std::thread> workers;
        for (std::uint32_t w = 0; w < std::min(jobs, cfg.trials); ++w) {
            workers.emplace_back([&] {
                while (true) {
                    std::uint32_t t = next.fetch_add(1);
                    if (t >= cfg.trials) break;
                    run_trial(t);
                }
            });
        }
        for (auto& th : workers) th.join();
    }

    BenchResult res;
    res.n = ds.row_count();
    res.m = m;
    res.epsilon = cfg.epsilon;
    res.constant = cfg.constant;
    res.trials = cfg.trials;
    res.queries = cfg.queries;
    double tuple_total = 0, pair_total = 0;
    std::uint64_t agreements = 0;
    for (const auto& st : stats) {
        res.tuple.build_ms_mean += st.tuple_build_ms / cfg.trials;
        res.tuple.query_ms_mean += st.tuple_query_ms / cfg.trials;
        res.pair.build_ms_mean += st.pair_build_ms / cfg.trials;
        res.pair.query_ms_mean += st.pair_query_ms / cfg.trials;
        tuple_total += st.tuple_build_ms + st.tuple_query_ms;
        pair_total += st.pair_build_ms + st.pair_query_ms;
        agreements += st.agreements;
        res.tuple.sample_size = st.tuple_size;
        res.pair.sample_size = st.pair_size;
    }
    res.size_ratio = res.tuple.sample_size > 0
                         ? static_cast<double>(res.pair.sample_size) / res.tuple.sample_size
                         : 0.0;
    res.agreement_pct = 100.0 * static_cast<double>(agreements) /
                        (static_cast<double>(cfg.trials) * cfg.queries);
    res.speedup = tuple_total > 0 ? pair_total / tuple_total : 0.0;
    return res;
}

Dataset synthetic_dataset(std::uint64_t n, std::uint32_t m, std::uint64_t seed) {
    if (n < 1 || m < 1) throw std::invalid_argument("synthetic_dataset: need n >= 1, m >= 1");
    // Roughly 4 of every 7 columns near-unique, the rest small categorical.
    static constexpr std::uint32_t kSmallCards[] = {2, 3, 4, 5};
    CounterRng rng(seed, 0x5D47);
    std::vector<std::vector<std::string>> cols(m);
    std::vector<std::string> names(m);
    std::uint32_t small_seen = 0, big_seen = 0;
    for (std::uint32_t j = 0; j < m; ++j) {
        names[j] = "a" + std::to_string(j);
        bool big = (j % 7) < 4;
        std::uint64_t card;
        if (big) {
            card = std::max<std::uint64_t>(2, n / 2 + 997 * big_seen++);
        } else {
            card = kSmallCards[small_seen++ % 4];
        }
        auto& col = cols[j];
        col.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i)
            col.push_back(std::to_string(rng.uniform_below(card)));
    }
    return Dataset::from_columns(std::move(cols), std::move(names));
}

}  // namespace qikey::bench
