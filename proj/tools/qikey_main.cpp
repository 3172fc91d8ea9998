#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qikey/qikey.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Exit code 2: bad flags, unknown columns, malformed parameters.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("QIKEY_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("QIKEY_SEED is not a valid unsigned integer");
        }
    }
    return 0;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    for (char c : text) {
        if (c == ',') {
            out.push_back(item);
            item.clear();
        } else {
            item.push_back(c);
        }
    }
    out.push_back(item);
    return out;
}

// Attribute tokens are column names (when available) or 0-based indices.
qikey::AttributeSet parse_attrs(const std::string& text,
                                const std::vector<std::string>& names, std::uint32_t m) {
    if (text.empty()) return {};
    std::vector<std::uint32_t> idx;
    for (const auto& token : split_list(text)) {
        if (token.empty()) throw UsageError("empty attribute token in --attrs");
        bool found = false;
        for (std::uint32_t j = 0; j < names.size(); ++j) {
            if (names[j] == token) {
                idx.push_back(j);
                found = true;
                break;
            }
        }
        if (found) continue;
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(token, &pos);
            if (pos != token.size() || v >= m) throw std::invalid_argument("range");
            idx.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw UsageError("unknown column name or index: '" + token + "'");
        }
    }
    return qikey::AttributeSet(std::move(idx));
}

json attr_labels(const qikey::AttributeSet& attrs, const std::vector<std::string>& names) {
    json arr = json::array();
    for (auto c : attrs.indices())
        arr.push_back(c < names.size() ? names[c] : std::to_string(c));
    return arr;
}

// "10,1x30" -> {10, 1 (x30)}
std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& token : split_list(text)) {
        if (token.empty()) throw UsageError("empty item in value list");
        double value;
        std::uint64_t repeat = 1;
        auto x = token.find('x');
        try {
            if (x == std::string::npos) {
                value = std::stod(token);
            } else {
                value = std::stod(token.substr(0, x));
                repeat = std::stoull(token.substr(x + 1));
            }
        } catch (const std::exception&) {
            throw UsageError("bad value list item: '" + token + "'");
        }
        out.insert(out.end(), repeat, value);
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json witness_json(const std::pair<std::uint32_t, std::uint32_t>& w) {
    return json::array({w.first, w.second});
}

// ---------------------------------------------------------------- filter ---

struct FilterArgs {
    std::string input, sketch_in, sketch_out;
    bool no_header = false;
    double epsilon = 0;
    double constant = 10;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> attrs;
    bool baseline = false;
    bool no_timings = false;
};

int cmd_filter(const FilterArgs& a) {
    json out;
    double build_ms = 0;
    qikey::AnySketch sketch;

    if (!a.sketch_in.empty()) {
        sketch = qikey::load_sketch_file(a.sketch_in);
        if (std::holds_alternative<qikey::EstimatorSketch>(sketch))
            throw UsageError("--sketch-in points at an estimator sketch; use `qikey estimate`");
    } else {
        if (a.input.empty()) throw UsageError("either --input or --sketch-in is required");
        if (!(a.epsilon > 0 && a.epsilon < 1))
            throw UsageError("--epsilon must be in (0, 1)");
        qikey::Dataset ds = qikey::Dataset::load_csv(a.input, !a.no_header);
        std::uint64_t seed = resolve_seed(a.seed);
        auto t0 = Clock::now();
        if (a.baseline)
            sketch = qikey::build_pair_sketch(ds, a.epsilon, a.constant, seed);
        else
            sketch = qikey::build_tuple_sketch(ds, a.epsilon, a.constant, seed);
        build_ms = ms_since(t0);
    }

    const auto& names = std::visit([](const auto& sk) -> const std::vector<std::string>& {
        return sk.column_names;
    }, sketch);
    std::uint32_t m = std::visit([](const auto& sk) { return sk.m; }, sketch);
    std::uint64_t sample_size = std::visit(
        [](const auto& sk) { return static_cast<std::uint64_t>(sk.size()); }, sketch);

    out["mode"] = std::holds_alternative<qikey::PairSketch>(sketch) ? "pair" : "tuple";
    out["sample_size"] = sample_size;

    if (a.attrs) {
        auto attrs = parse_attrs(*a.attrs, names, m);
        auto t0 = Clock::now();
        qikey::FilterDecision d;
        if (const auto* tup = std::get_if<qikey::TupleSketch>(&sketch))
            d = qikey::query(*tup, attrs);
        else
            d = qikey::query(std::get<qikey::PairSketch>(sketch), attrs);
        double query_ms = ms_since(t0);
        out["decision"] = d.accepted ? "accept" : "reject";
        if (d.witness) out["witness"] = witness_json(*d.witness);
        if (!a.no_timings) {
            out["build_ms"] = build_ms;
            out["query_ms"] = query_ms;
        }
    } else if (!a.no_timings) {
        out["build_ms"] = build_ms;
    }

    if (!a.sketch_out.empty()) {
        std::visit([&](const auto& sk) { qikey::save_sketch_file(sk, a.sketch_out); }, sketch);
        out["sketch_out"] = a.sketch_out;
    }
    emit(out);
    return 0;
}

// ---------------------------------------------------------------- minkey ---

struct MinkeyArgs {
    std::string input;
    bool no_header = false;
    double epsilon = 0;
    double constant = 10;
    std::optional<std::uint64_t> seed;
    bool exact = false;
};

int cmd_minkey(const MinkeyArgs& a) {
    if (a.input.empty()) throw UsageError("--input is required");
    qikey::Dataset ds = qikey::Dataset::load_csv(a.input, !a.no_header);
    json out;
    if (a.exact) {
        auto key = qikey::exact_minkey(ds);
        out["miner"] = "exact";
        if (key) {
            out["key"] = attr_labels(*key, ds.column_names());
        } else {
            out["key"] = nullptr;
            out["note"] = "no key: dataset contains duplicate rows";
        }
        out["sample_size"] = ds.row_count();
        emit(out);
        return 0;
    }
    if (!(a.epsilon > 0 && a.epsilon < 1)) throw UsageError("--epsilon must be in (0, 1)");
    auto sk = qikey::build_tuple_sketch(ds, a.epsilon, a.constant, resolve_seed(a.seed));
    auto res = qikey::greedy_minkey(sk);
    out["miner"] = "greedy";
    out["key"] = attr_labels(res.key, ds.column_names());
    out["sample_size"] = res.sample_size;
    out["residual_pairs"] = res.residual_pairs;
    json steps = json::array();
    for (const auto& st : res.steps) {
        json s;
        s["column"] = st.column < ds.column_names().size() ? json(ds.column_names()[st.column])
                                                           : json(std::to_string(st.column));
        s["gain"] = st.gain;
        steps.push_back(std::move(s));
    }
    out["per_step"] = std::move(steps);
    emit(out);
    return 0;
}

// -------------------------------------------------------------- estimate ---

struct EstimateArgs {
    std::string input, sketch_in, sketch_out;
    bool no_header = false;
    std::uint32_t k = 1;
    double alpha = 0.1;
    double epsilon = 0.1;
    double constant = 10;
    std::optional<std::uint64_t> seed;
    std::string attrs;
};

int cmd_estimate(const EstimateArgs& a) {
    qikey::EstimatorSketch sk;
    if (!a.sketch_in.empty()) {
        auto any = qikey::load_sketch_file(a.sketch_in);
        auto* est = std::get_if<qikey::EstimatorSketch>(&any);
        if (!est) throw UsageError("--sketch-in is not an estimator sketch");
        sk = std::move(*est);
    } else {
        if (a.input.empty()) throw UsageError("either --input or --sketch-in is required");
        qikey::Dataset ds = qikey::Dataset::load_csv(a.input, !a.no_header);
        sk = qikey::build_estimator(ds, a.k, a.alpha, a.epsilon, a.constant,
                                    resolve_seed(a.seed));
    }
    if (!a.sketch_out.empty()) qikey::save_sketch_file(sk, a.sketch_out);

    auto attrs = parse_attrs(a.attrs, sk.column_names, sk.m);
    auto res = qikey::estimate(sk, attrs);
    json out;
    if (res.small) {
        out["result"] = "small";
    } else {
        out["estimate"] = res.estimate;
        out["d_a"] = res.agreeing_pairs;
        out["pairs"] = res.sample_pairs;
    }
    emit(out);
    return 0;
}

// ------------------------------------------------------------------- gen ---

void write_generated(const qikey::Dataset& ds, const std::string& out_path,
                     const json& params) {
    ds.write_csv(std::filesystem::path(out_path));
    json manifest;
    manifest["generator"] = params;
    manifest["rows"] = ds.row_count();
    manifest["cols"] = ds.column_count();
    std::string manifest_path = out_path + ".manifest.json";
    std::ofstream mf(manifest_path);
    if (!mf) throw std::runtime_error("cannot write manifest: " + manifest_path);
    mf << manifest.dump(2) << '\n';

    json report;
    report["path"] = out_path;
    report["rows"] = ds.row_count();
    report["cols"] = ds.column_count();
    report["manifest"] = manifest_path;
    emit(report);
}

// --------------------------------------------------------------- analyze ---

qikey::CliqueSizeVector make_csv_vector(const std::string& s_text,
                                        std::optional<double> n, double epsilon) {
    qikey::CliqueSizeVector v;
    v.s = parse_value_list(s_text);
    double sum = 0;
    for (double x : v.s) sum += x;
    v.n = n.value_or(sum);
    v.epsilon = epsilon;
    return v;
}

// ------------------------------------------------------------------ bench ---

struct BenchArgs {
    std::string input;
    bool no_header = false;
    bool synthetic = false;
    std::uint64_t synthetic_rows = 32561;
    std::uint32_t synthetic_cols = 14;
    qikey::bench::BenchConfig cfg;
    std::optional<std::uint64_t> seed;
};

int cmd_bench(const BenchArgs& a) {
    if (a.input.empty() && !a.synthetic)
        throw UsageError("provide --input or --synthetic");
    qikey::bench::BenchConfig cfg = a.cfg;
    cfg.seed = resolve_seed(a.seed);
    qikey::Dataset ds = a.synthetic
        ? qikey::bench::synthetic_dataset(a.synthetic_rows, a.synthetic_cols, cfg.seed)
        : qikey::Dataset::load_csv(a.input, !a.no_header);
    std::cerr << "bench: n=" << ds.row_count() << " m=" << ds.column_count()
              << " eps=" << cfg.epsilon << " C=" << cfg.constant
              << " trials=" << cfg.trials << " queries=" << cfg.queries << "\n";
    auto res = qikey::bench::run_bench(ds, cfg);
    json out;
    out["n"] = res.n;
    out["m"] = res.m;
    out["epsilon"] = res.epsilon;
    out["constant"] = res.constant;
    out["trials"] = res.trials;
    out["queries"] = res.queries;
    out["tuple"] = {{"sample_size", res.tuple.sample_size},
                    {"build_ms_mean", res.tuple.build_ms_mean},
                    {"query_ms_mean", res.tuple.query_ms_mean}};
    out["pair"] = {{"sample_size", res.pair.sample_size},
                   {"build_ms_mean", res.pair.build_ms_mean},
                   {"query_ms_mean", res.pair.query_ms_mean}};
    out["size_ratio"] = res.size_ratio;
    out["agreement_pct"] = res.agreement_pct;
    out["speedup_build_plus_query"] = res.speedup;
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qikey: epsilon-separation key discovery with sampling sketches"};
    app.require_subcommand(1);

    FilterArgs fa;
    auto* filter = app.add_subcommand("filter", "Build a filter sketch and test attribute sets");
    filter->add_option("--input", fa.input, "CSV input path");
    filter->add_flag("--no-header", fa.no_header, "treat the first CSV row as data");
    filter->add_option("--epsilon", fa.epsilon, "separation slack in (0,1)");
    filter->add_option("--constant", fa.constant, "sampling constant C")->capture_default_str();
    filter->add_option("--seed", [&fa](const std::vector<std::string>& v) {
        fa.seed = std::stoull(v[0]); return true; }, "RNG seed (default: QIKEY_SEED or 0)");
    filter->add_option("--attrs", [&fa](const std::vector<std::string>& v) {
        fa.attrs = v[0]; return true; }, "comma-separated column names or indices to query");
    filter->add_flag("--baseline", fa.baseline, "use the pair-sampling baseline sketch");
    filter->add_option("--sketch-out", fa.sketch_out, "write the sketch to this path");
    filter->add_option("--sketch-in", fa.sketch_in, "query a previously saved sketch");
    filter->add_flag("--no-timings", fa.no_timings, "omit timing fields for reproducible output");

    MinkeyArgs ma;
    auto* minkey = app.add_subcommand("minkey", "Approximate minimum separation key");
    minkey->add_option("--input", ma.input, "CSV input path")->required();
    minkey->add_flag("--no-header", ma.no_header, "treat the first CSV row as data");
    minkey->add_option("--epsilon", ma.epsilon, "separation slack in (0,1)");
    minkey->add_option("--constant", ma.constant, "sampling constant C")->capture_default_str();
    minkey->add_option("--seed", [&ma](const std::vector<std::string>& v) {
        ma.seed = std::stoull(v[0]); return true; }, "RNG seed");
    minkey->add_flag("--exact", ma.exact, "exact brute-force miner over the whole table (m <= 24)");

    EstimateArgs ea;
    auto* estimate = app.add_subcommand("estimate", "Estimate unseparated pairs for a set");
    estimate->add_option("--input", ea.input, "CSV input path");
    estimate->add_flag("--no-header", ea.no_header, "treat the first CSV row as data");
    estimate->add_option("--k", ea.k, "maximum query size")->capture_default_str();
    estimate->add_option("--alpha", ea.alpha, "reporting threshold fraction")->capture_default_str();
    estimate->add_option("--epsilon", ea.epsilon, "accuracy")->capture_default_str();
    estimate->add_option("--constant", ea.constant, "sampling constant K")->capture_default_str();
    estimate->add_option("--seed", [&ea](const std::vector<std::string>& v) {
        ea.seed = std::stoull(v[0]); return true; }, "RNG seed");
    estimate->add_option("--attrs", ea.attrs, "columns to query")->required();
    estimate->add_option("--sketch-out", ea.sketch_out, "write the sketch to this path");
    estimate->add_option("--sketch-in", ea.sketch_in, "query a previously saved sketch");

    auto* gen = app.add_subcommand("gen", "Generate adversarial datasets");
    gen->require_subcommand(1);
    struct {
        std::uint32_t q = 2, m = 2;
        std::uint64_t row_cap = 10'000'000;
        std::string out;
    } gg;
    auto* grid = gen->add_subcommand("grid", "all tuples over {1..q}^m");
    grid->add_option("--q", gg.q, "values per column")->required();
    grid->add_option("--m", gg.m, "columns")->required();
    grid->add_option("--row-cap", gg.row_cap, "refuse to generate more rows than this")->capture_default_str();
    grid->add_option("--out", gg.out, "output CSV path")->required();

    struct {
        std::uint64_t n = 0;
        double epsilon = 0;
        std::uint32_t m = 2;
        std::string out;
    } gc;
    auto* clique = gen->add_subcommand("clique", "planted-clique lower-bound dataset");
    clique->add_option("--n", gc.n, "rows")->required();
    clique->add_option("--epsilon", gc.epsilon, "clique mass parameter")->required();
    clique->add_option("--m", gc.m, "columns")->capture_default_str();
    clique->add_option("--out", gc.out, "output CSV path")->required();

    struct {
        std::uint32_t k = 2, t = 2, m = 4;
        std::optional<std::uint64_t> seed;
        std::string out;
    } ge;
    auto* enc = gen->add_subcommand("encoding", "space lower-bound gadget matrix");
    enc->add_option("--k", ge.k, "ones per column")->required();
    enc->add_option("--t", ge.t, "rows = k*t")->required();
    enc->add_option("--m", ge.m, "bit-matrix columns")->capture_default_str();
    enc->add_option("--seed", [&ge](const std::vector<std::string>& v) {
        ge.seed = std::stoull(v[0]); return true; }, "RNG seed for the bit matrix");
    enc->add_option("--out", ge.out, "output CSV path")->required();

    auto* analyze = app.add_subcommand("analyze", "Collision analysis reports");
    analyze->require_subcommand(1);
    struct {
        std::string s;
        std::uint32_t r = 1;
    } ae;
    auto* esp = analyze->add_subcommand("esp", "elementary symmetric polynomial e_r(s)");
    esp->add_option("--s", ae.s, "values, e.g. 10,1x30")->required();
    esp->add_option("--r", ae.r, "degree")->required();

    struct {
        std::string s;
        std::optional<double> n;
        double epsilon = 0.25;
        std::uint32_t r = 2;
        std::string mode = "with";
    } ac;
    auto* coll = analyze->add_subcommand("collision", "non-collision probability");
    coll->add_option("--s", ac.s, "clique sizes")->required();
    coll->add_option("--n", [&ac](const std::vector<std::string>& v) {
        ac.n = std::stod(v[0]); return true; }, "target sum (default: sum of s)");
    coll->add_option("--epsilon", ac.epsilon, "feasibility parameter")->capture_default_str();
    coll->add_option("--r", ac.r, "draws")->required();
    coll->add_option("--mode", ac.mode, "with | without (replacement)")->capture_default_str();

    struct {
        std::uint64_t bins = 365;
        double delta = 0.5;
    } ab;
    auto* birthday = analyze->add_subcommand("birthday", "minimum draws for a collision");
    birthday->add_option("--bins", ab.bins, "bins")->required();
    birthday->add_option("--delta", ab.delta, "non-collision probability bound")->required();

    struct {
        std::string s;
        std::optional<double> n;
        double epsilon = 0.25;
        std::uint32_t r = 2, m = 2;
    } acl;
    auto* claim = analyze->add_subcommand("claim1", "with/without replacement comparison");
    claim->add_option("--s", acl.s, "clique sizes")->required();
    claim->add_option("--n", [&acl](const std::vector<std::string>& v) {
        acl.n = std::stod(v[0]); return true; }, "target sum (default: sum of s)");
    claim->add_option("--epsilon", acl.epsilon, "feasibility parameter")->capture_default_str();
    claim->add_option("--r", acl.r, "draws")->required();
    claim->add_option("--m", acl.m, "dimension in the e^m bound")->required();

    struct {
        std::uint32_t n = 8, r = 4;
        double epsilon = 0.25;
    } aw;
    auto* wc = analyze->add_subcommand("worstcase", "grid vs two-value maximizer of e_r");
    wc->add_option("--n", aw.n, "vector length (<= 12)")->required();
    wc->add_option("--r", aw.r, "degree (4 <= r <= 5)")->required();
    wc->add_option("--epsilon", aw.epsilon, "feasibility parameter")->required();

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Compare tuple and pair sketches");
    bench->add_option("--input", ba.input, "CSV input path");
    bench->add_flag("--no-header", ba.no_header, "treat the first CSV row as data");
    bench->add_flag("--synthetic", ba.synthetic, "use the built-in census-like synthetic table");
    bench->add_option("--synthetic-rows", ba.synthetic_rows, "synthetic row count")->capture_default_str();
    bench->add_option("--synthetic-cols", ba.synthetic_cols, "synthetic column count")->capture_default_str();
    bench->add_option("--epsilon", ba.cfg.epsilon, "separation slack")->capture_default_str();
    bench->add_option("--constant", ba.cfg.constant, "sampling constant for both modes")->capture_default_str();
    bench->add_option("--queries", ba.cfg.queries, "random attribute sets per trial")->capture_default_str();
    bench->add_option("--trials", ba.cfg.trials, "independent sketch builds")->capture_default_str();
    bench->add_option("--jobs", ba.cfg.jobs, "parallel trial workers")->capture_default_str();
    bench->add_option("--seed", [&ba](const std::vector<std::string>& v) {
        ba.seed = std::stoull(v[0]); return true; }, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (filter->parsed()) return cmd_filter(fa);
        if (minkey->parsed()) return cmd_minkey(ma);
        if (estimate->parsed()) return cmd_estimate(ea);
        if (gen->parsed()) {
            if (grid->parsed()) {
                auto ds = qikey::gen_grid(gg.q, gg.m, gg.row_cap);
                write_generated(ds, gg.out,
                                json{{"kind", "grid"}, {"q", gg.q}, {"m", gg.m},
                                     {"row_cap", gg.row_cap}});
            } else if (clique->parsed()) {
                auto ds = qikey::gen_clique(gc.n, gc.epsilon, gc.m);
                write_generated(ds, gc.out,
                                json{{"kind", "clique"}, {"n", gc.n},
                                     {"epsilon", gc.epsilon}, {"m", gc.m}});
            } else {
                std::uint64_t seed = resolve_seed(ge.seed);
                auto matrix = qikey::random_encoding_matrix(ge.k, ge.t, ge.m, seed);
                auto ds = qikey::gen_encoding(matrix, ge.k, ge.t);
                write_generated(ds, ge.out,
                                json{{"kind", "encoding"}, {"k", ge.k}, {"t", ge.t},
                                     {"m", ge.m}, {"seed", seed}});
            }
            return 0;
        }
        if (analyze->parsed()) {
            json out;
            if (esp->parsed()) {
                auto values = parse_value_list(ae.s);
                out["op"] = "elementary_symmetric";
                out["r"] = ae.r;
                out["value"] = qikey::elementary_symmetric(
                    std::span<const double>(values), ae.r);
            } else if (coll->parsed()) {
                auto v = make_csv_vector(ac.s, ac.n, ac.epsilon);
                if (ac.mode != "with" && ac.mode != "without")
                    throw UsageError("--mode must be 'with' or 'without'");
                auto scheme = ac.mode == "with" ? qikey::SamplingScheme::with_replacement
                                                : qikey::SamplingScheme::without_replacement;
                out["op"] = "non_collision_prob";
                out["r"] = ac.r;
                out["mode"] = ac.mode;
                out["probability"] = qikey::non_collision_prob(v, ac.r, scheme);
            } else if (birthday->parsed()) {
                out["op"] = "birthday_min_samples";
                out["bins"] = ab.bins;
                out["delta"] = ab.delta;
                out["samples"] = qikey::birthday_min_samples(ab.bins, ab.delta);
            } else if (claim->parsed()) {
                auto v = make_csv_vector(acl.s, acl.n, acl.epsilon);
                auto rep = qikey::verify_replacement_claim(v, acl.r, acl.m);
                out["op"] = "replacement_claim";
                out["precondition_ok"] = rep.precondition_ok;
                out["with_replacement"] = rep.with_replacement;
                out["without_replacement"] = rep.without_replacement;
                out["ratio"] = rep.ratio;
                out["bound"] = rep.bound;
                out["holds"] = rep.holds;
            } else {
                auto rep = qikey::worstcase_search(aw.n, aw.r, aw.epsilon);
                out["op"] = "worstcase_search";
                out["grid_value"] = rep.grid_value;
                out["grid_argmax"] = rep.grid_argmax;
                out["two_value_value"] = rep.two_value_value;
                out["two_value_argmax"] = rep.two_value_argmax;
                out["grid_argmax_distinct_positive"] = rep.grid_argmax_distinct_positive;
                out["two_value_attains_grid_optimum"] = rep.two_value_attains_grid_optimum;
            }
            emit(out);
            return 0;
        }
        if (bench->parsed()) return cmd_bench(ba);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
