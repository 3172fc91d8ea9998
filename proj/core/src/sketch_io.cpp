#include "qikey/sketch_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qikey {

namespace {

using nlohmann::json;

json codes_to_json(const std::vector<std::uint32_t>& codes) { return json(codes); }

std::vector<std::uint32_t> codes_from_json(const json& j) {
    return j.get<std::vector<std::uint32_t>>();
}

json pairs_to_json(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back(json::array({a, b}));
    return arr;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_from_json(const json& j) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(j.size());
    for (const auto& e : j) out.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
    return out;
}

void write_with_magic(std::ostream& out, const json& body) {
    out << kSketchMagic << ' ' << kSketchFormatVersion << '\n' << body.dump() << '\n';
    if (!out) throw std::runtime_error("failed to write sketch");
}

json read_body(std::istream& in) {
    std::string magic;
    int version = -1;
    in >> magic >> version;
    if (!in || magic != kSketchMagic)
        throw std::runtime_error("not a qikey sketch file (missing magic header)");
    if (version != kSketchFormatVersion)
        throw std::runtime_error("unsupported sketch format version " + std::to_string(version));
    json body;
    in >> body;
    if (!in && !in.eof()) throw std::runtime_error("malformed sketch body");
    return body;
}

}  // namespace

void save_sketch(const TupleSketch& sk, std::ostream& out) {
    json j;
    j["kind"] = "tuple";
    j["epsilon"] = sk.epsilon;
    j["constant"] = sk.constant;
    j["seed"] = sk.seed;
    j["m"] = sk.m;
    j["n"] = sk.source_rows;
    j["sample_rows"] = sk.sample_rows;
    j["codes"] = codes_to_json(sk.codes);
    if (!sk.column_names.empty()) j["columns"] = sk.column_names;
    write_with_magic(out, j);
}

void save_sketch(const PairSketch& sk, std::ostream& out) {
    json j;
    j["kind"] = "pair";
    j["epsilon"] = sk.epsilon;
    j["constant"] = sk.constant;
    j["seed"] = sk.seed;
    j["m"] = sk.m;
    j["n"] = sk.source_rows;
    j["source_pairs"] = pairs_to_json(sk.source_pairs);
    j["left_codes"] = codes_to_json(sk.left_codes);
    j["right_codes"] = codes_to_json(sk.right_codes);
    if (!sk.column_names.empty()) j["columns"] = sk.column_names;
    write_with_magic(out, j);
}

void save_sketch(const EstimatorSketch& sk, std::ostream& out) {
    json j;
    j["kind"] = "estimator";
    j["k"] = sk.k;
    j["alpha"] = sk.alpha;
    j["epsilon"] = sk.epsilon;
    j["constant"] = sk.constant;
    j["seed"] = sk.seed;
    j["m"] = sk.m;
    j["n"] = sk.n;
    j["source_pairs"] = pairs_to_json(sk.source_pairs);
    j["left_codes"] = codes_to_json(sk.left_codes);
    j["right_codes"] = codes_to_json(sk.right_codes);
    if (!sk.column_names.empty()) j["columns"] = sk.column_names;
    write_with_magic(out, j);
}

template <typename Sketch>
void save_sketch_file(const Sketch& sk, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
    save_sketch(sk, out);
}

template void save_sketch_file<TupleSketch>(const TupleSketch&, const std::filesystem::path&);
template void save_sketch_file<PairSketch>(const PairSketch&, const std::filesystem::path&);
template void save_sketch_file<EstimatorSketch>(const EstimatorSketch&,
                                                const std::filesystem::path&);

AnySketch load_sketch(std::istream& in) {
    json j = read_body(in);
    const std::string kind = j.at("kind").get<std::string>();
    std::vector<std::string> names;
    if (j.contains("columns")) names = j["columns"].get<std::vector<std::string>>();
    if (kind == "tuple") {
        TupleSketch sk;
        sk.epsilon = j.at("epsilon").get<double>();
        sk.constant = j.at("constant").get<double>();
        sk.seed = j.at("seed").get<std::uint64_t>();
        sk.m = j.at("m").get<std::uint32_t>();
        sk.source_rows = j.at("n").get<std::uint64_t>();
        sk.sample_rows = j.at("sample_rows").get<std::vector<std::uint32_t>>();
        sk.codes = codes_from_json(j.at("codes"));
        sk.column_names = std::move(names);
        if (sk.codes.size() != static_cast<std::size_t>(sk.sample_rows.size()) * sk.m)
            throw std::runtime_error("tuple sketch body is inconsistent");
        return sk;
    }
    if (kind == "pair") {
        PairSketch sk;
        sk.epsilon = j.at("epsilon").get<double>();
        sk.constant = j.at("constant").get<double>();
        sk.seed = j.at("seed").get<std::uint64_t>();
        sk.m = j.at("m").get<std::uint32_t>();
        sk.source_rows = j.at("n").get<std::uint64_t>();
        sk.source_pairs = pairs_from_json(j.at("source_pairs"));
        sk.left_codes = codes_from_json(j.at("left_codes"));
        sk.right_codes = codes_from_json(j.at("right_codes"));
        sk.column_names = std::move(names);
        if (sk.left_codes.size() != sk.source_pairs.size() * sk.m ||
            sk.right_codes.size() != sk.source_pairs.size() * sk.m)
            throw std::runtime_error("pair sketch body is inconsistent");
        return sk;
    }
    if (kind == "estimator") {
        EstimatorSketch sk;
        sk.k = j.at("k").get<std::uint32_t>();
        sk.alpha = j.at("alpha").get<double>();
        sk.epsilon = j.at("epsilon").get<double>();
        sk.constant = j.at("constant").get<double>();
        sk.seed = j.at("seed").get<std::uint64_t>();
        sk.m = j.at("m").get<std::uint32_t>();
        sk.n = j.at("n").get<std::uint64_t>();
        sk.source_pairs = pairs_from_json(j.at("source_pairs"));
        sk.left_codes = codes_from_json(j.at("left_codes"));
        sk.right_codes = codes_from_json(j.at("right_codes"));
        sk.column_names = std::move(names);
        if (sk.left_codes.size() != sk.source_pairs.size() * sk.m ||
            sk.right_codes.size() != sk.source_pairs.size() * sk.m)
            throw std::runtime_error("estimator sketch body is inconsistent");
        return sk;
    }
    throw std::runtime_error("unknown sketch kind: " + kind);
}

AnySketch load_sketch_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open sketch file: " + path.string());
    return load_sketch(in);
}

}  // namespace qikey
