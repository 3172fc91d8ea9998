#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "qikey/estimator.hpp"
#include "qikey/filter.hpp"

namespace qikey {

// Sketch files start with the magic line "QIKEYSK <version>" followed by a
// JSON body (parameters, seed and materialized code vectors), so queries run
// without the original dataset.
inline constexpr const char* kSketchMagic = "QIKEYSK";
inline constexpr int kSketchFormatVersion = 1;

void save_sketch(const TupleSketch& sk, std::ostream& out);
void save_sketch(const PairSketch& sk, std::ostream& out);
void save_sketch(const EstimatorSketch& sk, std::ostream& out);

template <typename Sketch>
void save_sketch_file(const Sketch& sk, const std::filesystem::path& path);

using AnySketch = std::variant<TupleSketch, PairSketch, EstimatorSketch>;

// Throws std::runtime_error on a missing magic header, an unsupported
// version, or a malformed body.
AnySketch load_sketch(std::istream& in);
AnySketch load_sketch_file(const std::filesystem::path& path);

}  // namespace qikey
