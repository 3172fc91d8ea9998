#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qikey {

// Query object: a subset of column indices, stored strictly increasing.
class AttributeSet {
public:
    AttributeSet() = default;
    explicit AttributeSet(std::vector<std::uint32_t> indices);

    static AttributeSet full(std::uint32_t m);
    // Bit i of mask selects column i. Supports m <= 64.
    static AttributeSet from_mask(std::uint64_t mask);

    std::span<const std::uint32_t> indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    bool contains(std::uint32_t col) const;
    std::uint64_t to_mask() const;

    // Throws std::out_of_range if any index is >= m.
    void validate_against(std::uint32_t m) const;

    bool operator==(const AttributeSet&) const = default;

private:
    std::vector<std::uint32_t> indices_;
};

// Dictionary-encoded columnar table. Each column stores integer codes into a
// per-column dictionary sorted by raw value, so code order equals the
// lexicographic order of the raw strings. Missing/empty cells encode as the
// empty string, which sorts before every other value. Immutable after
// construction; safe for concurrent reads.
class Dataset {
public:
    // RFC-4180-style CSV: quoted fields, doubled quotes, embedded separators
    // and newlines. Throws std::runtime_error on an empty file or on a row
    // whose field count differs from the first row (message names the row).
    static Dataset load_csv(const std::filesystem::path& path, bool has_header);
    static Dataset load_csv(std::istream& in, bool has_header);

    // Build from raw cells, column-major. Every column must have equal length
    // and there must be at least one column.
    static Dataset from_columns(std::vector<std::vector<std::string>> columns,
                                std::vector<std::string> names = {});
    // Convenience for tests and generators; row-major input.
    static Dataset from_rows(const std::vector<std::vector<std::string>>& rows,
                             std::vector<std::string> names = {});

    std::uint32_t row_count() const { return n_; }
    std::uint32_t column_count() const { return m_; }
    std::uint64_t pair_count() const {
        return static_cast<std::uint64_t>(n_) * (n_ - (n_ > 0 ? 1 : 0)) / 2;
    }

    std::span<const std::uint32_t> column(std::uint32_t col) const;
    std::uint32_t code_at(std::uint32_t row, std::uint32_t col) const {
        return columns_[col][row];
    }
    std::uint32_t dictionary_size(std::uint32_t col) const;
    const std::string& decode(std::uint32_t col, std::uint32_t code) const;

    const std::vector<std::string>& column_names() const { return names_; }
    bool has_names() const { return !names_.empty(); }
    std::optional<std::uint32_t> column_index(std::string_view name) const;
    // Column name if present, otherwise the decimal index.
    std::string column_label(std::uint32_t col) const;

    // Code vectors for the requested rows restricted to A, in A's order.
    // Throws std::out_of_range on an invalid row index.
    std::vector<std::vector<std::uint32_t>> project(std::span<const std::uint32_t> rows,
                                                    const AttributeSet& A) const;

    void write_csv(std::ostream& out) const;
    void write_csv(const std::filesystem::path& path) const;

private:
    Dataset() = default;

    std::uint32_t n_ = 0;
    std::uint32_t m_ = 0;
    std::vector<std::vector<std::uint32_t>> columns_;    // [col][row]
    std::vector<std::vector<std::string>> dictionaries_; // [col][code] -> raw, sorted
    std::vector<std::string> names_;
};

}  // namespace qikey
