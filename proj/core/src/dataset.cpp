#include "qikey/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qikey {

AttributeSet::AttributeSet(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

AttributeSet AttributeSet::full(std::uint32_t m) {
    std::vector<std::uint32_t> idx(m);
    for (std::uint32_t i = 0; i < m; ++i) idx[i] = i;
    return AttributeSet(std::move(idx));
}

AttributeSet AttributeSet::from_mask(std::uint64_t mask) {
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < 64; ++i)
        if (mask >> i & 1) idx.push_back(i);
    return AttributeSet(std::move(idx));
}

bool AttributeSet::contains(std::uint32_t col) const {
    return std::binary_search(indices_.begin(), indices_.end(), col);
}

std::uint64_t AttributeSet::to_mask() const {
    std::uint64_t mask = 0;
    for (auto i : indices_) {
        if (i >= 64) throw std::out_of_range("AttributeSet::to_mask: index >= 64");
        mask |= std::uint64_t{1} << i;
    }
    return mask;
}

void AttributeSet::validate_against(std::uint32_t m) const {
    if (!indices_.empty() && indices_.back() >= m)
        throw std::out_of_range("attribute index " + std::to_string(indices_.back()) +
                                " out of range for " + std::to_string(m) + " columns");
}

namespace {

// One CSV record; handles quoting, doubled quotes, CRLF, embedded newlines.
// Returns false on clean EOF before any character of a new record.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    int c = in.get();
    if (c == std::istream::traits_type::eof()) return false;

    std::string field;
    bool quoted = false;
    while (true) {
        if (c == std::istream::traits_type::eof()) {
            fields.push_back(std::move(field));
            return true;
        }
        char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                int peek = in.peek();
                if (peek == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            fields.push_back(std::move(field));
            return true;
        } else if (ch == '\r') {
            if (in.peek() == '\n') in.get();
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(ch);
        }
        c = in.get();
    }
}

void quote_field(std::ostream& out, const std::string& s) {
    bool needs_quote = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quote) {
        out << s;
        return;
    }
    out << '"';
    for (char ch : s) {
        if (ch == '"') out << "\"\"";
        else out << ch;
    }
    out << '"';
}

}  // namespace

Dataset Dataset::load_csv(const std::filesystem::path& path, bool has_header) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    return load_csv(in, has_header);
}

Dataset Dataset::load_csv(std::istream& in, bool has_header) {
    std::vector<std::string> fields;
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> cells;  // column-major
    std::size_t m = 0;
    std::uint64_t record = 0;

    if (has_header) {
        if (!read_record(in, fields)) throw std::runtime_error("empty CSV file");
        names = fields;
        m = names.size();
        ++record;
    }
    bool first_data_row = true;
    while (read_record(in, fields)) {
        ++record;
        if (first_data_row && !has_header) {
            m = fields.size();
        }
        if (first_data_row) {
            cells.resize(m);
            first_data_row = false;
        }
        if (fields.size() != m)
            throw std::runtime_error("ragged CSV row " + std::to_string(record) + ": expected " +
                                     std::to_string(m) + " fields, got " +
                                     std::to_string(fields.size()));
        for (std::size_t j = 0; j < m; ++j) cells[j].push_back(std::move(fields[j]));
    }
    if (record == 0) throw std::runtime_error("empty CSV file");
    if (first_data_row) cells.resize(m);
    return from_columns(std::move(cells), std::move(names));
}

Dataset Dataset::from_columns(std::vector<std::vector<std::string>> columns,
                              std::vector<std::string> names) {
    if (columns.empty()) throw std::invalid_argument("dataset needs at least one column");
    const std::size_t n = columns[0].size();
    for (const auto& col : columns)
        if (col.size() != n) throw std::invalid_argument("columns of unequal length");
    if (!names.empty() && names.size() != columns.size())
        throw std::invalid_argument("name count does not match column count");
    if (n > 0xFFFFFFFFull || columns.size() > 0xFFFFFFFFull)
        throw std::invalid_argument("dataset too large");

    Dataset ds;
    ds.n_ = static_cast<std::uint32_t>(n);
    ds.m_ = static_cast<std::uint32_t>(columns.size());
    ds.names_ = std::move(names);
    ds.columns_.resize(ds.m_);
    ds.dictionaries_.resize(ds.m_);

    // Encode one column at a time so raw cells can be released early.
    for (std::uint32_t j = 0; j < ds.m_; ++j) {
        auto& raw = columns[j];
        std::unordered_map<std::string_view, std::uint32_t> seen;
        seen.reserve(raw.size());
        std::vector<std::uint32_t> temp_codes(raw.size());
        std::vector<std::string_view> uniques;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            auto [it, inserted] = seen.try_emplace(raw[i], static_cast<std::uint32_t>(uniques.size()));
            if (inserted) uniques.push_back(it->first);
            temp_codes[i] = it->second;
        }
        // Rank uniques lexicographically so code order matches raw order.
        std::vector<std::uint32_t> order(uniques.size());
        for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return uniques[a] < uniques[b]; });
        std::vector<std::uint32_t> rank(uniques.size());
        auto& dict = ds.dictionaries_[j];
        dict.resize(uniques.size());
        for (std::uint32_t pos = 0; pos < order.size(); ++pos) {
            rank[order[pos]] = pos;
            dict[pos] = std::string(uniques[order[pos]]);
        }
        auto& codes = ds.columns_[j];
        codes.resize(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) codes[i] = rank[temp_codes[i]];
        raw.clear();
        raw.shrink_to_fit();
    }
    return ds;
}

Dataset Dataset::from_rows(const std::vector<std::vector<std::string>>& rows,
                           std::vector<std::string> names) {
    if (rows.empty()) {
        if (names.empty()) throw std::invalid_argument("from_rows: no rows and no names");
        std::vector<std::vector<std::string>> cols(names.size());
        return from_columns(std::move(cols), std::move(names));
    }
    const std::size_t m = rows[0].size();
    std::vector<std::vector<std::string>> cols(m);
    for (auto& c : cols) c.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m)
            throw std::invalid_argument("from_rows: ragged row " + std::to_string(i));
        for (std::size_t j = 0; j < m; ++j) cols[j].push_back(rows[i][j]);
    }
    return from_columns(std::move(cols), std::move(names));
}

std::span<const std::uint32_t> Dataset::column(std::uint32_t col) const {
    if (col >= m_) throw std::out_of_range("column index out of range");
    return columns_[col];
}

std::uint32_t Dataset::dictionary_size(std::uint32_t col) const {
    if (col >= m_) throw std::out_of_range("column index out of range");
    return static_cast<std::uint32_t>(dictionaries_[col].size());
}

const std::string& Dataset::decode(std::uint32_t col, std::uint32_t code) const {
    if (col >= m_) throw std::out_of_range("column index out of range");
    const auto& dict = dictionaries_[col];
    if (code >= dict.size()) throw std::out_of_range("code out of range");
    return dict[code];
}

std::optional<std::uint32_t> Dataset::column_index(std::string_view name) const {
    for (std::uint32_t j = 0; j < names_.size(); ++j)
        if (names_[j] == name) return j;
    return std::nullopt;
}

std::string Dataset::column_label(std::uint32_t col) const {
    if (col < names_.size()) return names_[col];
    return std::to_string(col);
}

std::vector<std::vector<std::uint32_t>> Dataset::project(std::span<const std::uint32_t> rows,
                                                         const AttributeSet& A) const {
    A.validate_against(m_);
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(rows.size());
    for (auto r : rows) {
        if (r >= n_) throw std::out_of_range("row index " + std::to_string(r) + " out of range");
        std::vector<std::uint32_t> v;
        v.reserve(A.size());
        for (auto c : A.indices()) v.push_back(columns_[c][r]);
        out.push_back(std::move(v));
    }
    return out;
}

void Dataset::write_csv(std::ostream& out) const {
    if (!names_.empty()) {
        for (std::uint32_t j = 0; j < m_; ++j) {
            if (j) out << ',';
            quote_field(out, names_[j]);
        }
        out << '\n';
    }
    for (std::uint32_t i = 0; i < n_; ++i) {
        for (std::uint32_t j = 0; j < m_; ++j) {
            if (j) out << ',';
            quote_field(out, dictionaries_[j][columns_[j][i]]);
        }
        out << '\n';
    }
}

void Dataset::write_csv(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
    write_csv(out);
}

}  // namespace qikey
