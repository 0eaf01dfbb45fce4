#pragma once

#include "adjpow/coefficients.hpp"
#include "adjpow/combinatorics.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adjpow {

enum class Format { markdown, csv, json };

// Throws DomainError for anything other than markdown, csv or json.
Format parse_format(std::string_view name);

// A triangular (or single-column) table of decimal strings, one row per
// index value. All emitters below go through this shape.
struct IndexedTable {
    std::string kind;
    std::string index_name;
    std::vector<std::string> columns;
    std::vector<std::pair<int, std::vector<std::string>>> rows;
};

// Deterministic text for a table. Rows are not padded to the full width.
// JSON holds every table value as a decimal string.
std::string render(const IndexedTable& table, Format format);

IndexedTable to_indexed(const DecompositionTable& table);
IndexedTable to_indexed(const EulerTable& table);
IndexedTable to_indexed(const HigherDerangementTable& table);
IndexedTable derangement_indexed(std::span<const ExactInteger> values);
IndexedTable to_indexed(const PowerSeries& series);

std::string render_table(const DecompositionTable& table, Format format);

// A single row without the k column: csv is "c_0,...,c_k".
std::string render_row(const CoefficientRow& row, Format format);

}  // namespace adjpow
