#include "adjpow/render.hpp"

#include <json.hpp>

#include <sstream>

namespace adjpow {

namespace {

std::vector<std::string> decimal(std::span<const ExactInteger> values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

std::vector<std::string> numbered_columns(const std::string& prefix, int max) {
    std::vector<std::string> columns;
    for (int j = 0; j <= max; ++j) columns.push_back(prefix + std::to_string(j));
    return columns;
}

std::string markdown_line(const std::vector<std::string>& cells) {
    std::string line = "|";
    for (const auto& cell : cells) line += " " + cell + " |";
    return line + "\n";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) line += ",";
        line += cells[i];
    }
    return line + "\n";
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "markdown") return Format::markdown;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw DomainError("unknown format '" + std::string(name) +
                      "' (expected markdown, csv or json)");
}

std::string render(const IndexedTable& table, Format format) {
    std::vector<std::string> header{table.index_name};
    header.insert(header.end(), table.columns.begin(), table.columns.end());

    switch (format) {
        case Format::markdown: {
            std::string out = markdown_line(header);
            out += markdown_line(std::vector<std::string>(header.size(), "---"));
            for (const auto& [index, values] : table.rows) {
                std::vector<std::string> cells{std::to_string(index)};
                cells.insert(cells.end(), values.begin(), values.end());
                out += markdown_line(cells);
            }
            return out;
        }
        case Format::csv: {
            std::string out = csv_line(header);
            for (const auto& [index, values] : table.rows) {
                std::vector<std::string> cells{std::to_string(index)};
                cells.insert(cells.end(), values.begin(), values.end());
                out += csv_line(cells);
            }
            return out;
        }
        case Format::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& [index, values] : table.rows) {
                rows.push_back({{table.index_name, index}, {"values", values}});
            }
            nlohmann::json doc{{"kind", table.kind},
                               {"index", table.index_name},
                               {"columns", table.columns},
                               {"rows", rows}};
            return doc.dump(2) + "\n";
        }
    }
    throw DomainError("unknown format");
}

IndexedTable to_indexed(const DecompositionTable& table) {
    IndexedTable out{"coefficients", "k", numbered_columns("Y_", table.max_power), {}};
    for (const auto& row : table.rows) {
        out.rows.emplace_back(row.power, decimal(row.values));
    }
    return out;
}

IndexedTable to_indexed(const EulerTable& table) {
    IndexedTable out{"euler", "k", numbered_columns("j=", table.max_index()), {}};
    for (int k = 0; k <= table.max_index(); ++k) {
        out.rows.emplace_back(k, decimal(table.row(k)));
    }
    return out;
}

IndexedTable to_indexed(const HigherDerangementTable& table) {
    IndexedTable out{"higher", "n", numbered_columns("k=", table.max_index()), {}};
    for (int n = 0; n <= table.max_index(); ++n) {
        out.rows.emplace_back(n, decimal(table.row(n)));
    }
    return out;
}

IndexedTable derangement_indexed(std::span<const ExactInteger> values) {
    IndexedTable out{"derangement", "k", {"d_k"}, {}};
    for (std::size_t k = 0; k < values.size(); ++k) {
        out.rows.emplace_back(static_cast<int>(k),
                              std::vector<std::string>{to_string(values[k])});
    }
    return out;
}

IndexedTable to_indexed(const PowerSeries& series) {
    IndexedTable out{"series", "m", {"coefficient"}, {}};
    for (std::size_t m = 0; m < series.coefficients.size(); ++m) {
        out.rows.emplace_back(static_cast<int>(m),
                              std::vector<std::string>{to_string(series.coefficients[m])});
    }
    return out;
}

std::string render_table(const DecompositionTable& table, Format format) {
    return render(to_indexed(table), format);
}

std::string render_row(const CoefficientRow& row, Format format) {
    const auto values = decimal(row.values);
    switch (format) {
        case Format::markdown:
            return markdown_line(numbered_columns("Y_", row.power)) +
                   markdown_line(std::vector<std::string>(values.size(), "---")) +
                   markdown_line(values);
        case Format::csv:
            return csv_line(values);
        case Format::json: {
            nlohmann::json doc{{"kind", "coefficient_row"},
                               {"k", row.power},
                               {"values", values}};
            return doc.dump(2) + "\n";
        }
    }
    throw DomainError("unknown format");
}

}  // namespace adjpow
