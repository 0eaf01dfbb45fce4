#include "adjpow/coefficients.hpp"

#include "adjpow/combinatorics.hpp"

#include <string>

namespace adjpow {

namespace {

void require_index_pair(int k, int j) {
    if (k < 0 || j < 0 || j > k) {
        throw DomainError("coefficient index needs 0 <= j <= k, got k=" +
                          std::to_string(k) + ", j=" + std::to_string(j));
    }
}

}  // namespace

ExactInteger coefficient_main(int k, int j) {
    require_index_pair(k, j);
    return binomial(k, j) *
           higher_derangement(k, j, HigherDerangementMethod::table);
}

ExactInteger coefficient_contraction(int k, int p) {
    require_index_pair(k, p);
    const auto d = derangement_sequence(k, DerangementMethod::adjacent);
    ExactInteger sum = 0;
    for (int l = 0; l <= p; ++l) sum += binomial(p, l) * d[k - l];
    return binomial(k, p) *
           exact_divide(sum, factorial(p), "contraction count / p!");
}

DecompositionTable coefficient_rows_recurrence(int max_power) {
    if (max_power < 1) {
        throw DomainError("recurrence table needs max_power >= 1, got " +
                          std::to_string(max_power));
    }
    const auto d = derangement_sequence(max_power, DerangementMethod::alternating);
    DecompositionTable table{max_power, {}};
    table.rows.reserve(max_power);
    std::vector<ExactInteger> previous{1};  // row 0
    for (int k = 1; k <= max_power; ++k) {
        std::vector<ExactInteger> row(k + 1);
        row[0] = d[k];
        for (int j = 0; j < k; ++j) {
            row[j + 1] = exact_divide((k - j) * row[j] + k * previous[j],
                                      ExactInteger((j + 1) * (j + 1)),
                                      "coefficient recurrence");
        }
        table.rows.push_back(CoefficientRow{k, row});
        previous = std::move(row);
    }
    return table;
}

CoefficientRow coefficient_row(int k) {
    if (k < 0) {
        throw DomainError("power must be nonnegative, got " + std::to_string(k));
    }
    const auto derangements = higher_derangement_table(k);
    CoefficientRow row{k, {}};
    row.values.reserve(k + 1);
    for (int j = 0; j <= k; ++j) {
        row.values.push_back(binomial(k, j) * derangements.at(k, j));
    }
    return row;
}

DecompositionTable decomposition_table(int max_power) {
    if (max_power < 0) {
        throw DomainError("max_power must be nonnegative, got " +
                          std::to_string(max_power));
    }
    DecompositionTable table{max_power, {}};
    for (int k = 1; k <= max_power; ++k) table.rows.push_back(coefficient_row(k));
    return table;
}

}  // namespace adjpow
