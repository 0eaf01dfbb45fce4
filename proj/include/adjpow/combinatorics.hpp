#pragma once

#include "adjpow/exact.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace adjpow {

ExactInteger factorial(int k);

// C(k, j); zero when j > k.
ExactInteger binomial(int k, int j);

// Euler's difference table e[k][j], 0 <= j <= k <= max_index. The diagonal is
// e[j][j] = j! and every other entry follows e[k][j] = e[k][j+1] - e[k-1][j],
// so the first column holds the derangement numbers.
class EulerTable {
public:
    explicit EulerTable(int max_index);

    int max_index() const { return max_index_; }
    const ExactInteger& at(int k, int j) const;
    std::span<const ExactInteger> row(int k) const;

private:
    int max_index_;
    std::vector<std::vector<ExactInteger>> rows_;
};

// Higher derangement numbers d[n][k] = e[n][k] / k!.
class HigherDerangementTable {
public:
    explicit HigherDerangementTable(const EulerTable& euler);

    int max_index() const { return static_cast<int>(rows_.size()) - 1; }
    const ExactInteger& at(int n, int k) const;
    std::span<const ExactInteger> row(int n) const;

private:
    std::vector<std::vector<ExactInteger>> rows_;
};

EulerTable euler_table(int max_index);
HigherDerangementTable higher_derangement_table(int max_index);

enum class DerangementMethod {
    adjacent,     // d_k = (k-1)(d_{k-1} + d_{k-2})
    alternating,  // d_k = k d_{k-1} + (-1)^k
    table,        // first column of the Euler table
};

enum class HigherDerangementMethod {
    table,        // e_n^k / k!
    recurrence,   // d_n^k = (d_n^{k-1} + d_{n-1}^{k-1}) / k
    closed_form,  // (1/k!) sum_j C(k,j) d_{n-j}
};

ExactInteger derangement(int k, DerangementMethod method);

// d_0 .. d_max_index by the given method.
std::vector<ExactInteger> derangement_sequence(int max_index,
                                               DerangementMethod method);

inline constexpr int kEnumerationOracleLimit = 10;

// Counts fixed-point-free permutations of {1..k} one by one. Throws
// CostLimitError for k > kEnumerationOracleLimit.
ExactInteger derangement_enumeration_oracle(int k);

ExactInteger higher_derangement(int n, int k, HigherDerangementMethod method);

// Truncated exponential generating series of e^{-x} / (1-x)^{k+1}; the
// coefficient of x^m equals d_{m+k}^k / m!.
struct PowerSeries {
    int k = 0;
    int order = 0;
    std::vector<ExactRational> coefficients;  // x^0 .. x^order
};

PowerSeries egf_coefficients(int k, int order);

DerangementMethod parse_derangement_method(std::string_view name);
HigherDerangementMethod parse_higher_derangement_method(std::string_view name);

}  // namespace adjpow
