#include "adjpow/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace adjpow {

namespace {

void require_nonnegative(int value, const char* what) {
    if (value < 0) {
        throw DomainError(std::string(what) + " must be nonnegative, got " +
                          std::to_string(value));
    }
}

}  // namespace

ExactInteger factorial(int k) {
    require_nonnegative(k, "factorial argument");
    ExactInteger result = 1;
    for (int i = 2; i <= k; ++i) result *= i;
    return result;
}

ExactInteger binomial(int k, int j) {
    require_nonnegative(k, "binomial k");
    require_nonnegative(j, "binomial j");
    if (j > k) return 0;
    j = std::min(j, k - j);
    // Running product stays integral: after step i it equals C(k-j+i, i).
    ExactInteger result = 1;
    for (int i = 1; i <= j; ++i) {
        result *= k - j + i;
        result = exact_divide(result, i, "binomial");
    }
    return result;
}

EulerTable::EulerTable(int max_index) : max_index_(max_index) {
    require_nonnegative(max_index, "Euler table size");
    rows_.resize(max_index + 1);
    ExactInteger diagonal = 1;
    for (int k = 0; k <= max_index; ++k) {
        if (k > 0) diagonal *= k;
        auto& row = rows_[k];
        row.resize(k + 1);
        row[k] = diagonal;
        for (int j = k - 1; j >= 0; --j) {
            row[j] = row[j + 1] - rows_[k - 1][j];
        }
    }
}

const ExactInteger& EulerTable::at(int k, int j) const {
    if (k < 0 || k > max_index_ || j < 0 || j > k) {
        throw DomainError("Euler table index (" + std::to_string(k) + ", " +
                          std::to_string(j) + ") outside 0 <= j <= k <= " +
                          std::to_string(max_index_));
    }
    return rows_[k][j];
}

std::span<const ExactInteger> EulerTable::row(int k) const {
    if (k < 0 || k > max_index_) {
        throw DomainError("Euler table row " + std::to_string(k) +
                          " out of range");
    }
    return rows_[k];
}

HigherDerangementTable::HigherDerangementTable(const EulerTable& euler) {
    const int size = euler.max_index() + 1;
    rows_.resize(size);
    for (int n = 0; n < size; ++n) {
        auto source = euler.row(n);
        auto& row = rows_[n];
        row.reserve(source.size());
        ExactInteger k_factorial = 1;
        for (int k = 0; k <= n; ++k) {
            if (k > 0) k_factorial *= k;
            row.push_back(exact_divide(source[k], k_factorial,
                                       "higher derangement e_n^k / k!"));
        }
    }
}

const ExactInteger& HigherDerangementTable::at(int n, int k) const {
    if (n < 0 || n > max_index() || k < 0 || k > n) {
        throw DomainError("higher derangement index (" + std::to_string(n) +
                          ", " + std::to_string(k) + ") out of range");
    }
    return rows_[n][k];
}

std::span<const ExactInteger> HigherDerangementTable::row(int n) const {
    if (n < 0 || n > max_index()) {
        throw DomainError("higher derangement row " + std::to_string(n) +
                          " out of range");
    }
    return rows_[n];
}

EulerTable euler_table(int max_index) { return EulerTable(max_index); }

HigherDerangementTable higher_derangement_table(int max_index) {
    return HigherDerangementTable(EulerTable(max_index));
}

std::vector<ExactInteger> derangement_sequence(int max_index,
                                               DerangementMethod method) {
    require_nonnegative(max_index, "derangement index");
    std::vector<ExactInteger> d(max_index + 1);
    switch (method) {
        case DerangementMethod::adjacent:
            d[0] = 1;
            if (max_index >= 1) d[1] = 0;
            for (int k = 2; k <= max_index; ++k) {
                d[k] = (k - 1) * (d[k - 1] + d[k - 2]);
            }
            break;
        case DerangementMethod::alternating:
            d[0] = 1;
            for (int k = 1; k <= max_index; ++k) {
                d[k] = k * d[k - 1] + (k % 2 == 0 ? 1 : -1);
            }
            break;
        case DerangementMethod::table: {
            const EulerTable table(max_index);
            for (int k = 0; k <= max_index; ++k) d[k] = table.at(k, 0);
            break;
        }
    }
    return d;
}

ExactInteger derangement(int k, DerangementMethod method) {
    return derangement_sequence(k, method).back();
}

ExactInteger derangement_enumeration_oracle(int k) {
    require_nonnegative(k, "derangement index");
    if (k > kEnumerationOracleLimit) {
        throw CostLimitError("enumeration oracle is limited to k <= " +
                             std::to_string(kEnumerationOracleLimit) +
                             ", got " + std::to_string(k));
    }
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool fixed_point = false;
        for (int i = 0; i < k; ++i) {
            if (perm[i] == i) {
                fixed_point = true;
                break;
            }
        }
        if (!fixed_point) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

ExactInteger higher_derangement(int n, int k, HigherDerangementMethod method) {
    require_nonnegative(n, "n");
    require_nonnegative(k, "k");
    if (k > n) {
        throw DomainError("higher derangement d_n^k needs k <= n, got n=" +
                          std::to_string(n) + ", k=" + std::to_string(k));
    }
    switch (method) {
        case HigherDerangementMethod::table:
            return exact_divide(EulerTable(n).at(n, k), factorial(k),
                                "higher derangement e_n^k / k!");
        case HigherDerangementMethod::recurrence: {
            // level[m - (n-k)] holds d_m^j for the current j.
            const auto d = derangement_sequence(n, DerangementMethod::alternating);
            std::vector<ExactInteger> level(d.begin() + (n - k), d.end());
            for (int j = 1; j <= k; ++j) {
                for (std::size_t i = level.size() - 1; i >= 1; --i) {
                    level[i] = exact_divide(level[i] + level[i - 1], j,
                                            "higher derangement recurrence");
                }
                level.erase(level.begin());
            }
            return level.back();
        }
        case HigherDerangementMethod::closed_form: {
            const auto d = derangement_sequence(n, DerangementMethod::alternating);
            ExactInteger sum = 0;
            for (int j = 0; j <= k; ++j) sum += binomial(k, j) * d[n - j];
            return exact_divide(sum, factorial(k),
                                "higher derangement closed form");
        }
    }
    throw DomainError("unknown higher derangement method");
}

PowerSeries egf_coefficients(int k, int order) {
    require_nonnegative(k, "series parameter k");
    require_nonnegative(order, "series order");
    std::vector<ExactRational> exp_neg(order + 1);
    ExactInteger i_factorial = 1;
    for (int i = 0; i <= order; ++i) {
        if (i > 0) i_factorial *= i;
        exp_neg[i] = ExactRational(i % 2 == 0 ? 1 : -1, i_factorial);
    }
    PowerSeries series{k, order, std::vector<ExactRational>(order + 1)};
    for (int m = 0; m <= order; ++m) {
        ExactRational sum = 0;
        for (int i = 0; i <= m; ++i) {
            sum += exp_neg[i] * ExactRational(binomial(m - i + k, k));
        }
        series.coefficients[m] = sum;
    }
    return series;
}

DerangementMethod parse_derangement_method(std::string_view name) {
    if (name == "adjacent") return DerangementMethod::adjacent;
    if (name == "alternating") return DerangementMethod::alternating;
    if (name == "table") return DerangementMethod::table;
    throw DomainError("unknown derangement method '" + std::string(name) + "'");
}

HigherDerangementMethod parse_higher_derangement_method(std::string_view name) {
    if (name == "table") return HigherDerangementMethod::table;
    if (name == "recurrence") return HigherDerangementMethod::recurrence;
    if (name == "closed_form") return HigherDerangementMethod::closed_form;
    throw DomainError("unknown higher derangement method '" +
                      std::string(name) + "'");
}

}  // namespace adjpow
