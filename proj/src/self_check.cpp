#include "adjpow/self_check.hpp"

#include "adjpow/coefficients.hpp"
#include "adjpow/combinatorics.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>

namespace adjpow {

namespace {

// A check body returns the first discrepancy it finds, or nullopt.
using CheckBody = std::function<std::optional<std::string>()>;

CheckResult run_check(std::string name, const CheckBody& body) {
    CheckResult result{std::move(name), false, {}};
    try {
        if (auto problem = body()) {
            result.detail = *problem;
        } else {
            result.pass = true;
        }
    } catch (const std::exception& e) {
        result.detail = e.what();
    }
    return result;
}

std::string at(int k, int j) {
    return "(" + std::to_string(k) + ", " + std::to_string(j) + ")";
}

}  // namespace

CombinatoricsReport verify_combinatorics(int max_index) {
    if (max_index < 0) {
        throw DomainError("max index must be nonnegative, got " +
                          std::to_string(max_index));
    }
    const int K = max_index;
    CombinatoricsReport report;
    report.max_index = K;
    auto& checks = report.checks;

    checks.push_back(run_check("derangement recurrences agree with Euler table column", [&]()
                                   -> std::optional<std::string> {
        const auto adjacent = derangement_sequence(K, DerangementMethod::adjacent);
        const auto alternating = derangement_sequence(K, DerangementMethod::alternating);
        const auto table = derangement_sequence(K, DerangementMethod::table);
        for (int k = 0; k <= K; ++k) {
            if (adjacent[k] != alternating[k] || adjacent[k] != table[k]) {
                return "d_" + std::to_string(k) + " differs between methods";
            }
        }
        return std::nullopt;
    }));

    checks.push_back(run_check("derangements match permutation enumeration", [&]()
                                   -> std::optional<std::string> {
        const int limit = std::min(K, 9);
        const auto d = derangement_sequence(limit, DerangementMethod::adjacent);
        for (int k = 0; k <= limit; ++k) {
            if (derangement_enumeration_oracle(k) != d[k]) {
                return "enumeration disagrees at k=" + std::to_string(k);
            }
        }
        return std::nullopt;
    }));

    checks.push_back(run_check("Euler table diagonal, differences and divisibility", [&]()
                                   -> std::optional<std::string> {
        const EulerTable e(K);
        for (int k = 0; k <= K; ++k) {
            if (e.at(k, k) != factorial(k)) return "diagonal at k=" + std::to_string(k);
            for (int j = 0; j <= k; ++j) {
                if (j < k && e.at(k, j) != e.at(k, j + 1) - e.at(k - 1, j)) {
                    return "difference rule fails at " + at(k, j);
                }
                if (e.at(k, j) % factorial(j) != 0) {
                    return "e" + at(k, j) + " not divisible by j!";
                }
            }
        }
        return std::nullopt;
    }));

    checks.push_back(run_check("higher derangement routes agree", [&]()
                                   -> std::optional<std::string> {
        const auto table = higher_derangement_table(K);
        for (int n = 0; n <= K; ++n) {
            for (int k = 0; k <= n; ++k) {
                const auto a = higher_derangement(n, k, HigherDerangementMethod::table);
                const auto b = higher_derangement(n, k, HigherDerangementMethod::recurrence);
                const auto c = higher_derangement(n, k, HigherDerangementMethod::closed_form);
                if (a != b || a != c || a != table.at(n, k)) {
                    return "d_n^k differs at " + at(n, k);
                }
            }
        }
        return std::nullopt;
    }));

    checks.push_back(run_check("higher derangement recurrence and edges", [&]()
                                   -> std::optional<std::string> {
        const auto d = higher_derangement_table(K);
        for (int n = 0; n <= K; ++n) {
            if (d.at(n, n) != 1) return "d_n^n != 1 at n=" + std::to_string(n);
            if (n >= 1 && d.at(n, n - 1) != n - 1) {
                return "d_n^{n-1} != n-1 at n=" + std::to_string(n);
            }
            for (int k = 1; k <= n; ++k) {
                if (k * d.at(n, k) != d.at(n, k - 1) + d.at(n - 1, k - 1)) {
                    return "recurrence fails at " + at(n, k);
                }
            }
        }
        return std::nullopt;
    }));

    checks.push_back(run_check("generating series coefficients", [&]()
                                   -> std::optional<std::string> {
        constexpr int order = 20;
        for (int k = 0; k <= std::min(K, 8); ++k) {
            const auto series = egf_coefficients(k, order);
            for (int m = 0; m <= order; ++m) {
                const ExactRational scaled = series.coefficients[m] * ExactRational(factorial(m));
                const ExactRational expected(
                    higher_derangement(m + k, k, HigherDerangementMethod::closed_form));
                if (scaled != expected) return "m! [x^m] differs at " + at(k, m);
            }
        }
        return std::nullopt;
    }));

    checks.push_back(run_check("coefficient routes agree", [&]()
                                   -> std::optional<std::string> {
        const auto recurrence = K >= 1 ? coefficient_rows_recurrence(K)
                                       : DecompositionTable{0, {}};
        for (int k = 0; k <= K; ++k) {
            for (int j = 0; j <= k; ++j) {
                const auto main = coefficient_main(k, j);
                if (main != coefficient_contraction(k, j)) {
                    return "main and contraction formulas differ at " + at(k, j);
                }
                const ExactInteger from_recurrence =
                    k == 0 ? ExactInteger(1) : recurrence.rows[k - 1].values[j];
                if (main != from_recurrence) {
                    return "main formula and recurrence differ at " + at(k, j);
                }
            }
        }
        return std::nullopt;
    }));

    checks.push_back(run_check("coefficient row shape", [&]()
                                   -> std::optional<std::string> {
        for (int k = 0; k <= K; ++k) {
            const auto row = coefficient_row(k);
            if (row.values.front() != derangement(k, DerangementMethod::alternating)) {
                return "c_0^k != d_k at k=" + std::to_string(k);
            }
            if (row.values.back() != 1) return "c_k^k != 1 at k=" + std::to_string(k);
            if (k >= 2) {
                if (row.values[k - 1] != k * (k - 1)) {
                    return "c_{k-1}^k != k(k-1) at k=" + std::to_string(k);
                }
                for (const auto& v : row.values) {
                    if (v <= 0) return "nonpositive entry in row " + std::to_string(k);
                }
            }
        }
        return std::nullopt;
    }));

    report.pass = std::all_of(checks.begin(), checks.end(),
                              [](const CheckResult& c) { return c.pass; });
    return report;
}

std::string report_to_json(const CombinatoricsReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& check : report.checks) {
        checks.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    }
    nlohmann::json doc{{"kind", "combinatorics_verification"},
                       {"max", report.max_index},
                       {"pass", report.pass},
                       {"checks", checks}};
    return doc.dump(2) + "\n";
}

std::string report_to_text(const CombinatoricsReport& report) {
    std::string out;
    for (const auto& check : report.checks) {
        out += (check.pass ? "PASS  " : "FAIL  ") + check.name;
        if (!check.pass) out += ": " + check.detail;
        out += "\n";
    }
    out += std::string(report.pass ? "PASS" : "FAIL") + "  all identities for indices <= " +
           std::to_string(report.max_index) + "\n";
    return out;
}

}  // namespace adjpow
