// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All comparisons are exact; runtime limits are wall-clock seconds.

#include "adjpow/coefficients.hpp"
#include "adjpow/combinatorics.hpp"
#include "adjpow/lie_oracle.hpp"

#include "golden.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace adjpow;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && pass) {
            pass = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= limit_seconds) {
        outcome.expect(false, "runtime " + std::to_string(seconds) + " s over limit");
    }
    std::printf("[%s] %s %s (%.3f s, limit %.0f s)%s%s\n", outcome.pass ? "PASS" : "FAIL", id,
                title, seconds, limit_seconds, outcome.pass ? "" : ": ", outcome.detail.c_str());
    if (!outcome.pass) ++failures;
}

std::string at(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

int main() {
    bool coefficient_routes_ok = false;
    bool sweep_ok = false;
    bool stability_ok = false;

    criterion("AC1", "golden derangement, Euler and higher-derangement tables", 1.0, [](Outcome& o) {
        const auto d = derangement_sequence(10, DerangementMethod::table);
        for (int k = 0; k <= 10; ++k) o.expect(d[k] == golden::kDerangements[k], "d_" + std::to_string(k));
        const auto e = euler_table(9);
        const auto h = higher_derangement_table(9);
        int entries = 0;
        for (int k = 0; k <= 9; ++k) {
            for (int j = 0; j <= k; ++j, ++entries) {
                o.expect(e.at(k, j) == golden::kEuler[k][j], "e" + at(k, j));
                o.expect(h.at(k, j) == golden::kHigherDerangements[k][j], "d" + at(k, j));
            }
        }
        o.expect(entries == 55, "expected 55 entries per table");
    });

    criterion("AC2", "X_1..X_10 coefficients by main formula, contraction count and recurrence", 1.0,
              [&](Outcome& o) {
        const auto recurrence = coefficient_rows_recurrence(10);
        int count = 0;
        for (int k = 1; k <= 10; ++k) {
            for (int j = 0; j <= k; ++j, ++count) {
                const auto& expected = golden::kDecompositions[k - 1][j];
                o.expect(coefficient_main(k, j) == expected, "main" + at(k, j));
                o.expect(coefficient_contraction(k, j) == expected, "contraction" + at(k, j));
                o.expect(recurrence.rows[k - 1].values[j] == expected, "recurrence" + at(k, j));
            }
        }
        o.expect(count == 65, "expected 65 coefficients");
        coefficient_routes_ok = o.pass;
    });

    criterion("AC3", "cross-formula sweep to index 30 with exact divisions", 5.0, [&](Outcome& o) {
        const auto recurrence = coefficient_rows_recurrence(30);
        for (int k = 0; k <= 30; ++k) {
            for (int j = 0; j <= k; ++j) {
                const auto main = coefficient_main(k, j);
                o.expect(main == coefficient_contraction(k, j), "contraction" + at(k, j));
                if (k >= 1) o.expect(main == recurrence.rows[k - 1].values[j], "recurrence" + at(k, j));
            }
        }
        for (int n = 0; n <= 30; ++n) {
            for (int k = 0; k <= n; ++k) {
                const auto a = higher_derangement(n, k, HigherDerangementMethod::table);
                o.expect(a == higher_derangement(n, k, HigherDerangementMethod::recurrence),
                         "recurrence d" + at(n, k));
                o.expect(a == higher_derangement(n, k, HigherDerangementMethod::closed_form),
                         "closed form d" + at(n, k));
            }
        }
        sweep_ok = o.pass;
    });

    criterion("AC4", "derangements equal fixed-point-free permutation counts for k <= 9", 10.0,
              [](Outcome& o) {
        for (int k = 0; k <= 9; ++k) {
            const auto brute = derangement_enumeration_oracle(k);
            for (auto method : {DerangementMethod::adjacent, DerangementMethod::alternating,
                                DerangementMethod::table}) {
                o.expect(derangement(k, method) == brute, "k=" + std::to_string(k));
            }
        }
    });

    criterion("AC5", "m! [x^m] e^{-x}/(1-x)^{k+1} = d_{m+k}^k for k <= 8, m <= 20", 1.0, [](Outcome& o) {
        for (int k = 0; k <= 8; ++k) {
            const auto series = egf_coefficients(k, 20);
            for (int m = 0; m <= 20; ++m) {
                o.expect(series.coefficients[m] * ExactRational(factorial(m)) ==
                             ExactRational(higher_derangement(m + k, k, HigherDerangementMethod::table)),
                         "(k,m)=" + at(k, m));
            }
        }
    });

    criterion("AC6", "Lie-theoretic certification and rank stability", 120.0, [&](Outcome& o) {
        const std::vector<std::pair<int, int>> runs{{2, 3}, {3, 5}, {3, 6}, {4, 7}};
        for (const auto& [k_max, n] : runs) {
            const auto report = verify_stable_decomposition(k_max, Rank(n));
            const std::string where = "(k_max,n)=" + at(k_max, n);
            o.expect(report.pass, where + " failed");
            for (const auto& c : report.powers) {
                const auto tag = where + " k=" + std::to_string(c.k);
                o.expect(c.multiset_equal, tag + " multiset equality");
                o.expect(c.dimension_balanced, tag + " dimension balance");
                o.expect(c.y_nonnegative, tag + " Y nonnegativity");
                o.expect(c.leading_term, tag + " leading term");
                o.expect(c.trivial_matches, tag + " trivial multiplicity");
                o.expect(c.dimension_expected ==
                             boost::multiprecision::pow(ExactInteger((n + 1) * (n + 1) - 1), c.k),
                         tag + " expected dimension");
            }
        }
        const auto at5 = extract_y_contents(3, Rank(5));
        const auto at7 = extract_y_contents(3, Rank(7));
        o.expect(at5.contents[2] == at7.contents[2], "Y_2 differs between n=5 and n=7");
        o.expect(at5.contents[3] == at7.contents[3], "Y_3 differs between n=5 and n=7");
        stability_ok = o.pass;
    });

    criterion("AC7", "k >= 5 covered by AC2, AC3 and AC6 stability (oracle needs n >= 2k-1)", 1.0,
              [&](Outcome& o) {
        o.expect(coefficient_routes_ok, "AC2 did not pass");
        o.expect(sweep_ok, "AC3 did not pass");
        o.expect(stability_ok, "AC6 did not pass");
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
