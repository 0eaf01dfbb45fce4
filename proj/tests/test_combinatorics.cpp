#include "adjpow/combinatorics.hpp"

#include "golden.hpp"

#include <doctest.h>

using namespace adjpow;

namespace {

// Pascal's triangle by repeated addition only.
ExactInteger pascal(int k, int j) {
    std::vector<ExactInteger> row{1};
    for (int r = 1; r <= k; ++r) {
        std::vector<ExactInteger> next(r + 1, 1);
        for (int i = 1; i < r; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    return j <= k ? row[j] : ExactInteger(0);
}

}  // namespace

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(9) == 362880);
    for (int k = 1; k <= 40; ++k) CHECK(factorial(k) == k * factorial(k - 1));
    CHECK(factorial(30) == ExactInteger("265252859812191058636308480000000"));
    CHECK_THROWS_AS(factorial(-1), DomainError);
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 5) == 0);
    for (int k = 0; k <= 40; ++k) {
        CHECK(binomial(k, 0) == 1);
        for (int j = 0; j <= k + 1; ++j) CHECK(binomial(k, j) == pascal(k, j));
    }
    CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("Euler table matches the published table and its defining rules") {
    const auto e = euler_table(9);
    for (int k = 0; k <= 9; ++k) {
        for (int j = 0; j <= k; ++j) CHECK(e.at(k, j) == golden::kEuler[k][j]);
    }
    CHECK(euler_table(3).at(3, 2) == 4);
    CHECK(euler_table(4).at(4, 0) == 9);

    const auto big = euler_table(30);
    for (int k = 0; k <= 30; ++k) {
        CHECK(big.at(k, k) == factorial(k));
        for (int j = 0; j <= k; ++j) {
            CHECK(big.at(k, j) % factorial(j) == 0);
            if (j < k) CHECK(big.at(k, j) == big.at(k, j + 1) - big.at(k - 1, j));
        }
    }
    CHECK_THROWS_AS(e.at(3, 4), DomainError);
    CHECK_THROWS_AS(e.at(10, 0), DomainError);
    CHECK_THROWS_AS(euler_table(-1), DomainError);
}

TEST_CASE("derangement methods agree") {
    for (auto method : {DerangementMethod::adjacent, DerangementMethod::alternating,
                        DerangementMethod::table}) {
        CHECK(derangement(0, method) == 1);
        CHECK(derangement(1, method) == 0);
        CHECK(derangement(6, method) == 265);
        CHECK(derangement(10, method) == 1334961);
        for (int k = 0; k <= 10; ++k) CHECK(derangement(k, method) == golden::kDerangements[k]);
    }
    const auto adjacent = derangement_sequence(30, DerangementMethod::adjacent);
    const auto alternating = derangement_sequence(30, DerangementMethod::alternating);
    const auto table = derangement_sequence(30, DerangementMethod::table);
    CHECK(adjacent == alternating);
    CHECK(adjacent == table);
    CHECK(parse_derangement_method("alternating") == DerangementMethod::alternating);
    CHECK_THROWS_AS(parse_derangement_method("bogus"), DomainError);
}

TEST_CASE("enumeration oracle") {
    CHECK(derangement_enumeration_oracle(0) == 1);
    CHECK(derangement_enumeration_oracle(3) == 2);
    CHECK(derangement_enumeration_oracle(4) == 9);
    for (int k = 0; k <= 8; ++k) {
        CHECK(derangement_enumeration_oracle(k) == derangement(k, DerangementMethod::adjacent));
    }
    CHECK_THROWS_AS(derangement_enumeration_oracle(11), CostLimitError);
    CHECK_THROWS_AS(derangement_enumeration_oracle(-1), DomainError);
}

TEST_CASE("higher derangements") {
    const std::vector methods{HigherDerangementMethod::table, HigherDerangementMethod::recurrence,
                              HigherDerangementMethod::closed_form};
    for (auto method : methods) {
        CHECK(higher_derangement(4, 2, method) == 7);
        CHECK(higher_derangement(9, 3, method) == 30637);
        CHECK(higher_derangement(10, 5, method) == 18089);
        CHECK_THROWS_AS(higher_derangement(2, 3, method), DomainError);
        CHECK_THROWS_AS(higher_derangement(-1, 0, method), DomainError);
    }

    // (d_10 + 5 d_9 + 10 d_8 + 10 d_7 + 5 d_6 + d_5) / 120 from the derangement row.
    const auto& d = golden::kDerangements;
    const std::int64_t sum = d[10] + 5 * d[9] + 10 * d[8] + 10 * d[7] + 5 * d[6] + d[5];
    CHECK(sum % 120 == 0);
    CHECK(sum / 120 == 18089);

    const auto table = higher_derangement_table(9);
    for (int n = 0; n <= 9; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(table.at(n, k) == golden::kHigherDerangements[n][k]);
    }

    const auto big = higher_derangement_table(30);
    const auto euler = euler_table(30);
    for (int n = 0; n <= 30; ++n) {
        CHECK(big.at(n, n) == 1);
        if (n >= 1) CHECK(big.at(n, n - 1) == n - 1);
        for (int k = 0; k <= n; ++k) {
            CHECK(big.at(n, k) * factorial(k) == euler.at(n, k));
            if (k >= 1) CHECK(k * big.at(n, k) == big.at(n, k - 1) + big.at(n - 1, k - 1));
            for (auto method : methods) CHECK(higher_derangement(n, k, method) == big.at(n, k));
        }
    }
}

TEST_CASE("exact division refuses to round") {
    CHECK(exact_divide(ExactInteger(120), ExactInteger(24), "t") == 5);
    CHECK_THROWS_AS(exact_divide(ExactInteger(7), ExactInteger(2), "t"), ExactDivisionError);
    CHECK_THROWS_AS(exact_divide(ExactInteger(7), ExactInteger(0), "t"), ExactDivisionError);
}

TEST_CASE("generating series") {
    CHECK(egf_coefficients(0, 4).coefficients[4] == ExactRational(3, 8));
    CHECK(egf_coefficients(2, 2).coefficients[2] == ExactRational(7, 2));
    CHECK(to_string(egf_coefficients(0, 4).coefficients[4]) == "3/8");
    for (int k = 0; k <= 8; ++k) {
        const auto series = egf_coefficients(k, 20);
        REQUIRE(series.coefficients.size() == 21);
        CHECK(series.coefficients[0] == 1);
        for (int m = 0; m <= 20; ++m) {
            CHECK(series.coefficients[m] * ExactRational(factorial(m)) ==
                  ExactRational(higher_derangement(m + k, k, HigherDerangementMethod::table)));
        }
    }
    CHECK(egf_coefficients(3, 0).coefficients.size() == 1);
    CHECK_THROWS_AS(egf_coefficients(0, -1), DomainError);
}
