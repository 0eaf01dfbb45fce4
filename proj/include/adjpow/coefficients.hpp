#pragma once

#include "adjpow/exact.hpp"

#include <vector>

namespace adjpow {

// The decomposition X_k = sum_j c_j^k Y_j of the k-th tensor power of the
// adjoint representation of A_n, valid for 2k <= n+1.
struct CoefficientRow {
    int power = 0;
    std::vector<ExactInteger> values;  // c_0^k .. c_k^k

    friend bool operator==(const CoefficientRow&, const CoefficientRow&) = default;
};

struct DecompositionTable {
    int max_power = 0;
    std::vector<CoefficientRow> rows;  // k = 1 .. max_power, ascending

    friend bool operator==(const DecompositionTable&,
                           const DecompositionTable&) = default;
};

// c_j^k = C(k,j) d_k^j.
ExactInteger coefficient_main(int k, int j);

// c_p^k = C(k,p) (1/p!) sum_l C(p,l) d_{k-l}, counting the ways to contract
// k-p upper with k-p lower indices.
ExactInteger coefficient_contraction(int k, int p);

// Rows 1..max_power built only from c_0^k = d_k and
// c_{j+1}^k = ((k-j) c_j^k + k c_j^{k-1}) / (j+1)^2.
DecompositionTable coefficient_rows_recurrence(int max_power);

// Row k via coefficient_main. k = 0 gives the single row [1].
CoefficientRow coefficient_row(int k);

// Rows 1..max_power via coefficient_main; empty when max_power is 0.
DecompositionTable decomposition_table(int max_power);

}  // namespace adjpow
