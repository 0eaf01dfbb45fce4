#pragma once

#include "adjpow/coefficients.hpp"
#include "adjpow/weights.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace adjpow {

// A Klimyk accumulation finished with a negative multiplicity, or an
// extracted block broke its invariants. Either one falsifies a computation
// rather than an input.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Weyl dimension formula: prod_{i<j} (l_i - l_j + j - i) / (j - i) over the
// epsilon coordinates of the highest weight.
ExactInteger weyl_dimension(const DynkinLabels& labels, const Rank& rank);

// Full weight system by Freudenthal's recursion, level by level below the
// highest weight.
WeightSystem freudenthal_weights(const DynkinLabels& labels, const Rank& rank);

// Closed form: eps_i - eps_j (i != j) once each, zero weight n times.
WeightSystem adjoint_weight_system(const Rank& rank);

// Klimyk's rule for state (x) V where V has the given weight system.
IrrepMultiset tensor_with_weights(const IrrepMultiset& state,
                                  const WeightSystem& weights, const Rank& rank);

IrrepMultiset tensor_with_adjoint(const IrrepMultiset& state, const Rank& rank);

// ad^{(x)k}, starting from the trivial representation.
IrrepMultiset adjoint_power(int k, const Rank& rank);

// X_0 .. X_k in one pass.
std::vector<IrrepMultiset> adjoint_powers(int k, const Rank& rank);

ExactInteger total_dimension(const IrrepMultiset& multiset, const Rank& rank);

// Y_p blocks over Dynkin labels at a fixed rank, extracted triangularly:
// Y_k = X_k - sum_{p<k} c_p^k Y_p. No invariants are checked here.
std::vector<IrrepMultiset> extract_y_blocks(const std::vector<IrrepMultiset>& powers);

struct YLibrary {
    Rank rank;
    std::vector<StableMultiset> contents;  // indexed by p

    friend bool operator==(const YLibrary&, const YLibrary&) = default;
};

// Requires 2 k_max <= n + 1. Throws OracleError when some Y_p has a negative
// multiplicity, lacks ((p),(p)) with multiplicity 1, or holds an irreducible
// with no stable name of at most p boxes per side.
YLibrary extract_y_contents(int k_max, const Rank& rank);

// True when the two libraries agree as stable-label multisets for p <= up_to.
bool same_stable_contents(const YLibrary& a, const YLibrary& b, int up_to);

struct ResidualEntry {
    DynkinLabels labels;
    ExactInteger expected;  // sum_p c_p^k Y_p
    ExactInteger observed;  // X_k
};

struct PowerCheck {
    int k = 0;
    std::vector<ExactInteger> coefficients;
    std::vector<ResidualEntry> residual;
    ExactInteger dimension_expected;   // ((n+1)^2 - 1)^k
    ExactInteger dimension_observed;   // sum over X_k
    ExactInteger dimension_from_y;     // sum_p c_p^k dim Y_p
    ExactInteger trivial_expected;     // d_k
    ExactInteger trivial_observed;
    bool multiset_equal = false;
    bool dimension_balanced = false;
    bool y_nonnegative = false;
    bool leading_term = false;
    bool stable_labels = false;
    bool trivial_matches = false;
    std::vector<std::string> violations;
    double elapsed_ms = 0.0;

    bool pass() const {
        return multiset_equal && dimension_balanced && y_nonnegative &&
               leading_term && stable_labels && trivial_matches;
    }
};

struct VerificationReport {
    int k_max = 0;
    Rank rank{1};
    bool pass = false;
    std::vector<PowerCheck> powers;         // k = 0 .. k_max
    std::vector<StableMultiset> y_library;  // only blocks that converted
    double elapsed_ms = 0.0;
};

// Requires 2 k_max <= n + 1 (DomainError otherwise). Failures are recorded in
// the report, never thrown.
VerificationReport verify_stable_decomposition(int k_max, const Rank& rank);

// Deterministic JSON (no timings); big integers as decimal strings and
// stable labels as {"left": [...], "right": [...]}.
std::string report_to_json(const VerificationReport& report);

// Human-readable summary with residual diffs for failing powers.
std::string report_to_text(const VerificationReport& report);

void require_stable_range(int k_max, const Rank& rank);

}  // namespace adjpow
