#include "adjpow/lie_oracle.hpp"

#include "adjpow/combinatorics.hpp"

#include <json.hpp>

#include <chrono>
#include <set>
#include <sstream>

namespace adjpow {

namespace {

using Clock = std::chrono::steady_clock;

double milliseconds_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<int> rho_coordinates(const Rank& rank) {
    std::vector<int> rho(rank.coordinate_count());
    for (int i = 0; i < rank.coordinate_count(); ++i) rho[i] = rank.n() - i;
    return rho;
}

void require_rank_match(const DynkinLabels& labels, const Rank& rank) {
    if (static_cast<int>(labels.a.size()) != rank.n()) {
        throw DomainError("label " + to_string(labels) +
                          " does not have length n=" + std::to_string(rank.n()));
    }
    for (int v : labels.a) {
        if (v < 0) throw DomainError("label " + to_string(labels) + " is negative");
    }
}

// Sorts into strictly decreasing order. Returns the sign of the sorting
// permutation, or 0 if two entries coincide (the vector lies on a wall).
int sort_to_chamber(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && v[j - 1] < v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] == v[i]) return 0;
    }
    return sign;
}

class DimensionCache {
public:
    explicit DimensionCache(const Rank& rank) : rank_(rank) {}

    const ExactInteger& operator()(const DynkinLabels& labels) {
        auto it = cache_.find(labels);
        if (it == cache_.end()) {
            it = cache_.emplace(labels, weyl_dimension(labels, rank_)).first;
        }
        return it->second;
    }

    ExactInteger total(const IrrepMultiset& multiset) {
        ExactInteger sum = 0;
        for (const auto& [labels, count] : multiset) sum += count * (*this)(labels);
        return sum;
    }

private:
    Rank rank_;
    std::map<DynkinLabels, ExactInteger> cache_;
};

DynkinLabels leading_labels(int p, const Rank& rank) {
    if (p == 0) return trivial_labels(rank);
    return stable_to_dynkin(StableLabel{{p}, {p}}, rank);
}

// Y-block invariants shared by verification and extraction. Appends a
// message for every broken invariant.
struct BlockChecks {
    bool nonnegative = true;
    bool leading = true;
    bool stable = true;
    StableMultiset stable_form;
};

BlockChecks check_block(int p, const IrrepMultiset& block, const Rank& rank,
                        std::vector<std::string>& violations) {
    BlockChecks checks;
    for (const auto& [labels, count] : block) {
        if (count < 0) {
            checks.nonnegative = false;
            violations.push_back("Y_" + std::to_string(p) + " has multiplicity " +
                                 to_string(count) + " on " + to_string(labels));
        }
        try {
            checks.stable_form.add(dynkin_to_stable(labels, rank, p), count);
        } catch (const DomainError& e) {
            checks.stable = false;
            violations.push_back("Y_" + std::to_string(p) + ": " + e.what());
        }
    }
    const auto leading = leading_labels(p, rank);
    if (block.count(leading) != 1) {
        checks.leading = false;
        violations.push_back("Y_" + std::to_string(p) + " holds " +
                             to_string(leading) + " with multiplicity " +
                             to_string(block.count(leading)) + ", expected 1");
    }
    if (p == 0 && !(block == IrrepMultiset{{trivial_labels(rank), 1}})) {
        checks.leading = false;
        violations.push_back("Y_0 is not the trivial representation");
    }
    if (p == 1 && !(block == IrrepMultiset{{adjoint_labels(rank), 1}})) {
        checks.leading = false;
        violations.push_back("Y_1 is not the adjoint representation");
    }
    return checks;
}

nlohmann::json stable_json(const StableMultiset& multiset) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [label, count] : multiset) {
        out.push_back({{"left", label.left},
                       {"right", label.right},
                       {"multiplicity", to_string(count)}});
    }
    return out;
}

std::vector<std::string> decimal(const std::vector<ExactInteger>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

std::string describe(const StableMultiset& multiset) {
    if (multiset.empty()) return "0";
    std::string out;
    for (const auto& [label, count] : multiset) {
        if (!out.empty()) out += " + ";
        if (count != 1) out += to_string(count) + "*";
        out += to_string(label);
    }
    return out;
}

}  // namespace

void require_stable_range(int k_max, const Rank& rank) {
    if (k_max < 0 || 2 * k_max > rank.n() + 1) {
        throw DomainError("k_max=" + std::to_string(k_max) +
                          " is outside the stable range 2k <= n+1 for n=" +
                          std::to_string(rank.n()));
    }
}

ExactInteger weyl_dimension(const DynkinLabels& labels, const Rank& rank) {
    require_rank_match(labels, rank);
    const auto l = epsilon_coordinates(labels);
    ExactInteger numerator = 1;
    ExactInteger denominator = 1;
    for (int i = 0; i < rank.coordinate_count(); ++i) {
        for (int j = i + 1; j < rank.coordinate_count(); ++j) {
            numerator *= l[i] - l[j] + j - i;
            denominator *= j - i;
        }
    }
    return exact_divide(numerator, denominator, "Weyl dimension formula");
}

WeightSystem freudenthal_weights(const DynkinLabels& labels, const Rank& rank) {
    require_rank_match(labels, rank);
    const int size = rank.coordinate_count();
    const auto rho = rho_coordinates(rank);
    const auto shifted_norm = [&](const std::vector<int>& w) {
        long long sum = 0;
        for (int i = 0; i < size; ++i) {
            const long long c = w[i] + rho[i];
            sum += c * c;
        }
        return sum;
    };

    const auto top = epsilon_coordinates(labels);
    const long long top_norm = shifted_norm(top);
    std::map<std::vector<int>, ExactInteger> multiplicity{{top, 1}};
    std::vector<std::vector<int>> current{top};

    for (int level = 1; !current.empty(); ++level) {
        std::set<std::vector<int>> candidates;
        for (const auto& mu : current) {
            for (int i = 0; i + 1 < size; ++i) {
                auto nu = mu;
                --nu[i];
                ++nu[i + 1];
                candidates.insert(std::move(nu));
            }
        }
        std::vector<std::vector<int>> next;
        for (const auto& nu : candidates) {
            ExactInteger sum = 0;
            for (int a = 0; a < size; ++a) {
                for (int b = a + 1; b < size; ++b) {
                    // eps_a - eps_b has height b - a; stop above the top weight.
                    for (int j = 1; level - j * (b - a) >= 0; ++j) {
                        auto w = nu;
                        w[a] += j;
                        w[b] -= j;
                        auto it = multiplicity.find(w);
                        if (it != multiplicity.end()) sum += it->second * (w[a] - w[b]);
                    }
                }
            }
            if (sum == 0) continue;
            const long long gap = top_norm - shifted_norm(nu);
            if (gap <= 0) {
                throw OracleError("Freudenthal recursion reached a weight with "
                                  "nonpositive norm gap below " + to_string(labels));
            }
            auto m = exact_divide(2 * sum, ExactInteger(gap), "Freudenthal recursion");
            if (m < 0) {
                throw OracleError("Freudenthal recursion produced a negative "
                                  "multiplicity for " + to_string(labels));
            }
            multiplicity.emplace(nu, m);
            next.push_back(nu);
        }
        current = std::move(next);
    }

    WeightSystem out;
    for (auto& [coords, m] : multiplicity) out.emplace(WeightVector(coords), m);
    return out;
}

WeightSystem adjoint_weight_system(const Rank& rank) {
    const int size = rank.coordinate_count();
    WeightSystem out;
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            if (i == j) continue;
            std::vector<int> root(size, 0);
            ++root[i];
            --root[j];
            out.emplace(WeightVector(std::move(root)), 1);
        }
    }
    out.emplace(WeightVector(std::vector<int>(size, 0)), rank.n());
    return out;
}

IrrepMultiset tensor_with_weights(const IrrepMultiset& state,
                                  const WeightSystem& weights, const Rank& rank) {
    const int size = rank.coordinate_count();
    const auto rho = rho_coordinates(rank);
    IrrepMultiset out;
    std::vector<int> v(size);
    for (const auto& [labels, count] : state) {
        require_rank_match(labels, rank);
        const auto l = epsilon_coordinates(labels);
        for (const auto& [weight, m] : weights) {
            const auto& nu = weight.coords();
            if (static_cast<int>(nu.size()) != size) {
                throw DomainError("weight vector does not match rank");
            }
            for (int i = 0; i < size; ++i) v[i] = l[i] + rho[i] + nu[i];
            const int sign = sort_to_chamber(v);
            if (sign == 0) continue;
            for (int i = 0; i < size; ++i) v[i] -= rho[i];
            out.add(labels_from_epsilon(v), sign * m * count);
        }
    }
    for (const auto& [labels, count] : out) {
        if (count < 0) {
            throw OracleError("Klimyk accumulation left multiplicity " +
                              to_string(count) + " on " + to_string(labels));
        }
    }
    return out;
}

IrrepMultiset tensor_with_adjoint(const IrrepMultiset& state, const Rank& rank) {
    return tensor_with_weights(state, adjoint_weight_system(rank), rank);
}

std::vector<IrrepMultiset> adjoint_powers(int k, const Rank& rank) {
    if (k < 0) throw DomainError("power must be nonnegative, got " + std::to_string(k));
    const auto adjoint = adjoint_weight_system(rank);
    std::vector<IrrepMultiset> powers{IrrepMultiset{{trivial_labels(rank), 1}}};
    for (int i = 1; i <= k; ++i) {
        powers.push_back(tensor_with_weights(powers.back(), adjoint, rank));
    }
    return powers;
}

IrrepMultiset adjoint_power(int k, const Rank& rank) {
    return adjoint_powers(k, rank).back();
}

ExactInteger total_dimension(const IrrepMultiset& multiset, const Rank& rank) {
    return DimensionCache(rank).total(multiset);
}

std::vector<IrrepMultiset> extract_y_blocks(const std::vector<IrrepMultiset>& powers) {
    std::vector<IrrepMultiset> blocks;
    blocks.reserve(powers.size());
    for (int k = 0; k < static_cast<int>(powers.size()); ++k) {
        const auto row = coefficient_row(k);
        IrrepMultiset block = powers[k];
        for (int p = 0; p < k; ++p) block.add_scaled(blocks[p], -row.values[p]);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

YLibrary extract_y_contents(int k_max, const Rank& rank) {
    require_stable_range(k_max, rank);
    const auto blocks = extract_y_blocks(adjoint_powers(k_max, rank));
    YLibrary library{rank, {}};
    for (int p = 0; p <= k_max; ++p) {
        std::vector<std::string> violations;
        auto checks = check_block(p, blocks[p], rank, violations);
        if (!violations.empty()) throw OracleError(violations.front());
        library.contents.push_back(std::move(checks.stable_form));
    }
    return library;
}

bool same_stable_contents(const YLibrary& a, const YLibrary& b, int up_to) {
    if (static_cast<int>(a.contents.size()) <= up_to ||
        static_cast<int>(b.contents.size()) <= up_to) {
        return false;
    }
    for (int p = 0; p <= up_to; ++p) {
        if (!(a.contents[p] == b.contents[p])) return false;
    }
    return true;
}

VerificationReport verify_stable_decomposition(int k_max, const Rank& rank) {
    require_stable_range(k_max, rank);
    const auto start = Clock::now();
    VerificationReport report;
    report.k_max = k_max;
    report.rank = rank;

    const auto adjoint = adjoint_weight_system(rank);
    const auto derangements = derangement_sequence(k_max, DerangementMethod::adjacent);
    const ExactInteger adjoint_dimension =
        ExactInteger(rank.coordinate_count()) * rank.coordinate_count() - 1;
    const auto trivial = trivial_labels(rank);
    DimensionCache dimension(rank);

    std::vector<IrrepMultiset> blocks;
    std::vector<ExactInteger> block_dimensions;
    IrrepMultiset power{{trivial, 1}};
    ExactInteger expected_dimension = 1;

    for (int k = 0; k <= k_max; ++k) {
        const auto step_start = Clock::now();
        if (k > 0) {
            power = tensor_with_weights(power, adjoint, rank);
            expected_dimension *= adjoint_dimension;
        }
        const auto row = coefficient_row(k);

        IrrepMultiset block = power;
        for (int p = 0; p < k; ++p) block.add_scaled(blocks[p], -row.values[p]);
        blocks.push_back(block);
        block_dimensions.push_back(dimension.total(block));

        PowerCheck check;
        check.k = k;
        check.coefficients = row.values;

        IrrepMultiset recombined;
        ExactInteger from_y = 0;
        for (int p = 0; p <= k; ++p) {
            recombined.add_scaled(blocks[p], row.values[p]);
            from_y += row.values[p] * block_dimensions[p];
        }
        std::set<DynkinLabels> labels;
        for (const auto& entry : recombined) labels.insert(entry.first);
        for (const auto& entry : power) labels.insert(entry.first);
        for (const auto& l : labels) {
            if (recombined.count(l) != power.count(l)) {
                check.residual.push_back({l, recombined.count(l), power.count(l)});
            }
        }
        check.multiset_equal = check.residual.empty();
        if (!check.multiset_equal) {
            check.violations.push_back("X_" + std::to_string(k) +
                                       " differs from sum_p c_p Y_p");
        }

        check.dimension_expected = expected_dimension;
        check.dimension_observed = dimension.total(power);
        check.dimension_from_y = from_y;
        check.dimension_balanced = check.dimension_observed == expected_dimension &&
                                   from_y == expected_dimension;
        if (!check.dimension_balanced) {
            check.violations.push_back("dimension of X_" + std::to_string(k) + " is " +
                                       to_string(check.dimension_observed) + " (from Y: " +
                                       to_string(from_y) + "), expected " +
                                       to_string(expected_dimension));
        }

        auto block_checks = check_block(k, block, rank, check.violations);
        check.y_nonnegative = block_checks.nonnegative;
        check.leading_term = block_checks.leading;
        check.stable_labels = block_checks.stable;
        report.y_library.push_back(std::move(block_checks.stable_form));

        check.trivial_expected = derangements[k];
        check.trivial_observed = power.count(trivial);
        check.trivial_matches = check.trivial_expected == check.trivial_observed;
        if (!check.trivial_matches) {
            check.violations.push_back("trivial multiplicity in X_" + std::to_string(k) +
                                       " is " + to_string(check.trivial_observed) +
                                       ", expected d_k = " +
                                       to_string(check.trivial_expected));
        }

        check.elapsed_ms = milliseconds_since(step_start);
        report.powers.push_back(std::move(check));
    }

    report.pass = true;
    for (const auto& check : report.powers) report.pass = report.pass && check.pass();
    report.elapsed_ms = milliseconds_since(start);
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json powers = nlohmann::json::array();
    for (const auto& check : report.powers) {
        nlohmann::json residual = nlohmann::json::array();
        for (const auto& entry : check.residual) {
            residual.push_back({{"dynkin", entry.labels.a},
                                {"expected", to_string(entry.expected)},
                                {"observed", to_string(entry.observed)}});
        }
        powers.push_back({
            {"k", check.k},
            {"pass", check.pass()},
            {"coefficients", decimal(check.coefficients)},
            {"dimension",
             {{"expected", to_string(check.dimension_expected)},
              {"observed", to_string(check.dimension_observed)},
              {"from_y", to_string(check.dimension_from_y)}}},
            {"trivial",
             {{"expected", to_string(check.trivial_expected)},
              {"observed", to_string(check.trivial_observed)}}},
            {"checks",
             {{"multiset_equality", check.multiset_equal},
              {"dimension_balance", check.dimension_balanced},
              {"y_nonnegative", check.y_nonnegative},
              {"leading_term", check.leading_term},
              {"stable_labels", check.stable_labels},
              {"trivial_multiplicity", check.trivial_matches}}},
            {"residual", residual},
            {"violations", check.violations},
        });
    }
    nlohmann::json library = nlohmann::json::array();
    for (std::size_t p = 0; p < report.y_library.size(); ++p) {
        library.push_back({{"p", p}, {"contents", stable_json(report.y_library[p])}});
    }
    nlohmann::json doc{{"kind", "oracle_verification"},
                       {"k_max", report.k_max},
                       {"n", report.rank.n()},
                       {"pass", report.pass},
                       {"powers", powers},
                       {"y_library", library}};
    return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "A_" << report.rank.n() << ", k <= " << report.k_max << ": "
        << (report.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& check : report.powers) {
        out << "k=" << check.k << " " << (check.pass() ? "pass" : "FAIL")
            << "  coefficients [";
        for (std::size_t j = 0; j < check.coefficients.size(); ++j) {
            out << (j ? ", " : "") << check.coefficients[j];
        }
        out << "]  dim " << check.dimension_observed << "/" << check.dimension_expected
            << "  trivial " << check.trivial_observed << " (d_" << check.k << " = "
            << check.trivial_expected << ")\n";
        for (const auto& violation : check.violations) out << "  ! " << violation << "\n";
        for (const auto& entry : check.residual) {
            out << "  residual " << to_string(entry.labels) << ": expected "
                << entry.expected << ", observed " << entry.observed << "\n";
        }
    }
    for (std::size_t p = 0; p < report.y_library.size(); ++p) {
        out << "Y_" << p << " = " << describe(report.y_library[p]) << "\n";
    }
    return out.str();
}

}  // namespace adjpow
