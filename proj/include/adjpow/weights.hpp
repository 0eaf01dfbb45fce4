#pragma once

#include "adjpow/exact.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adjpow {

// The algebra A_n, acting on C^{n+1}.
class Rank {
public:
    explicit Rank(int n);

    int n() const { return n_; }
    int coordinate_count() const { return n_ + 1; }

    friend bool operator==(const Rank&, const Rank&) = default;

private:
    int n_;
};

// Highest weight in the fundamental-weight basis: n nonnegative integers.
struct DynkinLabels {
    std::vector<int> a;

    friend auto operator<=>(const DynkinLabels&, const DynkinLabels&) = default;
};

// Validates length and sign against the rank.
DynkinLabels make_labels(std::vector<int> a, const Rank& rank);
DynkinLabels trivial_labels(const Rank& rank);
DynkinLabels adjoint_labels(const Rank& rank);
DynkinLabels defining_labels(const Rank& rank);

// Weight in epsilon coordinates. Weights of sl_{n+1} are only defined up to a
// uniform shift, so the stored form always has minimum entry 0.
class WeightVector {
public:
    explicit WeightVector(std::vector<int> coords);

    const std::vector<int>& coords() const { return coords_; }

    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<int> coords_;
};

using WeightSystem = std::map<WeightVector, ExactInteger>;

// Epsilon coordinates l_i = a_i + ... + a_n of a highest weight (last entry 0).
std::vector<int> epsilon_coordinates(const DynkinLabels& labels);

// Inverse of epsilon_coordinates for a nonincreasing vector.
DynkinLabels labels_from_epsilon(const std::vector<int>& coords);

using Partition = std::vector<int>;

// Rank-independent name (lambda, mu) of a mixed-tensor irreducible: the
// highest weight is lambda on the leading coordinates minus reversed mu on
// the trailing ones. ((p),(p)) names [p,0,...,0,p].
struct StableLabel {
    Partition left;
    Partition right;

    friend auto operator<=>(const StableLabel&, const StableLabel&) = default;
};

std::string to_string(const StableLabel& label);
std::string to_string(const DynkinLabels& labels);

// Needs |left| = |right| and len(left) + len(right) <= n + 1.
DynkinLabels stable_to_dynkin(const StableLabel& label, const Rank& rank);

// Reads the zero-sum epsilon representative. Rejects weights outside the root
// lattice and, when max_boxes is given, labels with more than max_boxes boxes
// on either side.
StableLabel dynkin_to_stable(const DynkinLabels& labels, const Rank& rank,
                             std::optional<int> max_boxes = std::nullopt);

// Map from labels to nonzero exact multiplicities. Zero entries are dropped
// as soon as they appear; negative entries are representable so that
// differences can be formed, and callers check has_negative().
template <class Label>
class Multiset {
public:
    using Map = std::map<Label, ExactInteger>;

    Multiset() = default;
    Multiset(std::initializer_list<std::pair<const Label, ExactInteger>> init) {
        for (const auto& [label, count] : init) add(label, count);
    }

    void add(const Label& label, const ExactInteger& delta) {
        if (delta == 0) return;
        auto [it, inserted] = entries_.try_emplace(label, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second == 0) entries_.erase(it);
        }
    }

    void add_scaled(const Multiset& other, const ExactInteger& factor) {
        if (factor == 0) return;
        for (const auto& [label, count] : other.entries_) add(label, factor * count);
    }

    ExactInteger count(const Label& label) const {
        auto it = entries_.find(label);
        return it == entries_.end() ? ExactInteger(0) : it->second;
    }

    bool has_negative() const {
        for (const auto& entry : entries_) {
            if (entry.second < 0) return true;
        }
        return false;
    }

    const Map& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const Multiset&, const Multiset&) = default;

private:
    Map entries_;
};

using IrrepMultiset = Multiset<DynkinLabels>;
using StableMultiset = Multiset<StableLabel>;

}  // namespace adjpow
