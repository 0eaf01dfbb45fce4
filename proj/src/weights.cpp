#include "adjpow/weights.hpp"

#include <algorithm>
#include <numeric>

namespace adjpow {

namespace {

void require_partition(const Partition& p, const char* side) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) {
            throw DomainError(std::string(side) +
                              " partition must be positive and nonincreasing");
        }
    }
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

Rank::Rank(int n) : n_(n) {
    if (n < 1) throw DomainError("rank n must be >= 1, got " + std::to_string(n));
}

DynkinLabels make_labels(std::vector<int> a, const Rank& rank) {
    if (static_cast<int>(a.size()) != rank.n()) {
        throw DomainError("expected " + std::to_string(rank.n()) +
                          " Dynkin labels, got " + std::to_string(a.size()));
    }
    for (int v : a) {
        if (v < 0) throw DomainError("Dynkin labels must be nonnegative");
    }
    return DynkinLabels{std::move(a)};
}

DynkinLabels trivial_labels(const Rank& rank) {
    return DynkinLabels{std::vector<int>(rank.n(), 0)};
}

DynkinLabels adjoint_labels(const Rank& rank) {
    std::vector<int> a(rank.n(), 0);
    a.front() += 1;
    a.back() += 1;
    return DynkinLabels{std::move(a)};
}

DynkinLabels defining_labels(const Rank& rank) {
    std::vector<int> a(rank.n(), 0);
    a.front() = 1;
    return DynkinLabels{std::move(a)};
}

WeightVector::WeightVector(std::vector<int> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) return;
    const int lowest = *std::min_element(coords_.begin(), coords_.end());
    for (int& c : coords_) c -= lowest;
}

std::vector<int> epsilon_coordinates(const DynkinLabels& labels) {
    std::vector<int> l(labels.a.size() + 1, 0);
    for (int i = static_cast<int>(labels.a.size()) - 1; i >= 0; --i) {
        l[i] = l[i + 1] + labels.a[i];
    }
    return l;
}

DynkinLabels labels_from_epsilon(const std::vector<int>& coords) {
    DynkinLabels labels;
    labels.a.resize(coords.size() - 1);
    for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
        labels.a[i] = coords[i] - coords[i + 1];
    }
    return labels;
}

std::string to_string(const StableLabel& label) {
    return "((" + join(label.left) + "),(" + join(label.right) + "))";
}

std::string to_string(const DynkinLabels& labels) {
    return "[" + join(labels.a) + "]";
}

DynkinLabels stable_to_dynkin(const StableLabel& label, const Rank& rank) {
    require_partition(label.left, "left");
    require_partition(label.right, "right");
    const int left_boxes = std::accumulate(label.left.begin(), label.left.end(), 0);
    const int right_boxes = std::accumulate(label.right.begin(), label.right.end(), 0);
    if (left_boxes != right_boxes) {
        throw DomainError("stable label " + to_string(label) +
                          " has unequal box counts");
    }
    const int size = rank.coordinate_count();
    if (static_cast<int>(label.left.size() + label.right.size()) > size) {
        throw DomainError("rank n=" + std::to_string(rank.n()) +
                          " is too small for stable label " + to_string(label));
    }
    std::vector<int> w(size, 0);
    for (std::size_t i = 0; i < label.left.size(); ++i) w[i] = label.left[i];
    for (std::size_t i = 0; i < label.right.size(); ++i) {
        w[size - 1 - i] -= label.right[i];
    }
    return labels_from_epsilon(w);
}

StableLabel dynkin_to_stable(const DynkinLabels& labels, const Rank& rank,
                             std::optional<int> max_boxes) {
    if (static_cast<int>(labels.a.size()) != rank.n()) {
        throw DomainError("label " + to_string(labels) + " does not match rank n=" +
                          std::to_string(rank.n()));
    }
    auto l = epsilon_coordinates(labels);
    const int size = rank.coordinate_count();
    const int total = std::accumulate(l.begin(), l.end(), 0);
    if (total % size != 0) {
        throw DomainError("label " + to_string(labels) +
                          " lies outside the root lattice");
    }
    const int shift = total / size;
    StableLabel out;
    for (int c : l) {
        if (c - shift > 0) out.left.push_back(c - shift);
    }
    for (auto it = l.rbegin(); it != l.rend(); ++it) {
        if (*it - shift < 0) out.right.push_back(shift - *it);
    }
    const int boxes = std::accumulate(out.left.begin(), out.left.end(), 0);
    if (max_boxes && boxes > *max_boxes) {
        throw DomainError("label " + to_string(labels) + " needs " +
                          std::to_string(boxes) + " boxes per side, more than " +
                          std::to_string(*max_boxes));
    }
    return out;
}

}  // namespace adjpow
