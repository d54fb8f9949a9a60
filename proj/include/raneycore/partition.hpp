#pragma once

#include <compare>
#include <vector>

#include "raneycore/natural.hpp"

namespace raneycore {

// Weakly decreasing sequence of positive integers; the empty partition is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    Natural size() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Finite set of distinct positive integers, iterated in decreasing order.
class BetaSet {
public:
    BetaSet() = default;
    explicit BetaSet(std::vector<int> elements);

    // strictly decreasing
    const std::vector<int>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }

    bool operator==(const BetaSet&) const = default;

private:
    std::vector<int> elems_;
};

// Row i holds the hook lengths of row i of the Young diagram.
using HookGrid = std::vector<std::vector<int>>;

// Hook length of box (i,j) via arm + leg + 1 with a precomputed conjugate.
HookGrid hook_lengths(const Partition& lambda);

// First-column hook lengths {lambda_i + m - i : 1 <= i <= m}.
BetaSet beta_set(const Partition& lambda);

// Inverse of beta_set: sorts descending as (h_1,...,h_m) and returns
// (h_1-(m-1), ..., h_{m-1}-1, h_m).
Partition partition_from_beta(const BetaSet& b);

// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& lambda);

// True iff no hook length of lambda is divisible by t.
bool is_core(const Partition& lambda, int t);

// True iff every part is divisible by p; vacuously true for the empty partition.
bool all_parts_multiple_of(const Partition& lambda, int p);

// True iff every maximal run of consecutive integers in the set has length
// divisible by l; vacuously true for the empty set.
bool has_property_p(const std::vector<int>& s, int l);
bool has_property_p(const BetaSet& s, int l);

}  // namespace raneycore
