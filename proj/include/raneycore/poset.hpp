#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "raneycore/natural.hpp"
#include "raneycore/partition.hpp"

namespace raneycore {

// The poset of positive integers outside the numerical semigroup generated by
// coprime s and t, with y covering x exactly when y - x is s or t.  Beta-sets
// of (s,t)-core partitions are precisely its order ideals.
class CorePoset {
public:
    // requires s,t >= 1, s != t, gcd(s,t) = 1
    CorePoset(int s, int t);

    int s() const { return s_; }
    int t() const { return t_; }
    const std::vector<int>& elements() const { return elements_; }                // ascending
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }    // lex order
    const std::vector<int>& minimals() const { return minimals_; }                // ascending
    bool contains(int x) const;

private:
    int s_;
    int t_;
    std::vector<int> elements_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> minimals_;
};

CorePoset build_core_poset(int s, int t);

// Downward-closed subset of a CorePoset, stored as ascending member values.
struct OrderIdeal {
    std::vector<int> members;

    bool operator==(const OrderIdeal&) const = default;
    auto operator<=>(const OrderIdeal&) const = default;
};

bool is_order_ideal(const CorePoset& poset, const OrderIdeal& ideal);

// Visits every order ideal exactly once, in lexicographic order of the
// ascending member lists (the empty ideal first, the full set last among its
// prefix chain).  Depth-first; memory proportional to the longest chain.
void enumerate_order_ideals(const CorePoset& poset,
                            const std::function<void(const OrderIdeal&)>& visit);
std::vector<OrderIdeal> all_order_ideals(const CorePoset& poset);
Natural count_order_ideals(const CorePoset& poset);

// The unique (s,t)-core whose beta-set is the ideal.
Partition ideal_to_partition(const OrderIdeal& ideal);

// enumerate_order_ideals composed with ideal_to_partition.
void enumerate_core_partitions(int s, int t,
                               const std::function<void(const Partition&)>& visit);
std::vector<Partition> all_core_partitions(int s, int t);

// For an ideal of T_s = P_(s,s+1): the least minimal element i in [1, s-1]
// missing from the ideal, or s when all minimals are present.
int smallest_missing_rank0(const OrderIdeal& ideal, int s);

// An ideal of T_s with smallest missing rank-0 element i splits into
// {1,...,i-1}, an ideal of T_{i-1}, and an ideal of T_{s-i}, the latter two
// re-labeled to the canonical element sets by the order-preserving bijection.
struct IdealDecomposition {
    int split_index = 1;      // the i above
    std::vector<int> prefix;  // {1, ..., i-1}
    OrderIdeal left;          // ideal of T_{i-1}
    OrderIdeal right;         // ideal of T_{s-i}
};

IdealDecomposition decompose_ideal(const OrderIdeal& ideal, int s);
OrderIdeal recompose_ideal(const IdealDecomposition& parts, int s);

// Number of ideals of T_s in which every maximal run of consecutive integers
// has length divisible by p.  The enumerated and recurrence routes must agree
// wherever both run; the combined entry point cross-checks them at small s.
Natural count_ideals_with_property(int s, int p);
Natural count_ideals_with_property_enumerated(int s, int p);
Natural count_ideals_with_property_recurrence(int s, int p);

// Hasse diagram in DOT format: nodes labeled by element value, one edge per
// cover, elements grouped by poset rank.
std::string poset_to_dot(const CorePoset& poset);

}  // namespace raneycore
