#include "raneycore/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace raneycore {

namespace {

bool sorted_contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// T_m = P_(m, m+1); empty for m <= 1.
std::vector<int> staircase_elements(int m) {
    if (m <= 1) return {};
    return CorePoset(m, m + 1).elements();
}

}  // namespace

CorePoset::CorePoset(int s, int t) : s_(s), t_(t) {
    detail::check_arg(s >= 1 && t >= 1, "CorePoset: s and t must be positive");
    detail::check_arg(s != t, "CorePoset: s and t must differ");
    detail::check_arg(std::gcd(s, t) == 1, "CorePoset: s and t must be coprime");
    detail::check_arg(static_cast<long long>(s) * t <= std::numeric_limits<int>::max(),
                      "CorePoset: s*t does not fit the element range");

    // Sieve representable values by +s/+t steps up to the Frobenius bound st-s-t.
    const long long frobenius = static_cast<long long>(s) * t - s - t;
    if (frobenius >= 1) {
        std::vector<char> representable(frobenius + 1, 0);
        representable[0] = 1;
        for (long long v = 1; v <= frobenius; ++v)
            representable[v] = (v >= s && representable[v - s]) || (v >= t && representable[v - t]);
        for (long long v = 1; v <= frobenius; ++v)
            if (!representable[v]) elements_.push_back(static_cast<int>(v));
    }

    for (int x : elements_) {
        for (int step : {std::min(s, t), std::max(s, t)})
            if (contains(x + step)) covers_.emplace_back(x, x + step);
        if (!contains(x - s) && !contains(x - t)) minimals_.push_back(x);
    }
    std::sort(covers_.begin(), covers_.end());
}

bool CorePoset::contains(int x) const { return sorted_contains(elements_, x); }

CorePoset build_core_poset(int s, int t) { return CorePoset(s, t); }

bool is_order_ideal(const CorePoset& poset, const OrderIdeal& ideal) {
    if (!std::is_sorted(ideal.members.begin(), ideal.members.end())) return false;
    for (int x : ideal.members)
        if (!poset.contains(x)) return false;
    for (const auto& [x, y] : poset.covers())
        if (sorted_contains(ideal.members, y) && !sorted_contains(ideal.members, x)) return false;
    return true;
}

void enumerate_order_ideals(const CorePoset& poset,
                            const std::function<void(const OrderIdeal&)>& visit) {
    const auto& elems = poset.elements();
    const int n = static_cast<int>(elems.size());

    std::map<int, int> index_of;
    for (int i = 0; i < n; ++i) index_of.emplace(elems[i], i);
    std::vector<std::vector<int>> lower(n);  // indices of elements covered by each element
    for (const auto& [x, y] : poset.covers()) lower[index_of.at(y)].push_back(index_of.at(x));

    std::vector<char> in(n, 0);
    OrderIdeal current;
    // Preorder emit-then-extend: every extension adds an element larger than
    // all current members, so emission follows lexicographic member-list order.
    std::function<void(int)> walk = [&](int floor_idx) {
        visit(current);
        for (int e = floor_idx; e < n; ++e) {
            bool eligible = true;
            for (int c : lower[e])
                if (!in[c]) { eligible = false; break; }
            if (!eligible) continue;
            in[e] = 1;
            current.members.push_back(elems[e]);
            walk(e + 1);
            current.members.pop_back();
            in[e] = 0;
        }
    };
    walk(0);
}

std::vector<OrderIdeal> all_order_ideals(const CorePoset& poset) {
    std::vector<OrderIdeal> out;
    enumerate_order_ideals(poset, [&](const OrderIdeal& ideal) { out.push_back(ideal); });
    return out;
}

Natural count_order_ideals(const CorePoset& poset) {
    Natural count = 0;
    enumerate_order_ideals(poset, [&](const OrderIdeal&) { ++count; });
    return count;
}

Partition ideal_to_partition(const OrderIdeal& ideal) {
    return partition_from_beta(BetaSet(ideal.members));
}

void enumerate_core_partitions(int s, int t,
                               const std::function<void(const Partition&)>& visit) {
    const CorePoset poset(s, t);
    enumerate_order_ideals(poset,
                           [&](const OrderIdeal& ideal) { visit(ideal_to_partition(ideal)); });
}

std::vector<Partition> all_core_partitions(int s, int t) {
    std::vector<Partition> out;
    enumerate_core_partitions(s, t, [&](const Partition& p) { out.push_back(p); });
    return out;
}

int smallest_missing_rank0(const OrderIdeal& ideal, int s) {
    detail::check_arg(s >= 1, "smallest_missing_rank0: s must be positive");
    for (int i = 1; i <= s - 1; ++i)
        if (!sorted_contains(ideal.members, i)) return i;
    return s;
}

namespace {

// Splits the elements of T_s relative to the missing minimal element i:
// the prefix {1..i-1}, the cone of elements above i, and the two remaining
// staircases together with their order-preserving relabelings onto the
// canonical elements of T_{i-1} and T_{s-i}.
struct StaircaseSplit {
    std::vector<int> prefix;
    std::vector<int> cone;
    std::vector<int> left_values;   // ascending, order-isomorphic to T_{i-1}
    std::vector<int> right_values;  // ascending, order-isomorphic to T_{s-i}
    std::map<int, int> left_to_canonical;
    std::map<int, int> right_to_canonical;
    std::map<int, int> canonical_to_left;
    std::map<int, int> canonical_to_right;
};

void check_order_isomorphism(const CorePoset& host, const std::vector<int>& part_values,
                             const std::map<int, int>& to_canonical, int m) {
    if (m <= 1) {
        detail::require(part_values.empty(), "decompose_ideal: nonempty part for empty poset");
        return;
    }
    const CorePoset target(m, m + 1);
    detail::require(part_values.size() == target.elements().size(),
                    "decompose_ideal: part size differs from canonical poset");
    std::set<std::pair<int, int>> part_covers;
    for (const auto& [x, y] : host.covers())
        if (to_canonical.count(x) && to_canonical.count(y))
            part_covers.emplace(to_canonical.at(x), to_canonical.at(y));
    const std::set<std::pair<int, int>> target_covers(target.covers().begin(),
                                                      target.covers().end());
    detail::require(part_covers == target_covers,
                    "decompose_ideal: relabeling does not preserve cover relations");
}

StaircaseSplit split_staircase(const CorePoset& poset, int i) {
    const int s = poset.s();
    StaircaseSplit split;
    for (int v = 1; v <= i - 1; ++v) split.prefix.push_back(v);

    // cone = upward closure of {i} along covers
    std::set<int> cone;
    if (poset.contains(i)) {
        std::vector<int> frontier{i};
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            if (!cone.insert(x).second) continue;
            for (int step : {s, s + 1})
                if (poset.contains(x + step)) frontier.push_back(x + step);
        }
    }
    split.cone.assign(cone.begin(), cone.end());

    // Remaining elements form two disjoint staircases; the one containing
    // minimal elements of T_s is the right part.
    std::vector<int> free_values;
    for (int x : poset.elements())
        if (!cone.count(x) && (x < 1 || x > i - 1)) free_values.push_back(x);

    std::map<int, int> component;  // free value -> component id of its representative
    std::map<int, std::vector<int>> groups;
    {
        std::set<int> free_set(free_values.begin(), free_values.end());
        int next_id = 0;
        for (int x : free_values) {
            if (component.count(x)) continue;
            const int id = next_id++;
            std::vector<int> frontier{x};
            while (!frontier.empty()) {
                int v = frontier.back();
                frontier.pop_back();
                if (component.count(v)) continue;
                component[v] = id;
                for (int step : {s, s + 1, -s, -(s + 1)})
                    if (free_set.count(v + step)) frontier.push_back(v + step);
            }
        }
        for (int x : free_values) groups[component.at(x)].push_back(x);
    }
    detail::require(groups.size() <= 2, "decompose_ideal: more than two free staircases");
    for (auto& [id, values] : groups) {
        std::sort(values.begin(), values.end());
        const bool touches_minimals = values.front() <= s - 1;
        auto& target = touches_minimals ? split.right_values : split.left_values;
        detail::require(target.empty(), "decompose_ideal: duplicate staircase role");
        target = values;
    }

    const auto fill_maps = [](const std::vector<int>& values, int m, std::map<int, int>& fwd,
                              std::map<int, int>& rev) {
        const std::vector<int> canonical = staircase_elements(m);
        detail::require(values.size() == canonical.size(),
                        "decompose_ideal: staircase size mismatch");
        for (std::size_t idx = 0; idx < values.size(); ++idx) {
            fwd.emplace(values[idx], canonical[idx]);
            rev.emplace(canonical[idx], values[idx]);
        }
    };
    fill_maps(split.left_values, i - 1, split.left_to_canonical, split.canonical_to_left);
    fill_maps(split.right_values, s - i, split.right_to_canonical, split.canonical_to_right);
    check_order_isomorphism(poset, split.left_values, split.left_to_canonical, i - 1);
    check_order_isomorphism(poset, split.right_values, split.right_to_canonical, s - i);

    // Values in distinct parts never sit at distance <= 1 from one another.
    const std::vector<const std::vector<int>*> parts{&split.prefix, &split.left_values,
                                                     &split.right_values};
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            for (int x : *parts[a])
                for (int y : *parts[b])
                    detail::require(std::abs(x - y) > 1,
                                    "decompose_ideal: parts separated by gap <= 1");
    return split;
}

}  // namespace

IdealDecomposition decompose_ideal(const OrderIdeal& ideal, int s) {
    detail::check_arg(s >= 1, "decompose_ideal: s must be positive");
    const CorePoset poset(s, s + 1);
    detail::check_arg(is_order_ideal(poset, ideal), "decompose_ideal: not an ideal of T_s");

    IdealDecomposition out;
    out.split_index = smallest_missing_rank0(ideal, s);
    const StaircaseSplit split = split_staircase(poset, out.split_index);
    out.prefix = split.prefix;

    for (int x : ideal.members) {
        if (sorted_contains(split.prefix, x)) continue;
        detail::require(!sorted_contains(split.cone, x),
                        "decompose_ideal: ideal meets the cone above the missing minimal");
        if (auto it = split.left_to_canonical.find(x); it != split.left_to_canonical.end())
            out.left.members.push_back(it->second);
        else
            out.right.members.push_back(split.right_to_canonical.at(x));
    }
    for (int x : split.prefix)
        detail::require(sorted_contains(ideal.members, x),
                        "decompose_ideal: prefix element missing from ideal");

    if (out.split_index >= 3)
        detail::require(is_order_ideal(CorePoset(out.split_index - 1, out.split_index),
                                       out.left),
                        "decompose_ideal: left part is not an ideal of T_{i-1}");
    if (s - out.split_index >= 2)
        detail::require(is_order_ideal(CorePoset(s - out.split_index, s - out.split_index + 1),
                                       out.right),
                        "decompose_ideal: right part is not an ideal of T_{s-i}");
    return out;
}

OrderIdeal recompose_ideal(const IdealDecomposition& parts, int s) {
    detail::check_arg(s >= 1, "recompose_ideal: s must be positive");
    detail::check_arg(parts.split_index >= 1 && parts.split_index <= s,
                      "recompose_ideal: split index out of range");
    const CorePoset poset(s, s + 1);
    const StaircaseSplit split = split_staircase(poset, parts.split_index);
    detail::check_arg(parts.prefix == split.prefix,
                      "recompose_ideal: prefix does not match the split index");

    OrderIdeal out;
    out.members = split.prefix;
    for (int x : parts.left.members) out.members.push_back(split.canonical_to_left.at(x));
    for (int x : parts.right.members) out.members.push_back(split.canonical_to_right.at(x));
    std::sort(out.members.begin(), out.members.end());
    detail::require(is_order_ideal(poset, out), "recompose_ideal: result is not an ideal");
    return out;
}

namespace {

// C_{p,r}(k): ideals of T_{kp+r} whose runs all have length divisible by p,
// evaluated from the split-at-smallest-missing-minimal recurrences
//   C_{p,0}(k) = sum_{i=0}^{k-1} C_{p,0}(i) C_{p,p-1}(k-1-i)
//   C_{p,r}(k) = sum_{i=0}^{k}   C_{p,0}(i) C_{p,r-1}(k-i)    (r > 0)
// with C_{p,r}(0) = 1.
class PropertyCountRecurrence {
public:
    explicit PropertyCountRecurrence(int p) : p_(p) {}

    Natural eval(int r, int k) {
        if (k == 0) return 1;
        const auto key = std::pair{r, k};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Natural sum = 0;
        if (r == 0) {
            for (int i = 0; i < k; ++i) sum += eval(0, i) * eval(p_ - 1, k - 1 - i);
        } else {
            for (int i = 0; i <= k; ++i) sum += eval(0, i) * eval(r - 1, k - i);
        }
        return memo_.emplace(key, std::move(sum)).first->second;
    }

private:
    int p_;
    std::map<std::pair<int, int>, Natural> memo_;
};

constexpr int kPropertyCrossCheckLimit = 12;

}  // namespace

Natural count_ideals_with_property_enumerated(int s, int p) {
    detail::check_arg(s >= 0, "count_ideals_with_property: s must be nonnegative");
    detail::check_arg(p >= 1, "count_ideals_with_property: p must be positive");
    if (s <= 1) return 1;  // empty poset, only the empty ideal
    Natural count = 0;
    enumerate_order_ideals(CorePoset(s, s + 1), [&](const OrderIdeal& ideal) {
        if (has_property_p(ideal.members, p)) ++count;
    });
    return count;
}

Natural count_ideals_with_property_recurrence(int s, int p) {
    detail::check_arg(s >= 0, "count_ideals_with_property: s must be nonnegative");
    detail::check_arg(p >= 1, "count_ideals_with_property: p must be positive");
    return PropertyCountRecurrence(p).eval(s % p, s / p);
}

Natural count_ideals_with_property(int s, int p) {
    Natural by_recurrence = count_ideals_with_property_recurrence(s, p);
    if (s <= kPropertyCrossCheckLimit) {
        detail::require(by_recurrence == count_ideals_with_property_enumerated(s, p),
                        "count_ideals_with_property: enumerated and recurrence routes differ");
    }
    return by_recurrence;
}

std::string poset_to_dot(const CorePoset& poset) {
    // rank = longest chain below; ascending value order is topological here
    std::map<int, int> rank;
    for (int x : poset.elements()) rank[x] = 0;
    for (const auto& [x, y] : poset.covers()) rank[y] = std::max(rank[y], rank[x] + 1);

    std::map<int, std::vector<int>> levels;
    for (int x : poset.elements()) levels[rank[x]].push_back(x);

    std::ostringstream out;
    out << "digraph core_poset {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    for (const auto& [level, values] : levels) {
        out << "  { rank=same;";
        for (int x : values) out << " " << x << ";";
        out << " }\n";
    }
    for (const auto& [x, y] : poset.covers()) out << "  " << x << " -> " << y << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace raneycore
