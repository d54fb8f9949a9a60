#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "raneycore/natural.hpp"

namespace raneycore {

// Top endpoint of an edge: either a leaf or the base of a p-star, in which
// case it carries exactly p child edges, recorded left to right.
struct CoralNode {
    std::vector<CoralNode> children;

    bool is_leaf() const { return children.empty(); }
    bool operator==(const CoralNode&) const = default;
};

// Rooted plane tree of type (p, r, k): an r-star whose terminal edges carry
// k p-stars stacked above.  Attachment order is not modeled; two placement
// sequences producing the same plane tree are the same diagram.
struct CoralDiagram {
    int p = 1;
    std::vector<CoralNode> tops;  // one per root edge, left to right

    int root_arity() const { return static_cast<int>(tops.size()); }
    bool operator==(const CoralDiagram&) const = default;
};

// Number of p-stars in the diagram.
int star_count(const CoralDiagram& d);

// Visits every diagram of type (p, r, k) exactly once.  Star budgets are
// distributed over edges in lexicographically increasing compositions and
// children enumerated leftmost-first, so the order is deterministic.
void enumerate_coral(int p, int r, int k,
                     const std::function<void(const CoralDiagram&)>& visit);
std::vector<CoralDiagram> all_coral(int p, int r, int k);

// |D(p,r,k)| by dynamic programming over tree shapes; no diagrams are built.
Natural count_coral(int p, int r, int k);

// For r >= 2: the leftmost root edge as a type (p,1,i) diagram and the
// remaining r-1 edges as a type (p,r-1,k-i) diagram.
std::pair<CoralDiagram, CoralDiagram> split_at_root(const CoralDiagram& d);

// Inverse of split_at_root; d1 must have root arity 1.
CoralDiagram join_at_root(const CoralDiagram& d1, const CoralDiagram& d2);

// For a type (p,1,k) diagram with k >= 1: contract the single root edge so
// the p-star atop it becomes the root, giving a type (p,p,k-1) diagram.
CoralDiagram contract_root_star(const CoralDiagram& d);

// Inverse of contract_root_star; d must have root arity p.
CoralDiagram expand_root_star(const CoralDiagram& d);

// DOT rendering: root at the bottom, edges drawn upward, star bases as
// filled circles, leaves as open circles.
std::string coral_to_dot(const CoralDiagram& d);

}  // namespace raneycore
