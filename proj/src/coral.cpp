#include "raneycore/coral.hpp"

#include <map>
#include <sstream>

namespace raneycore {

namespace {

int node_star_count(const CoralNode& node) {
    if (node.is_leaf()) return 0;
    int total = 1;
    for (const CoralNode& child : node.children) total += node_star_count(child);
    return total;
}

void validate_node(const CoralNode& node, int p) {
    if (node.is_leaf()) return;
    detail::check_arg(static_cast<int>(node.children.size()) == p,
                      "CoralDiagram: internal vertex without exactly p children");
    for (const CoralNode& child : node.children) validate_node(child, p);
}

void validate_diagram(const CoralDiagram& d) {
    detail::check_arg(d.p >= 1, "CoralDiagram: p must be positive");
    for (const CoralNode& top : d.tops) validate_node(top, d.p);
}

// All single-top shapes with a given star count, cached per enumeration run.
class ShapeTable {
public:
    explicit ShapeTable(int p) : p_(p) {}

    const std::vector<CoralNode>& shapes(int stars) {
        if (auto it = cache_.find(stars); it != cache_.end()) return it->second;
        std::vector<CoralNode> out;
        if (stars == 0) {
            out.push_back(CoralNode{});
        } else {
            std::vector<CoralNode> acc;
            tuples(p_, stars - 1, acc, [&](const std::vector<CoralNode>& children) {
                out.push_back(CoralNode{children});
            });
        }
        return cache_.emplace(stars, std::move(out)).first->second;
    }

    // Every length-`slots` tuple of tops with the given total star budget,
    // budgets in lexicographically increasing composition order, children
    // leftmost-first.
    void tuples(int slots, int budget, std::vector<CoralNode>& acc,
                const std::function<void(const std::vector<CoralNode>&)>& visit) {
        if (slots == 0) {
            if (budget == 0) visit(acc);
            return;
        }
        const int lo = slots == 1 ? budget : 0;
        for (int b = lo; b <= budget; ++b) {
            for (const CoralNode& shape : shapes(b)) {
                acc.push_back(shape);
                tuples(slots - 1, budget - b, acc, visit);
                acc.pop_back();
            }
        }
    }

private:
    int p_;
    std::map<int, std::vector<CoralNode>> cache_;
};

void render_node(const CoralNode& node, int parent_id, int& next_id, std::ostringstream& out) {
    const int id = next_id++;
    if (node.is_leaf())
        out << "  n" << id << " [label=\"\", shape=circle];\n";
    else
        out << "  n" << id << " [label=\"\", shape=circle, style=filled];\n";
    out << "  n" << parent_id << " -> n" << id << ";\n";
    for (const CoralNode& child : node.children) render_node(child, id, next_id, out);
}

}  // namespace

int star_count(const CoralDiagram& d) {
    int total = 0;
    for (const CoralNode& top : d.tops) total += node_star_count(top);
    return total;
}

void enumerate_coral(int p, int r, int k,
                     const std::function<void(const CoralDiagram&)>& visit) {
    detail::check_arg(p >= 1, "enumerate_coral: p must be positive");
    detail::check_arg(r >= 0 && k >= 0, "enumerate_coral: r and k must be nonnegative");
    ShapeTable table(p);
    std::vector<CoralNode> acc;
    CoralDiagram diagram;
    diagram.p = p;
    table.tuples(r, k, acc, [&](const std::vector<CoralNode>& tops) {
        diagram.tops = tops;
        visit(diagram);
    });
}

std::vector<CoralDiagram> all_coral(int p, int r, int k) {
    std::vector<CoralDiagram> out;
    enumerate_coral(p, r, k, [&](const CoralDiagram& d) { out.push_back(d); });
    return out;
}

Natural count_coral(int p, int r, int k) {
    detail::check_arg(p >= 1, "count_coral: p must be positive");
    detail::check_arg(r >= 0 && k >= 0, "count_coral: r and k must be nonnegative");

    // tops[j] = single-top shapes with j stars
    std::vector<Natural> tops(k + 1, 0);
    tops[0] = 1;
    for (int j = 1; j <= k; ++j) {
        // distribute j-1 stars over the p children of the bottom star
        std::vector<Natural> dp(j, 0);
        dp[0] = 1;
        for (int child = 0; child < p; ++child) {
            std::vector<Natural> next(j, 0);
            for (int have = 0; have < j; ++have) {
                if (dp[have] == 0) continue;
                for (int take = 0; have + take < j; ++take)
                    next[have + take] += dp[have] * tops[take];
            }
            dp = std::move(next);
        }
        tops[j] = dp[j - 1];
    }

    // distribute k stars over the r root edges
    std::vector<Natural> dp(k + 1, 0);
    dp[0] = 1;
    for (int edge = 0; edge < r; ++edge) {
        std::vector<Natural> next(k + 1, 0);
        for (int have = 0; have <= k; ++have) {
            if (dp[have] == 0) continue;
            for (int take = 0; have + take <= k; ++take)
                next[have + take] += dp[have] * tops[take];
        }
        dp = std::move(next);
    }
    return dp[k];
}

std::pair<CoralDiagram, CoralDiagram> split_at_root(const CoralDiagram& d) {
    validate_diagram(d);
    detail::check_arg(d.root_arity() >= 2, "split_at_root: root arity must be at least 2");
    CoralDiagram left{d.p, {d.tops.front()}};
    CoralDiagram rest{d.p, {d.tops.begin() + 1, d.tops.end()}};
    return {std::move(left), std::move(rest)};
}

CoralDiagram join_at_root(const CoralDiagram& d1, const CoralDiagram& d2) {
    validate_diagram(d1);
    validate_diagram(d2);
    detail::check_arg(d1.p == d2.p, "join_at_root: diagrams must share p");
    detail::check_arg(d1.root_arity() == 1, "join_at_root: left diagram must have root arity 1");
    CoralDiagram out{d1.p, {d1.tops.front()}};
    out.tops.insert(out.tops.end(), d2.tops.begin(), d2.tops.end());
    return out;
}

CoralDiagram contract_root_star(const CoralDiagram& d) {
    validate_diagram(d);
    detail::check_arg(d.root_arity() == 1, "contract_root_star: root arity must be 1");
    detail::check_arg(!d.tops.front().is_leaf(),
                      "contract_root_star: no star atop the root edge");
    return CoralDiagram{d.p, d.tops.front().children};
}

CoralDiagram expand_root_star(const CoralDiagram& d) {
    validate_diagram(d);
    detail::check_arg(d.root_arity() == d.p,
                      "expand_root_star: root arity must equal p");
    return CoralDiagram{d.p, {CoralNode{d.tops}}};
}

std::string coral_to_dot(const CoralDiagram& d) {
    validate_diagram(d);
    std::ostringstream out;
    out << "digraph coral {\n";
    out << "  rankdir=BT;\n";
    out << "  n0 [label=\"root\", shape=box];\n";
    int next_id = 1;
    for (const CoralNode& top : d.tops) render_node(top, 0, next_id, out);
    out << "}\n";
    return out.str();
}

}  // namespace raneycore
