#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include "raneycore/coral.hpp"
#include "raneycore/numbers.hpp"

using namespace raneycore;

namespace {

// canonical text form for structural-distinctness checks
void encode(const CoralNode& node, std::ostream& out) {
    if (node.is_leaf()) {
        out << "*";
        return;
    }
    out << "(";
    for (const CoralNode& child : node.children) encode(child, out);
    out << ")";
}

std::string encode(const CoralDiagram& d) {
    std::ostringstream out;
    out << d.p << ":";
    for (const CoralNode& top : d.tops) encode(top, out);
    return out.str();
}

CoralDiagram bare_star(int p, int r) { return CoralDiagram{p, std::vector<CoralNode>(r)}; }

}  // namespace

TEST_CASE("bare stars") {
    for (int p = 1; p <= 3; ++p) {
        for (int r = 0; r <= 3; ++r) {
            const auto diagrams = all_coral(p, r, 0);
            REQUIRE(diagrams.size() == 1);
            CHECK(diagrams[0] == bare_star(p, r));
            CHECK(star_count(diagrams[0]) == 0);
        }
    }
}

TEST_CASE("enumeration counts match count_coral and raney") {
    for (int p = 1; p <= 3; ++p) {
        for (int r = 0; r <= 3; ++r) {
            for (int k = 0; k <= 4; ++k) {
                std::set<std::string> seen;
                long long n = 0;
                enumerate_coral(p, r, k, [&](const CoralDiagram& d) {
                    CHECK(d.p == p);
                    CHECK(d.root_arity() == r);
                    CHECK(star_count(d) == k);
                    seen.insert(encode(d));
                    ++n;
                });
                CHECK(Natural(n) == count_coral(p, r, k));
                CHECK(Natural(n) == raney(p, r, k));
                CHECK(static_cast<long long>(seen.size()) == n);  // no duplicates
            }
        }
    }
}

TEST_CASE("count_coral spot values") {
    CHECK(count_coral(2, 3, 3) == 28);
    CHECK(count_coral(2, 1, 3) == 5);
    CHECK(count_coral(2, 1, 2) == 2);
    CHECK(count_coral(3, 2, 2) == 7);
    for (int p = 1; p <= 3; ++p)
        for (int k = 1; k <= 4; ++k) CHECK(count_coral(p, 0, k) == 0);
    CHECK_THROWS_AS(count_coral(0, 1, 1), std::invalid_argument);
}

TEST_CASE("split_at_root examples") {
    {
        const auto [d1, d2] = split_at_root(bare_star(2, 3));
        CHECK(d1 == bare_star(2, 1));
        CHECK(d2 == bare_star(2, 2));
    }
    {
        // all stars on the leftmost branch
        CoralDiagram d = bare_star(2, 3);
        d.tops[0] = CoralNode{{CoralNode{{CoralNode{}, CoralNode{}}}, CoralNode{}}};
        const auto [d1, d2] = split_at_root(d);
        CHECK(star_count(d1) == 2);
        CHECK(d2 == bare_star(2, 2));
        CHECK(join_at_root(d1, d2) == d);
    }
    CHECK_THROWS_AS(split_at_root(bare_star(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(split_at_root(bare_star(2, 0)), std::invalid_argument);
}

TEST_CASE("split/join bijection, exhaustive") {
    for (int p = 1; p <= 3; ++p) {
        for (int r = 2; r <= 3; ++r) {
            for (int k = 0; k <= 3; ++k) {
                // join after split restores the diagram
                long long total = 0;
                enumerate_coral(p, r, k, [&](const CoralDiagram& d) {
                    const auto [d1, d2] = split_at_root(d);
                    CHECK(d1.root_arity() == 1);
                    CHECK(d2.root_arity() == r - 1);
                    CHECK(star_count(d1) + star_count(d2) == k);
                    CHECK(join_at_root(d1, d2) == d);
                    ++total;
                });
                // split after join restores the pair, and the counts convolve
                long long paired = 0;
                for (int i = 0; i <= k; ++i) {
                    for (const auto& d1 : all_coral(p, 1, i)) {
                        for (const auto& d2 : all_coral(p, r - 1, k - i)) {
                            const CoralDiagram joined = join_at_root(d1, d2);
                            const auto [back1, back2] = split_at_root(joined);
                            CHECK(back1 == d1);
                            CHECK(back2 == d2);
                            ++paired;
                        }
                    }
                }
                CHECK(paired == total);
            }
        }
    }
}

TEST_CASE("contract_root_star examples") {
    {
        CoralDiagram d = bare_star(3, 1);
        d.tops[0] = CoralNode{{CoralNode{}, CoralNode{}, CoralNode{}}};
        CHECK(contract_root_star(d) == bare_star(3, 3));
        CHECK(expand_root_star(bare_star(3, 3)) == d);
    }
    CHECK_THROWS_AS(contract_root_star(bare_star(3, 1)), std::invalid_argument);  // k = 0
    CHECK_THROWS_AS(contract_root_star(bare_star(3, 2)), std::invalid_argument);  // r != 1
    CHECK_THROWS_AS(expand_root_star(bare_star(3, 2)), std::invalid_argument);    // r != p
}

TEST_CASE("contract/expand bijection, exhaustive") {
    for (int p = 1; p <= 3; ++p) {
        for (int k = 1; k <= 3; ++k) {
            long long from_single = 0;
            enumerate_coral(p, 1, k, [&](const CoralDiagram& d) {
                const CoralDiagram contracted = contract_root_star(d);
                CHECK(contracted.root_arity() == p);
                CHECK(star_count(contracted) == k - 1);
                CHECK(expand_root_star(contracted) == d);
                ++from_single;
            });
            long long from_wide = 0;
            enumerate_coral(p, p, k - 1, [&](const CoralDiagram& d) {
                const CoralDiagram expanded = expand_root_star(d);
                CHECK(expanded.root_arity() == 1);
                CHECK(star_count(expanded) == k);
                CHECK(contract_root_star(expanded) == d);
                ++from_wide;
            });
            CHECK(from_single == from_wide);
        }
    }
}

TEST_CASE("coral DOT export") {
    CoralDiagram d = bare_star(2, 1);
    d.tops[0] = CoralNode{{CoralNode{}, CoralNode{}}};
    const std::string dot = coral_to_dot(d);
    CHECK(dot.starts_with("digraph coral {"));
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("n0 [label=\"root\", shape=box];") != std::string::npos);
    CHECK(dot.find("style=filled") != std::string::npos);
    CHECK(dot.find("n0 -> n1;") != std::string::npos);
    CHECK(dot.find("n1 -> n2;") != std::string::npos);
    CHECK(dot.find("n1 -> n3;") != std::string::npos);
    CHECK(dot.ends_with("}\n"));
}

TEST_CASE("malformed diagrams are rejected") {
    // internal vertex with one child while p = 2
    const CoralNode bad_top{{CoralNode{}}};
    CHECK_THROWS_AS(split_at_root(CoralDiagram{2, {bad_top, CoralNode{}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(contract_root_star(CoralDiagram{2, {bad_top}}), std::invalid_argument);
    CHECK_THROWS_AS(coral_to_dot(CoralDiagram{2, {bad_top}}), std::invalid_argument);
}
