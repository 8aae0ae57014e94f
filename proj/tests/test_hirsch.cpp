#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxdim/hirsch.hpp"

#include <random>

using namespace boxdim;

namespace {

MarkedGroup make(const char* s) { return parse_group(s); }

HirschValue fin(long long v) { return {true, v}; }

// Uniform random finite-valued tree with `leaves` leaves; returns the tree
// and the sum of leaf ranks, which extension additivity says is its value.
ExtensionTree random_tree(std::mt19937& rng, int leaves, long long& rank_sum) {
    if (leaves == 1) {
        ExtensionTree t;
        if (rng() % 3 == 0) {
            t.kind = ExtensionTree::Kind::FiniteLeaf;
            t.order = 1 + rng() % 12;
        } else {
            t.kind = ExtensionTree::Kind::AbelianLeaf;
            t.free_rank = rng() % 4;
            if (rng() % 2) t.torsion = {2, static_cast<long long>(2 + rng() % 5)};
            rank_sum += t.free_rank;
        }
        return t;
    }
    ExtensionTree t;
    t.kind = ExtensionTree::Kind::Extension;
    int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves - 1));
    t.children.push_back(random_tree(rng, left, rank_sum));
    t.children.push_back(random_tree(rng, leaves - left, rank_sum));
    return t;
}

}  // namespace

TEST_CASE("grammar round-trips") {
    for (const char* s :
         {"ab(3)", "ab(0;2,4)", "fin(6)", "ext(ab(1),ab(2))",
          "ext(ext(ab(1),fin(2)),ab(0;3))", "union(ab(1),ab(2),ab(3))",
          "union(ab(1),ab(2),...)"}) {
        auto t = parse_tree(s);
        CHECK(parse_tree(tree_to_string(t)).children.size() == t.children.size());
        CHECK(hirsch_length(parse_tree(tree_to_string(t))) == hirsch_length(t));
    }
    CHECK(tree_to_string(parse_tree(" ext( ab( 1 ) , ab( 2 ) ) ")) ==
          tree_to_string(parse_tree("ext(ab(1),ab(2))")));
}

TEST_CASE("worked values") {
    CHECK(hirsch_length(parse_tree("ab(4)")) == fin(4));
    CHECK(hirsch_length(parse_tree("fin(120)")) == fin(0));
    CHECK(hirsch_length(parse_tree("ab(0;2,3,4)")) == fin(0));
    CHECK(hirsch_length(parse_tree("ext(ab(1),ab(2))")) == fin(3));
    CHECK(hirsch_length(parse_tree("ext(ab(2),ext(ab(1),fin(2)))")) == fin(3));
    CHECK(hirsch_length(parse_tree("union(ab(1),ab(3),ab(3))")) == fin(3));
}

TEST_CASE("monotone unbounded unions are infinite") {
    auto v = hirsch_length(parse_tree("union(ab(1),ab(2),ab(3),...)"));
    CHECK_FALSE(v.finite);
    // A chain that has stabilized stays finite.
    CHECK(hirsch_length(parse_tree("union(ab(1),ab(2),ab(2),...)")) == fin(2));
    // Without the monotone marker the supremum of the list is taken.
    CHECK(hirsch_length(parse_tree("union(ab(5),ab(2))")) == fin(5));
}

TEST_CASE("canonical trees of the built-in families") {
    CHECK(hirsch_of_builtin(make("z")) == 1);
    CHECK(hirsch_of_builtin(make("free_abelian(4)")) == 4);
    CHECK(hirsch_of_builtin(make("heisenberg3")) == 3);
    CHECK(hirsch_of_builtin(make("infinite_dihedral")) == 1);
    CHECK(hirsch_of_builtin(make("wreath_lamp(2)")) == 1);
    CHECK(hirsch_of_builtin(make("wreath_lamp(3)")) == 1);
    CHECK(hirsch_of_builtin(make("semidirect_znz(1,1,0,1)")) == 3);
    CHECK(hirsch_of_builtin(make("semidirect_znz(2,1,1,1)")) == 3);
    CHECK(hirsch_of_builtin(make("finite_cyclic(2,3,4)")) == 0);
    for (const char* s : {"z", "heisenberg3", "wreath_lamp(2)"}) {
        auto g = make(s);
        auto t = canonical_tree(g);
        CHECK_NOTHROW(t.check());
        CHECK(hirsch_length(t) == fin(hirsch_of_builtin(g)));
    }
}

TEST_CASE("additivity over extensions on random trees") {
    std::mt19937 rng(424242);
    for (int t = 0; t < 100; ++t) {
        long long rank_sum = 0;
        auto tree = random_tree(rng, 1 + static_cast<int>(rng() % 8), rank_sum);
        CHECK_NOTHROW(tree.check());
        CHECK(hirsch_length(tree) == fin(rank_sum));
        // Stacking two random trees into one extension adds their values.
        long long rs2 = 0;
        auto other = random_tree(rng, 1 + static_cast<int>(rng() % 8), rs2);
        ExtensionTree ext;
        ext.kind = ExtensionTree::Kind::Extension;
        ext.children = {tree, other};
        CHECK(hirsch_length(ext) == fin(rank_sum + rs2));
    }
}

TEST_CASE("invalid trees are rejected") {
    CHECK_THROWS_AS(parse_tree("ext(ab(1))"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("union()"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("ab(-1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("fin(0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("blah(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("ext(ab(1),ab(2)"), std::invalid_argument);
    ExtensionTree bad;
    bad.kind = ExtensionTree::Kind::Extension;
    bad.children.resize(1);
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);
}
