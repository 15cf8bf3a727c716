#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sperm/sweeps.hpp"
#include "sperm/weak_order.hpp"

using namespace sperm;
using namespace sperm::testing;

namespace {

// brute-force least upper bound over the enumerated lattice
const SDecreasingTree* brute_join(const std::vector<SDecreasingTree>& all,
                                  const SDecreasingTree& x, const SDecreasingTree& y) {
    const SDecreasingTree* best = nullptr;
    for (const SDecreasingTree& z : all) {
        if (!(leq(x, z) && leq(y, z))) continue;
        if (best == nullptr || leq(z, *best)) best = &z;
    }
    for (const SDecreasingTree& z : all)
        if (leq(x, z) && leq(y, z) && !leq(*best, z)) return nullptr;
    return best;
}

const SDecreasingTree* brute_meet(const std::vector<SDecreasingTree>& all,
                                  const SDecreasingTree& x, const SDecreasingTree& y) {
    const SDecreasingTree* best = nullptr;
    for (const SDecreasingTree& z : all) {
        if (!(leq(z, x) && leq(z, y))) continue;
        if (best == nullptr || leq(*best, z)) best = &z;
    }
    for (const SDecreasingTree& z : all)
        if (leq(z, x) && leq(z, y) && !leq(z, *best)) return nullptr;
    return best;
}

} // namespace

TEST_SUITE_BEGIN("weak order");

TEST_CASE("comparison is a partial order") {
    for (const WeakComposition& s : {WeakComposition{0, 2, 2}, WeakComposition{0, 1, 1, 2}}) {
        const auto trees = enumerate_trees(s, 100000);
        const SDecreasingTree minimal = SDecreasingTree::minimal_tree(s);
        const SDecreasingTree maximal = SDecreasingTree::maximal_tree(s);
        for (const auto& t : trees) {
            CHECK(leq(t, t));
            CHECK(leq(minimal, t));
            CHECK(leq(t, maximal));
        }
        for (const auto& a : trees)
            for (const auto& b : trees) {
                if (leq(a, b) && leq(b, a)) CHECK(a == b);
                for (const auto& c : trees)
                    if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
            }
    }
    CHECK_THROWS_AS(leq(SDecreasingTree::minimal_tree(WeakComposition{0, 2}),
                        SDecreasingTree::minimal_tree(WeakComposition{0, 3})),
                    std::invalid_argument);
}

TEST_CASE("join of a worked pair") {
    const WeakComposition s{0, 2, 2};
    InversionMultiset left(3);
    left.set_card(3, 2, 2);
    InversionMultiset right(3);
    right.set_card(2, 1, 1);
    const SDecreasingTree t = SDecreasingTree::from_inversions(left, s);
    const SDecreasingTree r = SDecreasingTree::from_inversions(right, s);
    const SDecreasingTree joined = join(t, r);
    CHECK(joined.card(3, 2) == 2);
    CHECK(joined.card(3, 1) == 2);
    CHECK(joined.card(2, 1) == 1);
    CHECK(join(t, t) == t);
}

TEST_CASE("join and meet match the enumerated-lattice oracles") {
    for (const WeakComposition& s : sweeps::core()) {
        const auto trees = enumerate_trees(s, 100000);
        if (trees.size() > 130) continue;  // the larger members run in the acceptance suite
        for (const auto& x : trees)
            for (const auto& y : trees) {
                const SDecreasingTree* expected_join = brute_join(trees, x, y);
                REQUIRE(expected_join != nullptr);
                CHECK(join(x, y) == *expected_join);
                const SDecreasingTree* expected_meet = brute_meet(trees, x, y);
                REQUIRE(expected_meet != nullptr);
                CHECK(meet(x, y) == *expected_meet);
            }
    }
}

TEST_CASE("lattice absorption and meet with the bottom") {
    const WeakComposition s{0, 1, 2};
    const auto trees = enumerate_trees(s, 100000);
    const SDecreasingTree bottom = SDecreasingTree::minimal_tree(s);
    for (const auto& x : trees) {
        CHECK(meet(x, x) == x);
        CHECK(meet(bottom, x) == bottom);
        for (const auto& y : trees) {
            CHECK(join(x, meet(x, y)) == x);
            CHECK(meet(x, join(x, y)) == x);
        }
    }
}

TEST_CASE("ascents of the pentagon example tree") {
    const SDecreasingTree lower = pentagon_lower();
    const std::vector<TreeAscent> ascents = tree_ascents(lower);
    REQUIRE(ascents.size() == 3);
    CHECK(ascents[0] == TreeAscent{1, 2, 0});
    CHECK(ascents[1] == TreeAscent{2, 3, 0});
    CHECK(ascents[2] == TreeAscent{3, 4, 0});
    CHECK(ascents[1].value == 1);  // card(3,2) at the source
    CHECK(ascents[2].value == 0);  // card(4,3)
}

TEST_CASE("ascents of the ten-node example tree") {
    const std::vector<TreeAscent> ascents = tree_ascents(ten_node_lower());
    std::vector<std::pair<int, int>> pairs;
    for (const TreeAscent& a : ascents) pairs.emplace_back(a.a, a.c);
    CHECK(pairs == std::vector<std::pair<int, int>>{
                       {1, 4}, {2, 6}, {3, 4}, {4, 9}, {5, 10}, {6, 9}, {8, 10}, {9, 10}});
}

TEST_CASE("the maximal tree has no ascents") {
    for (const WeakComposition& s : sweeps::core())
        CHECK(tree_ascents(SDecreasingTree::maximal_tree(s)).empty());
}

TEST_CASE("structural and inversion ascent computations agree everywhere") {
    for (const WeakComposition& s : sweeps::core())
        for (const SDecreasingTree& tree : enumerate_trees(s, 100000))
            CHECK(tree_ascents_structural(tree) == tree_ascents_from_inversions(tree));
}

TEST_CASE("rotation at (2,3) of the pentagon tree bumps (3,1) transitively") {
    const SDecreasingTree lower = pentagon_lower();
    const SDecreasingTree rotated = rotate(lower, TreeAscent{2, 3, 1});
    CHECK(rotated.card(3, 2) == lower.card(3, 2) + 1);
    CHECK(rotated.card(3, 1) == lower.card(3, 1) + 1);  // raised by closure
    CHECK(rotated.card(2, 1) == lower.card(2, 1));
    CHECK(rotated.card(4, 3) == lower.card(4, 3));
    CHECK_THROWS_AS(rotate(lower, TreeAscent{1, 4, 0}), std::invalid_argument);
}

TEST_CASE("rotations are exactly the covers") {
    for (const WeakComposition& s :
         {WeakComposition{0, 2, 2}, WeakComposition{0, 0, 2}, WeakComposition{0, 1, 1, 2}}) {
        const auto trees = enumerate_trees(s, 100000);
        for (const auto& t : trees) {
            std::set<std::string> rotated;
            for (const TreeAscent& asc : tree_ascents(t))
                rotated.insert(rotate(t, asc).to_string());

            std::set<std::string> covers;
            for (const auto& upper : trees) {
                if (upper == t || !leq(t, upper)) continue;
                bool is_cover = true;
                for (const auto& mid : trees)
                    if (!(mid == t) && !(mid == upper) && leq(t, mid) && leq(mid, upper))
                        is_cover = false;
                if (is_cover) covers.insert(upper.to_string());
            }
            CHECK(rotated == covers);
        }
    }
}

TEST_CASE("adding a set of ascents equals the join of the single rotations") {
    for (const WeakComposition& s : {WeakComposition{0, 1, 2}, WeakComposition{0, 2, 2}}) {
        for (const SDecreasingTree& tree : enumerate_trees(s, 100000)) {
            const std::vector<TreeAscent> ascents = tree_ascents(tree);
            for (std::uint64_t mask = 0; mask < (1ull << ascents.size()); ++mask) {
                std::vector<TreeAscent> chosen;
                for (size_t i = 0; i < ascents.size(); ++i)
                    if (mask & (1ull << i)) chosen.push_back(ascents[i]);
                if (chosen.empty()) {
                    CHECK(add_ascents(tree, chosen) == tree);
                    continue;
                }
                SDecreasingTree folded = rotate(tree, chosen[0]);
                for (size_t i = 1; i < chosen.size(); ++i)
                    folded = join(folded, rotate(tree, chosen[i]));
                CHECK(add_ascents(tree, chosen) == folded);
            }
        }
    }
    CHECK_THROWS_AS(add_ascents(pentagon_lower(), {TreeAscent{1, 3, 0}}), std::invalid_argument);
}

TEST_CASE("pentagon interval top carries the transitive bump on (4,1)") {
    const SDecreasingTree lower = pentagon_lower();
    const SDecreasingTree upper = add_ascents(lower, {TreeAscent{2, 3, 1}, TreeAscent{3, 4, 0}});
    CHECK(upper.card(3, 2) == 2);
    CHECK(upper.card(3, 1) == 2);
    CHECK(upper.card(4, 3) == 1);
    CHECK(upper.card(4, 2) == 1);
    CHECK(upper.card(4, 1) == 1);  // raised by transitivity
    CHECK(upper.card(2, 1) == 1);
}

TEST_CASE("hasse diagrams match the published counts") {
    const HasseDiagram h022 = hasse_diagram(WeakComposition{0, 2, 2}, 100000);
    CHECK(h022.vertices.size() == 15);
    CHECK(h022.edges.size() == 20);

    const HasseDiagram h002 = hasse_diagram(WeakComposition{0, 0, 2}, 100000);
    CHECK(h002.vertices.size() == 9);
    CHECK(h002.edges.size() == 12);

    const HasseDiagram chain = hasse_diagram(WeakComposition{3, 4}, 100000);
    CHECK(chain.vertices.size() == 5);
    CHECK(chain.edges.size() == 4);
}

TEST_SUITE_END();
