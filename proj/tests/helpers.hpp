#pragma once

#include <random>

#include "sperm/enumeration.hpp"
#include "sperm/tree.hpp"

namespace sperm::testing {

// Worked example: s = (0,0,2,1,3), node 5 at the root with children
// (4, -, 3, -), and 2 hanging in the last slot of 3 above 1.
inline SDecreasingTree example_tree_5() {
    return SDecreasingTree::from_structure(WeakComposition{0, 0, 2, 1, 3},
                                           {{0}, {1}, {0, 0, 2}, {0, 0}, {4, 0, 3, 0}});
}

// Pentagon interval: s = (0,2,2,1); ascent subset {(2,3),(3,4)}.
inline SDecreasingTree pentagon_lower() {
    return SDecreasingTree::from_structure(WeakComposition{0, 2, 2, 1},
                                           {{0}, {0, 1, 0}, {0, 2, 0}, {3, 0}});
}

// Ten-node interval with seven selected ascents.
inline SDecreasingTree ten_node_lower() {
    return SDecreasingTree::from_structure(
        WeakComposition{0, 0, 2, 2, 1, 2, 1, 0, 2, 3},
        {{0}, {0}, {0, 0, 0}, {1, 3, 0}, {0, 0}, {0, 2, 0}, {0, 4}, {5}, {7, 6, 0}, {8, 0, 9, 0}});
}

// A +1-interval that is not a pure interval; s = (0,0,2,2,2).
inline SDecreasingTree non_pure_lower() {
    return SDecreasingTree::from_structure(WeakComposition{0, 0, 2, 2, 2},
                                           {{0}, {0}, {2, 1, 0}, {3, 0, 0}, {4, 0, 0}});
}
inline SDecreasingTree non_pure_upper() {
    return SDecreasingTree::from_structure(WeakComposition{0, 0, 2, 2, 2},
                                           {{0}, {0}, {0, 0, 0}, {3, 1, 0}, {2, 4, 0}});
}

inline InversionMultiset random_multiset(std::mt19937& rng, int n, int max_value) {
    InversionMultiset inv(n);
    std::uniform_int_distribution<int> dist(0, max_value);
    for (int c = 2; c <= n; ++c)
        for (int a = 1; a < c; ++a) inv.set_card(c, a, dist(rng));
    return inv;
}

// Independent closure oracle: the largest first-step cardinality over all
// strictly decreasing chains with positive steps.
inline InversionMultiset closure_by_paths(const InversionMultiset& inv) {
    const int n = inv.size();
    InversionMultiset out(n);
    for (int c = 2; c <= n; ++c)
        for (int a = 1; a < c; ++a) {
            int best = inv.card(c, a);
            // depth-first over chains c > b_2 > ... > a
            std::vector<std::pair<int, int>> stack;  // (current node, first-step value)
            for (int b = a + 1; b < c; ++b)
                if (inv.card(c, b) > 0) stack.emplace_back(b, inv.card(c, b));
            while (!stack.empty()) {
                auto [node, first] = stack.back();
                stack.pop_back();
                if (inv.card(node, a) > 0) best = std::max(best, first);
                for (int b = a + 1; b < node; ++b)
                    if (inv.card(node, b) > 0) stack.emplace_back(b, first);
            }
            out.set_card(c, a, best);
        }
    return out;
}

} // namespace sperm::testing
