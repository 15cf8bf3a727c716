#pragma once

#include <cstdint>
#include <vector>

#include "sperm/tree.hpp"

namespace sperm {

// A pair (a,c), a < c, marking a cover relation of the lattice; `value` holds
// card(c,a) at the source tree.
struct TreeAscent {
    int a = 0;
    int c = 0;
    int value = 0;

    bool operator==(const TreeAscent& o) const { return a == o.a && c == o.c; }
    bool operator<(const TreeAscent& o) const { return a != o.a ? a < o.a : c < o.c; }
};

// Order by inclusion of inversion multisets. Throws on composition mismatch.
bool leq(const SDecreasingTree& lhs, const SDecreasingTree& rhs);

// Least upper bound: transitive closure of the union of the inversion sets.
SDecreasingTree join(const SDecreasingTree& lhs, const SDecreasingTree& rhs);

// Greatest lower bound. Mirroring every node's slot order complements the
// inversion table against its maximum and reverses the order, so the meet is
// the mirror of the join of the mirrors.
SDecreasingTree meet(const SDecreasingTree& lhs, const SDecreasingTree& rhs);

// Tree-ascents via the structural conditions: a below c, not in c's right
// child, only right-child steps between a and c, and a's strict right child
// (when it exists) empty.
std::vector<TreeAscent> tree_ascents_structural(const SDecreasingTree& tree);

// The same set read off the inversion table alone.
std::vector<TreeAscent> tree_ascents_from_inversions(const SDecreasingTree& tree);

// Computes both routes and verifies they agree (throws std::logic_error on
// divergence). Sorted by (a,c).
std::vector<TreeAscent> tree_ascents(const SDecreasingTree& tree);

bool is_tree_ascent(const SDecreasingTree& tree, int a, int c);

// Increments card(c,a) and closes transitively; the result covers the input.
// Throws std::invalid_argument when (a,c) is not an ascent.
SDecreasingTree rotate(const SDecreasingTree& tree, const TreeAscent& ascent);

// Increments every selected pair at once, then closes. Equals the join of the
// single rotations.
SDecreasingTree add_ascents(const SDecreasingTree& tree, const std::vector<TreeAscent>& ascents);

struct HasseEdge {
    int from = 0;  // index of the lower tree
    int to = 0;    // index of the upper (covering) tree
    TreeAscent ascent;
};

// Vertices in canonical (serialization) order, edges sorted by
// (from, ascent.a, ascent.c).
struct HasseDiagram {
    WeakComposition s;
    std::vector<SDecreasingTree> vertices;
    std::vector<HasseEdge> edges;
};

HasseDiagram hasse_diagram(const WeakComposition& s, std::int64_t max_trees);

} // namespace sperm
