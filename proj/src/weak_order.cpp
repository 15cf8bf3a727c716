#include "sperm/weak_order.hpp"

#include <algorithm>
#include <unordered_map>

#include "sperm/enumeration.hpp"

namespace sperm {

namespace {

void require_same_composition(const SDecreasingTree& lhs, const SDecreasingTree& rhs) {
    if (lhs.composition() != rhs.composition())
        throw std::invalid_argument("trees belong to different compositions");
}

} // namespace

bool leq(const SDecreasingTree& lhs, const SDecreasingTree& rhs) {
    require_same_composition(lhs, rhs);
    return lhs.inversions().included_in(rhs.inversions());
}

SDecreasingTree join(const SDecreasingTree& lhs, const SDecreasingTree& rhs) {
    require_same_composition(lhs, rhs);
    InversionMultiset merged = transitive_closure(multiset_union(lhs.inversions(), rhs.inversions()));
    return SDecreasingTree::from_inversions(merged, lhs.composition());
}

SDecreasingTree meet(const SDecreasingTree& lhs, const SDecreasingTree& rhs) {
    require_same_composition(lhs, rhs);
    return join(lhs.mirrored(), rhs.mirrored()).mirrored();
}

std::vector<TreeAscent> tree_ascents_structural(const SDecreasingTree& tree) {
    const int n = tree.size();
    const auto& s = tree.composition();
    std::vector<TreeAscent> out;
    for (int a = 1; a <= n; ++a)
        for (int c = a + 1; c <= n; ++c) {
            if (!tree.is_descendant(a, c)) continue;
            if (tree.card(c, a) == s(c)) continue;  // a in the right child of c
            bool ok = true;
            // every strictly smaller ancestor of a below c must hold a in its right child
            for (int b = tree.parent(a); ok && b != c; b = tree.parent(b))
                if (tree.card(b, a) != s(b)) ok = false;
            if (!ok) continue;
            if (s(a) > 0 && tree.child(a, s(a)) != 0) continue;  // strict right child not empty
            out.push_back(TreeAscent{a, c, tree.card(c, a)});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TreeAscent> tree_ascents_from_inversions(const SDecreasingTree& tree) {
    const int n = tree.size();
    const auto& s = tree.composition();
    const auto& inv = tree.inversions();
    std::vector<TreeAscent> out;
    for (int a = 1; a <= n; ++a)
        for (int c = a + 1; c <= n; ++c) {
            bool ok = true;
            for (int d = c + 1; ok && d <= n; ++d)
                if (inv.card(d, c) != inv.card(d, a)) ok = false;
            if (!ok) continue;
            if (inv.card(c, a) >= s(c)) continue;
            for (int b = a + 1; ok && b < c; ++b)
                if (inv.card(c, b) == inv.card(c, a) && inv.card(b, a) != s(b)) ok = false;
            if (!ok) continue;
            if (s(a) > 0)
                for (int d = 1; ok && d < a; ++d)
                    if (inv.card(a, d) == s(a) && inv.card(c, d) <= inv.card(c, a)) ok = false;
            if (!ok) continue;
            out.push_back(TreeAscent{a, c, inv.card(c, a)});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TreeAscent> tree_ascents(const SDecreasingTree& tree) {
    std::vector<TreeAscent> structural = tree_ascents_structural(tree);
    std::vector<TreeAscent> from_inv = tree_ascents_from_inversions(tree);
    if (structural != from_inv)
        throw std::logic_error("ascent computations disagree on " + tree.to_string());
    return structural;
}

bool is_tree_ascent(const SDecreasingTree& tree, int a, int c) {
    auto ascents = tree_ascents(tree);
    return std::find(ascents.begin(), ascents.end(), TreeAscent{a, c, 0}) != ascents.end();
}

SDecreasingTree rotate(const SDecreasingTree& tree, const TreeAscent& ascent) {
    if (!is_tree_ascent(tree, ascent.a, ascent.c))
        throw std::invalid_argument("(" + std::to_string(ascent.a) + "," + std::to_string(ascent.c) +
                                    ") is not a tree-ascent of " + tree.to_string());
    InversionMultiset inv = tree.inversions();
    inv.set_card(ascent.c, ascent.a, inv.card(ascent.c, ascent.a) + 1);
    return SDecreasingTree::from_inversions(transitive_closure(inv), tree.composition());
}

SDecreasingTree add_ascents(const SDecreasingTree& tree, const std::vector<TreeAscent>& ascents) {
    auto valid = tree_ascents(tree);
    InversionMultiset inv = tree.inversions();
    for (const TreeAscent& asc : ascents) {
        if (std::find(valid.begin(), valid.end(), asc) == valid.end())
            throw std::invalid_argument("(" + std::to_string(asc.a) + "," + std::to_string(asc.c) +
                                        ") is not a tree-ascent of " + tree.to_string());
        inv.set_card(asc.c, asc.a, tree.card(asc.c, asc.a) + 1);
    }
    return SDecreasingTree::from_inversions(transitive_closure(inv), tree.composition());
}

HasseDiagram hasse_diagram(const WeakComposition& s, std::int64_t max_trees) {
    HasseDiagram out{s, enumerate_trees(s, max_trees), {}};
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i)
        index.emplace(out.vertices[static_cast<size_t>(i)].to_string(), i);
    for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i)
        for (const TreeAscent& asc : tree_ascents(out.vertices[static_cast<size_t>(i)])) {
            SDecreasingTree upper = rotate(out.vertices[static_cast<size_t>(i)], asc);
            out.edges.push_back(HasseEdge{i, index.at(upper.to_string()), asc});
        }
    return out;
}

} // namespace sperm
