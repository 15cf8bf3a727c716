#include "sperm/tree.hpp"

#include <algorithm>

namespace sperm {

SDecreasingTree::SDecreasingTree(WeakComposition s, std::vector<std::vector<int>> children)
    : s_(std::move(s)), children_(std::move(children)), inv_(s_.length()) {
    compute_derived();
}

SDecreasingTree SDecreasingTree::from_structure(WeakComposition s, std::vector<std::vector<int>> children) {
    const int n = s.length();
    if (static_cast<int>(children.size()) != n)
        throw std::invalid_argument("children table must have one row per node");
    std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
    for (int node = 1; node <= n; ++node) {
        const auto& slots = children[static_cast<size_t>(node) - 1];
        if (static_cast<int>(slots.size()) != s(node) + 1)
            throw std::invalid_argument("node " + std::to_string(node) + " must have s+1 child slots");
        for (int c : slots) {
            if (c == 0) continue;
            if (c < 1 || c > n) throw std::invalid_argument("child label out of range");
            if (c >= node) throw std::invalid_argument("child labels must be smaller than their parent");
            if (seen[static_cast<size_t>(c)]++) throw std::invalid_argument("label used twice");
        }
    }
    for (int node = 1; node < n; ++node)
        if (!seen[static_cast<size_t>(node)])
            throw std::invalid_argument("node " + std::to_string(node) + " is not attached");
    if (seen[static_cast<size_t>(n)]) throw std::invalid_argument("root must be the largest label");
    return SDecreasingTree(std::move(s), std::move(children));
}

void SDecreasingTree::compute_derived() {
    const int n = s_.length();
    parent_.assign(static_cast<size_t>(n), 0);
    parent_slot_.assign(static_cast<size_t>(n), 0);
    for (int node = 1; node <= n; ++node)
        for (int slot = 0; slot < num_slots(node); ++slot)
            if (int c = child(node, slot); c != 0) {
                parent_[static_cast<size_t>(c) - 1] = node;
                parent_slot_[static_cast<size_t>(c) - 1] = slot;
            }

    // card(c,a): slot of c containing a when a is below c, otherwise decided
    // at the lowest common ancestor (left of c -> 0, right of c -> s(c)).
    for (int a = 1; a <= n; ++a) {
        // slot_below[x] = slot of x whose subtree contains a, for ancestors x of a
        std::vector<int> slot_below(static_cast<size_t>(n) + 1, -1);
        for (int x = a; x != n;) {
            int p = parent_[static_cast<size_t>(x) - 1];
            slot_below[static_cast<size_t>(p)] = parent_slot_[static_cast<size_t>(x) - 1];
            x = p;
        }
        for (int c = a + 1; c <= n; ++c) {
            if (slot_below[static_cast<size_t>(c)] >= 0) {
                inv_.set_card(c, a, slot_below[static_cast<size_t>(c)]);
                continue;
            }
            // walk up from c until hitting an ancestor of a
            int x = c, lca = -1, slot_c = -1;
            while (true) {
                int p = parent_[static_cast<size_t>(x) - 1];
                if (slot_below[static_cast<size_t>(p)] >= 0) {
                    lca = p;
                    slot_c = parent_slot_[static_cast<size_t>(x) - 1];
                    break;
                }
                x = p;
            }
            const int slot_a = slot_below[static_cast<size_t>(lca)];
            inv_.set_card(c, a, slot_a < slot_c ? 0 : s_(c));
        }
    }

    std::string out;
    // iterative serialization would be noise; trees are tiny
    auto emit = [&](auto&& self, int node) -> void {
        out += std::to_string(node);
        out += '(';
        for (int slot = 0; slot < num_slots(node); ++slot) {
            if (slot) out += ',';
            if (int c = child(node, slot); c != 0) self(self, c);
        }
        out += ')';
    };
    emit(emit, root());
    serial_ = std::move(out);
}

bool SDecreasingTree::is_descendant(int a, int c) const {
    if (a >= c) return false;
    for (int x = a; x != root();) {
        x = parent(x);
        if (x == c) return true;
        if (x > c) return false; // labels increase along the chain
    }
    return false;
}

bool SDecreasingTree::is_middle_descendant(int a, int b) const {
    if (!is_descendant(a, b)) return false;
    const int slot = inv_.card(b, a);
    return 0 < slot && slot < s_(b);
}

SDecreasingTree SDecreasingTree::mirrored() const {
    std::vector<std::vector<int>> rev = children_;
    for (auto& slots : rev) std::reverse(slots.begin(), slots.end());
    return SDecreasingTree(s_, std::move(rev));
}

SDecreasingTree SDecreasingTree::minimal_tree(const WeakComposition& s) {
    const int n = s.length();
    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    for (int node = 1; node <= n; ++node) {
        children[static_cast<size_t>(node) - 1].assign(static_cast<size_t>(s(node)) + 1, 0);
        if (node > 1) children[static_cast<size_t>(node) - 1][0] = node - 1;
    }
    return SDecreasingTree(s, std::move(children));
}

SDecreasingTree SDecreasingTree::maximal_tree(const WeakComposition& s) {
    const int n = s.length();
    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    for (int node = 1; node <= n; ++node) {
        children[static_cast<size_t>(node) - 1].assign(static_cast<size_t>(s(node)) + 1, 0);
        if (node > 1) children[static_cast<size_t>(node) - 1].back() = node - 1;
    }
    return SDecreasingTree(s, std::move(children));
}

SDecreasingTree SDecreasingTree::from_inversions(const InversionMultiset& inv, const WeakComposition& s) {
    if (inv.size() != s.length()) throw std::invalid_argument("composition length mismatch");
    if (auto v = inv.find_bound_violation(s)) throw InvalidInversionSet(*v);
    if (auto v = inv.find_transitivity_violation()) throw InvalidInversionSet(*v);
    if (auto v = inv.find_planarity_violation(s)) throw InvalidInversionSet(*v);

    const int n = s.length();
    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    for (int node = 1; node <= n; ++node)
        children[static_cast<size_t>(node) - 1].assign(static_cast<size_t>(s(node)) + 1, 0);

    // Insert nodes n-1, ..., 1. Each node walks down from the root: at node c
    // it belongs in slot card(c,a); an occupied slot sends it into the
    // occupying subtree.
    for (int a = n - 1; a >= 1; --a) {
        int c = n;
        while (true) {
            const int slot = inv.card(c, a);
            int& cell = children[static_cast<size_t>(c) - 1][static_cast<size_t>(slot)];
            if (cell == 0) {
                cell = a;
                break;
            }
            c = cell;
        }
    }

    SDecreasingTree tree(s, std::move(children));
    if (tree.inversions() != inv)
        throw std::logic_error("inversion reconstruction mismatch");
    return tree;
}

InversionMultiset tree_to_inversions(const SDecreasingTree& tree) {
    return tree.inversions();
}

} // namespace sperm
