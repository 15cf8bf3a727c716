#pragma once

#include <string>
#include <vector>

#include "sperm/composition.hpp"
#include "sperm/inversions.hpp"

namespace sperm {

// A planar rooted tree with internal nodes labeled 1..n, where node i carries
// s(i)+1 ordered child slots and labels decrease from root to leaves. The
// root is always n. Immutable after construction.
class SDecreasingTree {
public:
    // children[i-1] lists the s(i)+1 slots of node i; 0 marks an empty slot.
    static SDecreasingTree from_structure(WeakComposition s, std::vector<std::vector<int>> children);

    // Reconstructs the unique tree with the given inversion multiset.
    // Throws InvalidInversionSet when the multiset is not planar, not
    // transitive, or exceeds the maximal inversion set of s.
    static SDecreasingTree from_inversions(const InversionMultiset& inv, const WeakComposition& s);

    // All nodes hang off the leftmost branch; inversion set is all-zero.
    static SDecreasingTree minimal_tree(const WeakComposition& s);
    // All nodes hang off the rightmost branch; inversion set is maximal.
    static SDecreasingTree maximal_tree(const WeakComposition& s);

    const WeakComposition& composition() const { return s_; }
    int size() const { return s_.length(); }
    int root() const { return s_.length(); }

    int num_slots(int node) const { return s_(node) + 1; }
    int child(int node, int slot) const { return children_[static_cast<size_t>(node) - 1][static_cast<size_t>(slot)]; }
    int parent(int node) const { return parent_[static_cast<size_t>(node) - 1]; }
    int parent_slot(int node) const { return parent_slot_[static_cast<size_t>(node) - 1]; }

    bool is_descendant(int a, int c) const;          // a strictly below c
    // a lies in a middle child T_i^b of b, 0 < i < s(b).
    bool is_middle_descendant(int a, int b) const;
    int card(int c, int a) const { return inv_.card(c, a); }
    const InversionMultiset& inversions() const { return inv_; }

    SDecreasingTree mirrored() const;  // reverses every node's slot order

    // Canonical bracket form, e.g. "3(2(1(),,),,)". Used for hashing,
    // ordering and serialization.
    const std::string& to_string() const { return serial_; }

    bool operator==(const SDecreasingTree& o) const {
        return s_ == o.s_ && children_ == o.children_;
    }
    bool operator!=(const SDecreasingTree& o) const { return !(*this == o); }
    bool operator<(const SDecreasingTree& o) const { return serial_ < o.serial_; }

private:
    SDecreasingTree(WeakComposition s, std::vector<std::vector<int>> children);
    void compute_derived();

    WeakComposition s_;
    std::vector<std::vector<int>> children_;
    std::vector<int> parent_, parent_slot_;
    InversionMultiset inv_;
    std::string serial_;
};

// Inversion multiset read off the tree: card(c,a) is the index of the child
// slot of c whose subtree contains a, 0 if a lies left of c, s(c) if right.
InversionMultiset tree_to_inversions(const SDecreasingTree& tree);

} // namespace sperm
