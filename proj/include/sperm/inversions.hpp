#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sperm/composition.hpp"

namespace sperm {

// A triple a < b < c violating one of the multiset conditions.
struct TripleViolation {
    enum class Kind { Transitivity, Planarity, Bound };
    Kind kind;
    int a = 0, b = 0, c = 0;
    std::string describe() const;
};

// Thrown when a multiset fails the conditions required to encode a tree.
class InvalidInversionSet : public std::runtime_error {
public:
    InvalidInversionSet(TripleViolation v)
        : std::runtime_error("invalid inversion multiset: " + v.describe()), violation(v) {}
    TripleViolation violation;
};

// Multiset of inversions (c,a), a < c, stored as a dense triangular table of
// cardinalities card(c,a).
class InversionMultiset {
public:
    explicit InversionMultiset(int n) : n_(n), card_(table_size(n), 0) {
        if (n < 1) throw std::invalid_argument("multiset size must be >= 1");
    }

    int size() const { return n_; }

    int card(int c, int a) const { return card_[index(c, a)]; }
    void set_card(int c, int a, int v) {
        if (v < 0) throw std::invalid_argument("cardinality must be non-negative");
        card_[index(c, a)] = v;
    }

    bool operator==(const InversionMultiset& o) const { return n_ == o.n_ && card_ == o.card_; }
    bool operator!=(const InversionMultiset& o) const { return !(*this == o); }

    // Pointwise card(c,a) <= o.card(c,a).
    bool included_in(const InversionMultiset& o) const;

    // card(c,a) <= s(c) for all pairs.
    bool fits_within(const WeakComposition& s) const;
    std::optional<TripleViolation> find_bound_violation(const WeakComposition& s) const;

    std::optional<TripleViolation> find_transitivity_violation() const;
    std::optional<TripleViolation> find_planarity_violation(const WeakComposition& s) const;

    static InversionMultiset max_inversion_set(const WeakComposition& s);

private:
    static size_t table_size(int n) { return static_cast<size_t>(n) * (n - 1) / 2; }
    size_t index(int c, int a) const {
        if (!(1 <= a && a < c && c <= n_))
            throw std::out_of_range("inversion pair out of range");
        return static_cast<size_t>(c - 1) * (c - 2) / 2 + (a - 1);
    }

    int n_;
    std::vector<int> card_;
};

// For all a < b < c: card(b,a) = 0 or card(c,a) >= card(c,b).
bool is_transitive(const InversionMultiset& inv);

// For all a < b < c: card(b,a) = s(b) or card(c,b) >= card(c,a).
// Requires inv to fit within the maximal inversion set of s.
bool is_planar(const InversionMultiset& inv, const WeakComposition& s);

// Smallest transitive multiset containing inv; computed by iterating the
// one-step rule card(c,a) <- max(card(c,a), card(c,b)) whenever card(b,a) > 0
// until a fixed point is reached.
InversionMultiset transitive_closure(const InversionMultiset& inv);

// Pointwise maximum. Throws on size mismatch.
InversionMultiset multiset_union(const InversionMultiset& lhs, const InversionMultiset& rhs);

} // namespace sperm
