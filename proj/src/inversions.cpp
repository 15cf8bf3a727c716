#include "sperm/inversions.hpp"

namespace sperm {

std::string TripleViolation::describe() const {
    switch (kind) {
        case Kind::Transitivity:
            return "transitivity fails on (" + std::to_string(a) + "," + std::to_string(b) +
                   "," + std::to_string(c) + "): card(" + std::to_string(b) + "," +
                   std::to_string(a) + ") > 0 but card(" + std::to_string(c) + "," +
                   std::to_string(a) + ") < card(" + std::to_string(c) + "," + std::to_string(b) + ")";
        case Kind::Planarity:
            return "planarity fails on (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + "): card(" + std::to_string(b) + "," + std::to_string(a) +
                   ") < s(" + std::to_string(b) + ") and card(" + std::to_string(c) + "," +
                   std::to_string(b) + ") < card(" + std::to_string(c) + "," + std::to_string(a) + ")";
        case Kind::Bound:
            return "card(" + std::to_string(c) + "," + std::to_string(a) + ") exceeds s(" +
                   std::to_string(c) + ")";
    }
    return "unknown violation";
}

bool InversionMultiset::included_in(const InversionMultiset& o) const {
    if (n_ != o.n_) throw std::invalid_argument("multiset size mismatch");
    for (size_t i = 0; i < card_.size(); ++i)
        if (card_[i] > o.card_[i]) return false;
    return true;
}

bool InversionMultiset::fits_within(const WeakComposition& s) const {
    return !find_bound_violation(s).has_value();
}

std::optional<TripleViolation> InversionMultiset::find_bound_violation(const WeakComposition& s) const {
    if (s.length() != n_) throw std::invalid_argument("composition length mismatch");
    for (int c = 2; c <= n_; ++c)
        for (int a = 1; a < c; ++a)
            if (card(c, a) > s(c))
                return TripleViolation{TripleViolation::Kind::Bound, a, 0, c};
    return std::nullopt;
}

std::optional<TripleViolation> InversionMultiset::find_transitivity_violation() const {
    for (int c = 3; c <= n_; ++c)
        for (int b = 2; b < c; ++b)
            for (int a = 1; a < b; ++a)
                if (card(b, a) > 0 && card(c, a) < card(c, b))
                    return TripleViolation{TripleViolation::Kind::Transitivity, a, b, c};
    return std::nullopt;
}

std::optional<TripleViolation> InversionMultiset::find_planarity_violation(const WeakComposition& s) const {
    if (s.length() != n_) throw std::invalid_argument("composition length mismatch");
    for (int c = 3; c <= n_; ++c)
        for (int b = 2; b < c; ++b)
            for (int a = 1; a < b; ++a)
                if (card(b, a) != s(b) && card(c, b) < card(c, a))
                    return TripleViolation{TripleViolation::Kind::Planarity, a, b, c};
    return std::nullopt;
}

InversionMultiset InversionMultiset::max_inversion_set(const WeakComposition& s) {
    InversionMultiset inv(s.length());
    for (int c = 2; c <= s.length(); ++c)
        for (int a = 1; a < c; ++a)
            inv.set_card(c, a, s(c));
    return inv;
}

bool is_transitive(const InversionMultiset& inv) {
    return !inv.find_transitivity_violation().has_value();
}

bool is_planar(const InversionMultiset& inv, const WeakComposition& s) {
    return !inv.find_planarity_violation(s).has_value();
}

InversionMultiset transitive_closure(const InversionMultiset& inv) {
    InversionMultiset out = inv;
    const int n = out.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 3; c <= n; ++c)
            for (int b = 2; b < c; ++b) {
                const int cb = out.card(c, b);
                if (cb == 0) continue;
                for (int a = 1; a < b; ++a)
                    if (out.card(b, a) > 0 && out.card(c, a) < cb) {
                        out.set_card(c, a, cb);
                        changed = true;
                    }
            }
    }
    return out;
}

InversionMultiset multiset_union(const InversionMultiset& lhs, const InversionMultiset& rhs) {
    if (lhs.size() != rhs.size()) throw std::invalid_argument("multiset size mismatch");
    InversionMultiset out(lhs.size());
    for (int c = 2; c <= lhs.size(); ++c)
        for (int a = 1; a < c; ++a)
            out.set_card(c, a, std::max(lhs.card(c, a), rhs.card(c, a)));
    return out;
}

} // namespace sperm
