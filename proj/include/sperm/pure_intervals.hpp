#pragma once

#include <optional>
#include <vector>

#include "sperm/weak_order.hpp"

namespace sperm {

// An inversion (c,a) whose cardinality increases across an interval.
// `value` is card(c,a) at the lower tree.
struct Variation {
    int c = 0;
    int a = 0;
    int value = 0;
    int amplitude = 0;
    bool essential = false;
    bool minimal_essential = false;

    bool same_pair_and_value(const Variation& o) const {
        return c == o.c && a == o.a && value == o.value;
    }
};

// Face of the complex: the interval [lower, lower + ascents].
struct PureInterval {
    SDecreasingTree lower;
    std::vector<TreeAscent> ascents;  // sorted by (a,c)
    SDecreasingTree upper;            // add_ascents(lower, ascents)

    int dimension() const { return static_cast<int>(ascents.size()); }
    bool operator==(const PureInterval& o) const {
        return lower == o.lower && ascents == o.ascents;
    }
};

PureInterval make_pure_interval(const SDecreasingTree& lower, std::vector<TreeAscent> ascents);

// All variations of [lower, upper], sorted by (c,a), with essential and
// minimal-essential flags. Throws when the trees are not comparable.
std::vector<Variation> variations(const SDecreasingTree& lower, const SDecreasingTree& upper);

// The ascent set recovered from the minimal essential variations.
std::vector<TreeAscent> minimal_essential_ascents(const SDecreasingTree& lower,
                                                  const SDecreasingTree& upper);

// Characterization: +1-interval, variation condition (c,a)&(b,a) => (c,b),
// and the essential-variation condition forcing (b,a)_0.
bool is_pure_interval(const SDecreasingTree& lower, const SDecreasingTree& upper);

// The chain c > c_1 > ... > c_k >= a carrying the variation (c,a)_v down to a
// (first entry is c itself). Throws when (c,a) is not a variation.
std::vector<int> variation_path(const PureInterval& interval, int c, int a);

// Empty when join(lower1, lower2) fits under neither upper; otherwise the
// pure interval on the join whose ascents are the minimal compatible
// variations of the two faces.
std::optional<PureInterval> intersect(const PureInterval& p1, const PureInterval& p2);

// True when (c,a)_v varies in both faces and every middle-descendant witness
// in one lower tree is saturated in the other.
bool is_compatible_variation(const PureInterval& p1, const PureInterval& p2, int c, int a, int v);

struct FaceSet {
    WeakComposition s;
    std::vector<SDecreasingTree> trees;          // canonical order
    std::vector<PureInterval> faces;             // graded: dimension 0 first
    std::vector<std::int64_t> count_by_dimension;
};

FaceSet enumerate_faces(const WeakComposition& s, std::int64_t max_trees);

struct ComplexReport {
    WeakComposition s;
    std::vector<std::int64_t> faces_by_dimension;
    std::int64_t pairs_checked = 0;
    std::int64_t subfaces_checked = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

// Checks closure under subfaces and that every pairwise intersection is
// empty or a face matching the minimal-compatible-variation construction.
// Violations are collected, not thrown.
ComplexReport verify_complex(const WeakComposition& s, std::int64_t max_trees, int threads = 1);

} // namespace sperm
