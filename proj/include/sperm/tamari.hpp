#pragma once

#include <vector>

#include "sperm/enumeration.hpp"
#include "sperm/weak_order.hpp"

namespace sperm {

// (a,c) with a a non-right child of c.
struct TamariAscent {
    int a = 0;
    int c = 0;

    bool operator==(const TamariAscent& o) const { return a == o.a && c == o.c; }
    bool operator<(const TamariAscent& o) const { return a != o.a ? a < o.a : c < o.c; }
};

// card(c,a) <= card(c,b) for all a < b < c. Equivalently the labels in each
// child of c are smaller than the labels in the children to its right.
bool is_s_tamari(const SDecreasingTree& tree);

std::vector<TamariAscent> tamari_ascents(const SDecreasingTree& tree);

SDecreasingTree tamari_rotate(const SDecreasingTree& tree, const TamariAscent& ascent);

SDecreasingTree tamari_add_ascents(const SDecreasingTree& tree,
                                   const std::vector<TamariAscent>& ascents);

struct PureTamariInterval {
    SDecreasingTree lower;
    std::vector<TamariAscent> ascents;  // sorted
    SDecreasingTree upper;

    int dimension() const { return static_cast<int>(ascents.size()); }
    bool operator==(const PureTamariInterval& o) const {
        return lower == o.lower && ascents == o.ascents;
    }
};

PureTamariInterval make_pure_tamari_interval(const SDecreasingTree& lower,
                                             std::vector<TamariAscent> ascents);

std::vector<SDecreasingTree> enumerate_tamari_trees(const WeakComposition& s, std::int64_t max_trees);

struct TamariFaceSet {
    WeakComposition s;
    std::vector<SDecreasingTree> trees;
    std::vector<PureTamariInterval> faces;
    std::vector<std::int64_t> count_by_dimension;
};

TamariFaceSet enumerate_tamari_faces(const WeakComposition& s, std::int64_t max_trees);

IntPolynomial f_polynomial_tamari(const WeakComposition& s, std::int64_t max_trees);
std::int64_t s_catalan(const WeakComposition& s, std::int64_t max_trees);
std::int64_t s_narayana(const WeakComposition& s, int k, std::int64_t max_trees);

struct TamariHasseEdge {
    int from = 0;
    int to = 0;
    TamariAscent ascent;
};

struct TamariHasseDiagram {
    WeakComposition s;
    std::vector<SDecreasingTree> vertices;
    std::vector<TamariHasseEdge> edges;
};

TamariHasseDiagram tamari_hasse_diagram(const WeakComposition& s, std::int64_t max_trees);

} // namespace sperm
