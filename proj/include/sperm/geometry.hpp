#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sperm/pure_intervals.hpp"
#include "sperm/tamari.hpp"

namespace sperm {

// Exact rational on 64-bit words with 128-bit intermediates; throws on
// overflow instead of losing precision.
class Rat {
public:
    Rat() = default;
    Rat(long long value) : num_(value) {}
    Rat(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const { return Rat(-num_, den_); }
    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;

    std::string to_string() const;

private:
    long long num_ = 0;
    long long den_ = 1;
};

using RationalPoint = std::vector<Rat>;

// v coordinates: sum over pairs i<j of card(j,i) (e_i - e_j); always sums to zero.
RationalPoint coords_v(const SDecreasingTree& tree);

// Corrected coordinates for length-4 compositions with s(4) != 0: the
// cardinalities are tripled and the pairs (3,i) receive a piecewise offset
// that untangles the cells. Requires n == 4.
RationalPoint coords_3d_fixed(const SDecreasingTree& tree);

// Vertices of the Minkowski sum of the segments s(j) * conv{e_i, e_j}.
std::vector<RationalPoint> zonotope_vertices(const WeakComposition& s);

struct Vec2 {
    long long x = 0, y = 0;
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator<(const Vec2& o) const { return x != o.x ? x < o.x : y < o.y; }
};
struct Vec3 {
    long long x = 0, y = 0, z = 0;
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator<(const Vec3& o) const {
        if (x != o.x) return x < o.x;
        return y != o.y ? y < o.y : z < o.z;
    }
};

// Drawing bases pinned for reproducible output: integer covectors spanning
// the sum-zero hyperplane.
Vec2 project_sum_zero_2d(const RationalPoint& p);  // (1,-1,0), (1,1,-2)
Vec3 project_sum_zero_3d(const RationalPoint& p);  // (1,-1,0,0), (1,1,-2,0), (1,1,1,-3)

// Strictly convex hull in the plane: indices of corners in counterclockwise
// order; collinear non-corner points are excluded.
std::vector<int> convex_hull_2d(const std::vector<Vec2>& pts);
long long twice_area(const std::vector<Vec2>& cycle);

struct HullFacet {
    std::vector<int> cycle;                 // corner indices, outward counterclockwise
    std::array<long long, 4> plane{};       // nx,ny,nz,d with n.p <= d inside, = d on facet
};

struct Hull3 {
    std::vector<int> vertices;                   // strict corners
    std::vector<std::pair<int, int>> edges;      // sorted index pairs
    std::vector<HullFacet> facets;
    long long six_volume = 0;
};

// Exact incremental hull; input must have affine dimension 3.
Hull3 convex_hull_3d(const std::vector<Vec3>& pts);

struct GeometricCell {
    int dim = 0;
    std::vector<int> vertices;  // indices into the complex's tree list, sorted
    std::string key;            // lower tree serialization + ascent list
};

struct GeometricComplex {
    WeakComposition s;
    int ambient = 0;  // 2 or 3
    std::vector<SDecreasingTree> trees;
    std::vector<RationalPoint> coords;
    std::vector<Vec2> pts2;  // ambient == 2
    std::vector<Vec3> pts3;  // ambient == 3
    std::vector<GeometricCell> cells;              // graded by dim
    std::vector<std::pair<int, int>> hasse_edges;  // cover pairs, sorted
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
    bool informational = false;  // recorded observation; never gates the outcome
};

struct RealizationReport {
    WeakComposition s;
    int ambient = 0;
    std::vector<CheckResult> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass && !c.informational) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// Cells are the pure intervals of the weak order, vertices the trees.
// realize_2d needs n == 3 and s(3) != 0; realize_3d needs n == 4 and s(4) != 0.
GeometricComplex realize_2d(const WeakComposition& s, std::int64_t max_trees);
GeometricComplex realize_3d(const WeakComposition& s, std::int64_t max_trees);

// Runs the subdivision checks: distinct coordinates, convex position and
// face-poset match per cell, exact measure additivity, pairwise interior
// disjointness of top cells, edge graph vs cover relations, and the hull
// shape against the zonotope.
RealizationReport verify_realization(const GeometricComplex& complex, int threads = 1);

struct AssociahedronRealization {
    GeometricComplex complex;  // restricted to the Tamari subcomplex
    RealizationReport report;
};

// Restriction of the realization to s-Tamari vertices and pure s-Tamari
// interval cells. The report records the edge graph comparison and, via
// exact measures, whether the union of cells is convex and cut out by a
// subset of the full hull's facets.
AssociahedronRealization associahedron_realization(const WeakComposition& s, std::int64_t max_trees);

// One polygon per 2-cell with the cover-relation segments overlaid;
// byte-for-byte deterministic.
void export_svg(const GeometricComplex& complex, std::ostream& out);
// {"s", "ambient", "vertices", "edges", "cells"}; 3-cell boundaries as OBJ.
void export_scene_json(const GeometricComplex& complex, std::ostream& out);
void export_obj(const GeometricComplex& complex, std::ostream& out);

} // namespace sperm
