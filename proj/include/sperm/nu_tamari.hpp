#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sperm/tamari.hpp"

namespace sperm {

struct GridPoint {
    int x = 0;
    int y = 0;
    bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const GridPoint& o) const { return y != o.y ? y < o.y : x < o.x; }
};

// A north/east lattice path. Row y of the region weakly above the path spans
// the columns 0..row_width(y).
class LatticePath {
public:
    explicit LatticePath(std::string steps);
    // N E^{s(1)} N E^{s(2)} ... N E^{s(n)}
    static LatticePath from_composition(const WeakComposition& s);

    const std::string& steps() const { return steps_; }
    int length() const { return static_cast<int>(steps_.size()); }
    int height() const { return height_; }
    int width() const { return width_; }
    int row_width(int y) const { return row_width_[static_cast<size_t>(y)]; }
    bool contains(GridPoint p) const {
        return 0 <= p.y && p.y <= height_ && 0 <= p.x && p.x <= row_width(p.y);
    }
    GridPoint root() const { return GridPoint{0, height_}; }

    bool operator==(const LatticePath& o) const { return steps_ == o.steps_; }

private:
    std::string steps_;
    int height_ = 0, width_ = 0;
    std::vector<int> row_width_;
};

// All lattice points weakly above the path, sorted.
std::vector<GridPoint> points_above(const LatticePath& path);

// False exactly when p and q are strictly southwest/northeast of each other
// and the southeast corner of their bounding rectangle stays weakly above
// the path. Throws when either point lies outside the region.
bool are_nu_compatible(GridPoint p, GridPoint q, const LatticePath& path);

// Maximal pairwise compatible point set; always of size length+1.
struct NuTree {
    std::vector<GridPoint> nodes;  // sorted
    bool operator==(const NuTree& o) const { return nodes == o.nodes; }
    bool operator<(const NuTree& o) const { return nodes < o.nodes; }
    bool contains(GridPoint p) const;
};

std::vector<NuTree> enumerate_nu_trees(const LatticePath& path);

// Points q admitting witnesses p (above, same column) and r (right, same
// row) with nothing else of the tree in the spanned rectangle.
std::vector<GridPoint> nu_ascents(const NuTree& tree, const LatticePath& path);

// Swaps q for the opposite rectangle corner. Throws when q is not an ascent.
NuTree nu_rotate(const NuTree& tree, GridPoint q, const LatticePath& path);

struct CoveringNuFace {
    std::vector<GridPoint> nodes;  // sorted
    bool operator==(const CoveringNuFace& o) const { return nodes == o.nodes; }
    bool operator<(const CoveringNuFace& o) const { return nodes < o.nodes; }
};

// Contains the root and meets every row and column of the region.
bool is_covering_face(const CoveringNuFace& face, const LatticePath& path);

CoveringNuFace face_from_pair(const NuTree& tree, const std::vector<GridPoint>& ascents);

// dim = length+1-|face|
int face_dimension(const CoveringNuFace& face, const LatticePath& path);

struct NuLattice {
    LatticePath path;
    std::vector<NuTree> trees;                    // canonical order
    std::vector<std::pair<int, int>> edges;       // rotations lower -> upper
    std::vector<std::vector<bool>> reachable;     // reflexive-transitive closure
    bool leq(int i, int j) const { return reachable[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int index_of(const NuTree& t) const;
};

NuLattice nu_lattice(const LatticePath& path);

// All covering faces together with their defining pair, keyed for lookups.
struct NuFaceSet {
    LatticePath path;
    std::vector<CoveringNuFace> faces;
    std::vector<int> dimension;
    std::vector<std::int64_t> count_by_dimension;
};

NuFaceSet covering_faces(const LatticePath& path);

// Minimal nu-tree containing the face; uniqueness is checked at run time.
NuTree min_nu_tree_containing(const CoveringNuFace& face, const NuLattice& lattice);
NuTree max_nu_tree_containing(const CoveringNuFace& face, const NuLattice& lattice);

// Right flushing: label tree positions in reverse preorder by the number of
// internal nodes traversed before them, then fill the rows of the region
// bottom to top, right to left, skipping columns over a non-leftmost node.
NuTree right_flush(const SDecreasingTree& tree);

struct IsoReport {
    WeakComposition s;
    LatticePath path;
    std::int64_t trees_matched = 0;
    std::int64_t faces_matched = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

// Checks that right flushing is an order isomorphism onto the nu-Tamari
// lattice of the reversed composition and that the induced face map is an
// order-reversing bijection onto covering faces.
IsoReport verify_isomorphism(const WeakComposition& s, std::int64_t max_trees);

} // namespace sperm
