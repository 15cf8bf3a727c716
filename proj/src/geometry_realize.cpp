#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "sperm/geometry.hpp"

namespace sperm {

namespace {

long long checked_cast(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

std::string cell_key(const SDecreasingTree& lower, const std::vector<std::pair<int, int>>& ascents) {
    std::string key = lower.to_string();
    for (auto [a, c] : ascents) key += "|" + std::to_string(a) + "," + std::to_string(c);
    return key;
}

template <typename Face>
std::vector<int> interval_vertex_ids(const Face& face, const std::vector<SDecreasingTree>& trees) {
    std::vector<int> out;
    for (size_t i = 0; i < trees.size(); ++i)
        if (leq(face.lower, trees[i]) && leq(trees[i], face.upper)) out.push_back(static_cast<int>(i));
    return out;
}

} // namespace

GeometricComplex realize_2d(const WeakComposition& s, std::int64_t max_trees) {
    if (s.length() != 3 || s(3) == 0)
        throw std::invalid_argument("2d realization needs a composition of length 3 with s(3) != 0");
    GeometricComplex out{s, 2, {}, {}, {}, {}, {}, {}};
    FaceSet faces = enumerate_faces(s, max_trees);
    out.trees = faces.trees;
    for (const auto& tree : out.trees) {
        out.coords.push_back(coords_v(tree));
        out.pts2.push_back(project_sum_zero_2d(out.coords.back()));
    }
    for (const PureInterval& face : faces.faces) {
        std::vector<std::pair<int, int>> ascent_pairs;
        for (const TreeAscent& asc : face.ascents) ascent_pairs.emplace_back(asc.a, asc.c);
        out.cells.push_back(GeometricCell{face.dimension(), interval_vertex_ids(face, out.trees),
                                          cell_key(face.lower, ascent_pairs)});
        if (face.dimension() == 1)
            out.hasse_edges.emplace_back(out.cells.back().vertices[0], out.cells.back().vertices[1]);
    }
    std::sort(out.hasse_edges.begin(), out.hasse_edges.end());
    return out;
}

GeometricComplex realize_3d(const WeakComposition& s, std::int64_t max_trees) {
    if (s.length() != 4 || s(4) == 0)
        throw std::invalid_argument("3d realization needs a composition of length 4 with s(4) != 0");
    GeometricComplex out{s, 3, {}, {}, {}, {}, {}, {}};
    FaceSet faces = enumerate_faces(s, max_trees);
    out.trees = faces.trees;
    for (const auto& tree : out.trees) {
        out.coords.push_back(coords_3d_fixed(tree));
        out.pts3.push_back(project_sum_zero_3d(out.coords.back()));
    }
    for (const PureInterval& face : faces.faces) {
        std::vector<std::pair<int, int>> ascent_pairs;
        for (const TreeAscent& asc : face.ascents) ascent_pairs.emplace_back(asc.a, asc.c);
        out.cells.push_back(GeometricCell{face.dimension(), interval_vertex_ids(face, out.trees),
                                          cell_key(face.lower, ascent_pairs)});
        if (face.dimension() == 1)
            out.hasse_edges.emplace_back(out.cells.back().vertices[0], out.cells.back().vertices[1]);
    }
    std::sort(out.hasse_edges.begin(), out.hasse_edges.end());
    return out;
}

namespace {

// --- cell geometry helpers ----------------------------------------------

// Projection of coplanar 3d points to 2d along the dominant normal axis.
std::vector<Vec2> flatten_to_plane(const std::vector<Vec3>& pts) {
    if (pts.size() < 3) throw std::invalid_argument("flatten needs >= 3 points");
    long long nx = 0, ny = 0, nz = 0;
    for (size_t i = 1; i + 1 < pts.size() && nx == 0 && ny == 0 && nz == 0; ++i)
        for (size_t j = i + 1; j < pts.size() && nx == 0 && ny == 0 && nz == 0; ++j) {
            const long long ux = pts[i].x - pts[0].x, uy = pts[i].y - pts[0].y,
                            uz = pts[i].z - pts[0].z;
            const long long vx = pts[j].x - pts[0].x, vy = pts[j].y - pts[0].y,
                            vz = pts[j].z - pts[0].z;
            nx = uy * vz - uz * vy;
            ny = uz * vx - ux * vz;
            nz = ux * vy - uy * vx;
        }
    std::vector<Vec2> out;
    for (const Vec3& p : pts) {
        long long anx = nx < 0 ? -nx : nx, any = ny < 0 ? -ny : ny, anz = nz < 0 ? -nz : nz;
        if (anz >= anx && anz >= any)
            out.push_back(Vec2{p.x, p.y});
        else if (any >= anx)
            out.push_back(Vec2{p.x, p.z});
        else
            out.push_back(Vec2{p.y, p.z});
    }
    return out;
}

int affine_dimension(const std::vector<Vec3>& pts) {
    if (pts.size() <= 1) return 0;
    size_t i1 = 0;
    while (i1 < pts.size() && pts[i1] == pts[0]) ++i1;
    if (i1 == pts.size()) return 0;
    const long long ux = pts[i1].x - pts[0].x, uy = pts[i1].y - pts[0].y, uz = pts[i1].z - pts[0].z;
    size_t i2 = 0;
    long long nx = 0, ny = 0, nz = 0;
    for (size_t j = 0; j < pts.size(); ++j) {
        const long long vx = pts[j].x - pts[0].x, vy = pts[j].y - pts[0].y, vz = pts[j].z - pts[0].z;
        nx = uy * vz - uz * vy;
        ny = uz * vx - ux * vz;
        nz = ux * vy - uy * vx;
        if (nx || ny || nz) {
            i2 = j;
            break;
        }
    }
    if (i2 == 0) return 1;
    for (size_t j = 0; j < pts.size(); ++j) {
        const long long vx = pts[j].x - pts[0].x, vy = pts[j].y - pts[0].y, vz = pts[j].z - pts[0].z;
        if (nx * vx + ny * vy + nz * vz != 0) return 3;
    }
    return 2;
}

int affine_dimension_2d(const std::vector<Vec2>& pts) {
    if (pts.size() <= 1) return 0;
    size_t i1 = 0;
    while (i1 < pts.size() && pts[i1] == pts[0]) ++i1;
    if (i1 == pts.size()) return 0;
    const long long ux = pts[i1].x - pts[0].x, uy = pts[i1].y - pts[0].y;
    for (size_t j = 0; j < pts.size(); ++j) {
        const long long vx = pts[j].x - pts[0].x, vy = pts[j].y - pts[0].y;
        if (ux * vy - uy * vx != 0) return 2;
    }
    return 1;
}

struct CellShape {
    std::vector<int> hull_vertices;                 // complex tree ids
    std::vector<std::pair<int, int>> hull_edges;    // sorted pairs of tree ids
    std::vector<std::vector<int>> hull_facets;      // for 3-cells: sorted corner id lists
    std::vector<int> boundary_cycle;                // for 2-cells: ccw corner ids
    long long measure = 0;                          // 2*area or 6*volume of top cells
};

// Convexity data of one cell; `ok` is false when some member is not a corner.
CellShape cell_shape(const GeometricComplex& complex, const GeometricCell& cell, bool& ok,
                     std::string& why) {
    CellShape shape;
    ok = true;
    const std::vector<int>& ids = cell.vertices;
    if (cell.dim == 0) {
        shape.hull_vertices = ids;
        if (ids.size() != 1) {
            ok = false;
            why = "0-cell with " + std::to_string(ids.size()) + " vertices";
        }
        return shape;
    }
    if (cell.dim == 1) {
        shape.hull_vertices = ids;
        if (ids.size() != 2) {
            ok = false;
            why = "1-cell with " + std::to_string(ids.size()) + " vertices";
            return shape;
        }
        shape.hull_edges.emplace_back(std::min(ids[0], ids[1]), std::max(ids[0], ids[1]));
        return shape;
    }

    if (complex.ambient == 2 || cell.dim == 2) {
        std::vector<Vec2> pts;
        if (complex.ambient == 2) {
            for (int id : ids) pts.push_back(complex.pts2[static_cast<size_t>(id)]);
        } else {
            std::vector<Vec3> raw;
            for (int id : ids) raw.push_back(complex.pts3[static_cast<size_t>(id)]);
            if (affine_dimension(raw) != 2) {
                ok = false;
                why = "2-cell is not planar";
                return shape;
            }
            pts = flatten_to_plane(raw);
        }
        if (affine_dimension_2d(pts) != 2) {
            ok = false;
            why = "2-cell is degenerate";
            return shape;
        }
        const std::vector<int> hull = convex_hull_2d(pts);
        if (hull.size() != ids.size()) {
            ok = false;
            why = "cell has " + std::to_string(ids.size()) + " vertices but " +
                  std::to_string(hull.size()) + " corners";
        }
        for (int local : hull) shape.boundary_cycle.push_back(ids[static_cast<size_t>(local)]);
        shape.hull_vertices = shape.boundary_cycle;
        std::sort(shape.hull_vertices.begin(), shape.hull_vertices.end());
        for (size_t k = 0; k < hull.size(); ++k) {
            int a = shape.boundary_cycle[k];
            int b = shape.boundary_cycle[(k + 1) % hull.size()];
            shape.hull_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(shape.hull_edges.begin(), shape.hull_edges.end());
        std::vector<Vec2> cycle;
        for (int local : hull) cycle.push_back(pts[static_cast<size_t>(local)]);
        shape.measure = twice_area(cycle);
        return shape;
    }

    // 3-cell in ambient 3
    std::vector<Vec3> pts;
    for (int id : ids) pts.push_back(complex.pts3[static_cast<size_t>(id)]);
    if (affine_dimension(pts) != 3) {
        ok = false;
        why = "3-cell is flat";
        return shape;
    }
    Hull3 hull = convex_hull_3d(pts);
    if (hull.vertices.size() != ids.size()) {
        ok = false;
        why = "cell has " + std::to_string(ids.size()) + " vertices but " +
              std::to_string(hull.vertices.size()) + " corners";
    }
    for (int local : hull.vertices) shape.hull_vertices.push_back(ids[static_cast<size_t>(local)]);
    std::sort(shape.hull_vertices.begin(), shape.hull_vertices.end());
    for (auto [a, b] : hull.edges) {
        int ga = ids[static_cast<size_t>(a)], gb = ids[static_cast<size_t>(b)];
        shape.hull_edges.emplace_back(std::min(ga, gb), std::max(ga, gb));
    }
    std::sort(shape.hull_edges.begin(), shape.hull_edges.end());
    for (const HullFacet& facet : hull.facets) {
        std::vector<int> corners;
        for (int local : facet.cycle) corners.push_back(ids[static_cast<size_t>(local)]);
        std::sort(corners.begin(), corners.end());
        shape.hull_facets.push_back(std::move(corners));
    }
    std::sort(shape.hull_facets.begin(), shape.hull_facets.end());
    shape.measure = hull.six_volume;
    return shape;
}

// exact area of the clipped intersection of two convex polygons, times two
Rat twice_intersection_area(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    struct RPoint {
        Rat x, y;
    };
    std::vector<RPoint> poly;
    for (const Vec2& p : a) poly.push_back(RPoint{Rat(p.x), Rat(p.y)});
    for (size_t e = 0; e < b.size() && !poly.empty(); ++e) {
        const Vec2 &u = b[e], &v = b[(e + 1) % b.size()];
        // inside = left of directed edge u->v (b is counterclockwise)
        auto side = [&](const RPoint& p) {
            return (Rat(v.x - u.x) * (p.y - Rat(u.y))) - (Rat(v.y - u.y) * (p.x - Rat(u.x)));
        };
        std::vector<RPoint> next;
        const Rat zero(0);
        for (size_t i = 0; i < poly.size(); ++i) {
            const RPoint &cur = poly[i], &prev = poly[(i + poly.size() - 1) % poly.size()];
            const Rat sc = side(cur), sp = side(prev);
            const bool cur_in = !(sc < zero), prev_in = !(sp < zero);
            if (cur_in != prev_in) {
                const Rat t = sp / (sp - sc);
                next.push_back(RPoint{prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
            }
            if (cur_in) next.push_back(cur);
        }
        poly = std::move(next);
    }
    Rat sum(0);
    for (size_t i = 0; i < poly.size(); ++i) {
        const RPoint &p = poly[i], &q = poly[(i + 1) % poly.size()];
        sum = sum + (p.x * q.y - p.y * q.x);
    }
    if (sum < Rat(0)) sum = -sum;
    return sum;
}

// zero-volume test for two convex 3-polytopes given corner cycles
bool interiors_disjoint_3d(const GeometricComplex& complex, const std::vector<int>& cellA,
                           const std::vector<int>& cellB) {
    auto pts_of = [&](const std::vector<int>& ids) {
        std::vector<Vec3> out;
        for (int id : ids) out.push_back(complex.pts3[static_cast<size_t>(id)]);
        return out;
    };
    const std::vector<Vec3> A = pts_of(cellA), B = pts_of(cellB);
    const Hull3 hullA = convex_hull_3d(A), hullB = convex_hull_3d(B);

    // a facet plane of one polytope with the other entirely outside separates them
    auto separated = [&](const Hull3& hull, const std::vector<Vec3>& hull_pts,
                         const std::vector<Vec3>& other) {
        for (const HullFacet& facet : hull.facets) {
            bool all_beyond = true;
            for (const Vec3& p : other) {
                const __int128 val = static_cast<__int128>(facet.plane[0]) * p.x +
                                     static_cast<__int128>(facet.plane[1]) * p.y +
                                     static_cast<__int128>(facet.plane[2]) * p.z;
                if (val < facet.plane[3]) {
                    all_beyond = false;
                    break;
                }
            }
            if (all_beyond) return true;
        }
        (void)hull_pts;
        return false;
    };
    if (separated(hullA, A, B) || separated(hullB, B, A)) return true;

    // fall back to the affine dimension of the intersection's candidate vertices
    struct RPoint3 {
        Rat x, y, z;
    };
    auto inside = [&](const Hull3& hull, const RPoint3& p) {
        for (const HullFacet& facet : hull.facets) {
            const Rat val = Rat(facet.plane[0]) * p.x + Rat(facet.plane[1]) * p.y +
                            Rat(facet.plane[2]) * p.z;
            if (Rat(facet.plane[3]) < val) return false;
        }
        return true;
    };
    std::vector<RPoint3> candidates;
    auto add_vertices_inside = [&](const Hull3& hullOwn, const std::vector<Vec3>& own,
                                   const Hull3& other) {
        for (int v : hullOwn.vertices) {
            RPoint3 p{Rat(own[static_cast<size_t>(v)].x), Rat(own[static_cast<size_t>(v)].y),
                      Rat(own[static_cast<size_t>(v)].z)};
            if (inside(other, p)) candidates.push_back(p);
        }
    };
    add_vertices_inside(hullA, A, hullB);
    add_vertices_inside(hullB, B, hullA);
    auto add_edge_cuts = [&](const Hull3& hullOwn, const std::vector<Vec3>& own, const Hull3& other) {
        for (auto [ia, ib] : hullOwn.edges) {
            const Vec3 &u = own[static_cast<size_t>(ia)], &v = own[static_cast<size_t>(ib)];
            for (const HullFacet& facet : other.facets) {
                const __int128 su = static_cast<__int128>(facet.plane[0]) * u.x +
                                    static_cast<__int128>(facet.plane[1]) * u.y +
                                    static_cast<__int128>(facet.plane[2]) * u.z - facet.plane[3];
                const __int128 sv = static_cast<__int128>(facet.plane[0]) * v.x +
                                    static_cast<__int128>(facet.plane[1]) * v.y +
                                    static_cast<__int128>(facet.plane[2]) * v.z - facet.plane[3];
                if ((su > 0 && sv > 0) || (su < 0 && sv < 0) || su == sv) continue;
                const Rat t = Rat(checked_cast(su), 1) / Rat(checked_cast(su - sv), 1);
                RPoint3 p{Rat(u.x) + t * Rat(v.x - u.x), Rat(u.y) + t * Rat(v.y - u.y),
                          Rat(u.z) + t * Rat(v.z - u.z)};
                if (inside(hullA, p) && inside(hullB, p)) candidates.push_back(p);
            }
        }
    };
    add_edge_cuts(hullA, A, hullB);
    add_edge_cuts(hullB, B, hullA);

    if (candidates.size() < 4) return true;
    // affine rank: look for four affinely independent candidates
    for (size_t i = 1; i < candidates.size(); ++i)
        for (size_t j = i + 1; j < candidates.size(); ++j)
            for (size_t k = j + 1; k < candidates.size(); ++k) {
                const RPoint3 &p0 = candidates[0], &p1 = candidates[i], &p2 = candidates[j],
                              &p3 = candidates[k];
                const Rat ax = p1.x - p0.x, ay = p1.y - p0.y, az = p1.z - p0.z;
                const Rat bx = p2.x - p0.x, by = p2.y - p0.y, bz = p2.z - p0.z;
                const Rat cx = p3.x - p0.x, cy = p3.y - p0.y, cz = p3.z - p0.z;
                const Rat det = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) +
                                az * (bx * cy - by * cx);
                if (!det.is_zero()) return false;
            }
    return true;
}

std::vector<Vec2> corner_cycle_2d(const GeometricComplex& complex, const std::vector<int>& ids) {
    std::vector<Vec2> pts;
    for (int id : ids) pts.push_back(complex.pts2[static_cast<size_t>(id)]);
    std::vector<Vec2> cycle;
    for (int local : convex_hull_2d(pts)) cycle.push_back(pts[static_cast<size_t>(local)]);
    return cycle;
}

} // namespace

RealizationReport verify_realization(const GeometricComplex& complex, int threads) {
    (void)threads;
    RealizationReport report{complex.s, complex.ambient, {}};
    auto check = [&](std::string name, bool pass, std::string details) {
        report.checks.push_back(CheckResult{std::move(name), pass, std::move(details)});
    };

    // distinct coordinates
    {
        bool distinct = true;
        if (complex.ambient == 2) {
            std::set<Vec2> seen(complex.pts2.begin(), complex.pts2.end());
            distinct = seen.size() == complex.pts2.size();
        } else {
            std::set<Vec3> seen(complex.pts3.begin(), complex.pts3.end());
            distinct = seen.size() == complex.pts3.size();
        }
        check("distinct-coordinates", distinct,
              std::to_string(complex.trees.size()) + " vertices");
    }

    // convex position and face poset per cell
    std::vector<CellShape> shapes(complex.cells.size());
    {
        bool convex = true;
        std::string why;
        for (size_t i = 0; i < complex.cells.size(); ++i) {
            bool ok = true;
            std::string detail;
            shapes[i] = cell_shape(complex, complex.cells[i], ok, detail);
            if (!ok && convex) {
                convex = false;
                why = complex.cells[i].key + ": " + detail;
            }
        }
        check("cells-convex-position", convex, convex ? "" : why);
    }
    {
        bool match = true;
        std::string why;
        for (size_t i = 0; i < complex.cells.size() && match; ++i) {
            const GeometricCell& cell = complex.cells[i];
            if (cell.dim < 2) continue;
            // subcells by inclusion of vertex sets
            std::set<std::vector<int>> sub_vertices, sub_edges, sub_facets;
            for (size_t j = 0; j < complex.cells.size(); ++j) {
                const GeometricCell& other = complex.cells[j];
                if (other.dim >= cell.dim && j != i) continue;
                if (!std::includes(cell.vertices.begin(), cell.vertices.end(),
                                   other.vertices.begin(), other.vertices.end()))
                    continue;
                if (other.dim == 0) sub_vertices.insert(other.vertices);
                if (other.dim == 1) sub_edges.insert(other.vertices);
                if (other.dim == 2 && cell.dim == 3) sub_facets.insert(other.vertices);
            }
            std::set<std::vector<int>> hull_vertices, hull_edges, hull_facets;
            for (int v : shapes[i].hull_vertices) hull_vertices.insert({v});
            for (auto [a, b] : shapes[i].hull_edges) hull_edges.insert({a, b});
            for (const auto& f : shapes[i].hull_facets) hull_facets.insert(f);
            if (sub_vertices != hull_vertices) {
                match = false;
                why = cell.key + ": vertex faces differ";
            } else if (sub_edges != hull_edges) {
                match = false;
                why = cell.key + ": edge faces differ";
            } else if (cell.dim == 3 && sub_facets != hull_facets) {
                match = false;
                why = cell.key + ": boundary facets differ";
            }
        }
        check("cell-face-poset", match, match ? "" : why);
    }

    // exact measure additivity over top cells
    long long hull_measure = 0;
    {
        __int128 total = 0;
        for (size_t i = 0; i < complex.cells.size(); ++i)
            if (complex.cells[i].dim == complex.ambient) total += shapes[i].measure;
        if (complex.ambient == 2) {
            std::vector<Vec2> cycle;
            for (int local : convex_hull_2d(complex.pts2))
                cycle.push_back(complex.pts2[static_cast<size_t>(local)]);
            hull_measure = twice_area(cycle);
        } else {
            hull_measure = convex_hull_3d(complex.pts3).six_volume;
        }
        const bool equal = total == static_cast<__int128>(hull_measure);
        check("measure-additivity", equal,
              "cells " + std::to_string(static_cast<long long>(total)) + " vs hull " +
                  std::to_string(hull_measure));
    }

    // pairwise interior disjointness of top cells
    {
        std::vector<size_t> top;
        for (size_t i = 0; i < complex.cells.size(); ++i)
            if (complex.cells[i].dim == complex.ambient) top.push_back(i);
        bool disjoint = true;
        std::string why;
        for (size_t x = 0; x < top.size() && disjoint; ++x)
            for (size_t y = x + 1; y < top.size() && disjoint; ++y) {
                if (complex.ambient == 2) {
                    const Rat overlap = twice_intersection_area(
                        corner_cycle_2d(complex, complex.cells[top[x]].vertices),
                        corner_cycle_2d(complex, complex.cells[top[y]].vertices));
                    if (!overlap.is_zero()) {
                        disjoint = false;
                        why = complex.cells[top[x]].key + " overlaps " + complex.cells[top[y]].key;
                    }
                } else if (!interiors_disjoint_3d(complex, complex.cells[top[x]].vertices,
                                                  complex.cells[top[y]].vertices)) {
                    disjoint = false;
                    why = complex.cells[top[x]].key + " overlaps " + complex.cells[top[y]].key;
                }
            }
        check("pairwise-interior-disjoint", disjoint, why);
    }

    // edge graph of the subdivision vs cover relations
    {
        std::set<std::pair<int, int>> subdivision_edges, cover_edges(complex.hasse_edges.begin(),
                                                                     complex.hasse_edges.end());
        for (size_t i = 0; i < complex.cells.size(); ++i)
            for (auto e : shapes[i].hull_edges) subdivision_edges.insert(e);
        std::set<std::pair<int, int>> normalized_covers;
        for (auto [a, b] : cover_edges) normalized_covers.emplace(std::min(a, b), std::max(a, b));
        const bool equal = subdivision_edges == normalized_covers;
        check("edge-graph", equal,
              std::to_string(subdivision_edges.size()) + " subdivision edges vs " +
                  std::to_string(normalized_covers.size()) + " covers");
    }

    // hull shape against the zonotope
    {
        const std::vector<RationalPoint> zono = zonotope_vertices(complex.s);
        if (complex.ambient == 2) {
            std::vector<Vec2> zpts;
            for (const auto& p : zono) zpts.push_back(project_sum_zero_2d(p));
            const size_t zcount = convex_hull_2d(zpts).size();
            const size_t hcount = convex_hull_2d(complex.pts2).size();
            check("hull-matches-zonotope", zcount == hcount,
                  std::to_string(hcount) + " hull vertices vs " + std::to_string(zcount));
        } else {
            std::vector<Vec3> zpts;
            for (const auto& p : zono) zpts.push_back(project_sum_zero_3d(p));
            const Hull3 zhull = convex_hull_3d(zpts);
            const Hull3 hull = convex_hull_3d(complex.pts3);
            auto facet_sizes = [](const Hull3& h) {
                std::vector<size_t> sizes;
                for (const auto& f : h.facets) sizes.push_back(f.cycle.size());
                std::sort(sizes.begin(), sizes.end());
                return sizes;
            };
            const bool equal = zhull.vertices.size() == hull.vertices.size() &&
                               zhull.edges.size() == hull.edges.size() &&
                               facet_sizes(zhull) == facet_sizes(hull);
            check("hull-matches-zonotope", equal,
                  "f-vector (" + std::to_string(hull.vertices.size()) + "," +
                      std::to_string(hull.edges.size()) + "," + std::to_string(hull.facets.size()) +
                      ") vs zonotope (" + std::to_string(zhull.vertices.size()) + "," +
                      std::to_string(zhull.edges.size()) + "," + std::to_string(zhull.facets.size()) +
                      ")");
        }
    }

    return report;
}

AssociahedronRealization associahedron_realization(const WeakComposition& s, std::int64_t max_trees) {
    if (s.length() != 3 && s.length() != 4)
        throw std::invalid_argument("associahedron realization needs length 3 or 4");
    if (s(s.length()) == 0)
        throw std::invalid_argument("associahedron realization needs s(n) != 0");

    AssociahedronRealization out{
        GeometricComplex{s, s.length() == 3 ? 2 : 3, {}, {}, {}, {}, {}, {}},
        RealizationReport{s, s.length() == 3 ? 2 : 3, {}}};
    GeometricComplex& complex = out.complex;

    const TamariFaceSet faces = enumerate_tamari_faces(s, max_trees);
    complex.trees = faces.trees;
    for (const auto& tree : complex.trees) {
        complex.coords.push_back(complex.ambient == 2 ? coords_v(tree) : coords_3d_fixed(tree));
        if (complex.ambient == 2)
            complex.pts2.push_back(project_sum_zero_2d(complex.coords.back()));
        else
            complex.pts3.push_back(project_sum_zero_3d(complex.coords.back()));
    }
    for (const PureTamariInterval& face : faces.faces) {
        std::vector<std::pair<int, int>> ascent_pairs;
        for (const TamariAscent& asc : face.ascents) ascent_pairs.emplace_back(asc.a, asc.c);
        complex.cells.push_back(GeometricCell{face.dimension(),
                                              interval_vertex_ids(face, complex.trees),
                                              cell_key(face.lower, ascent_pairs)});
        if (face.dimension() == 1)
            complex.hasse_edges.emplace_back(complex.cells.back().vertices[0],
                                             complex.cells.back().vertices[1]);
    }
    std::sort(complex.hasse_edges.begin(), complex.hasse_edges.end());

    RealizationReport& report = out.report;
    auto check = [&](std::string name, bool pass, std::string details) {
        report.checks.push_back(CheckResult{std::move(name), pass, std::move(details)});
    };

    std::vector<CellShape> shapes(complex.cells.size());
    {
        bool convex = true;
        std::string why;
        for (size_t i = 0; i < complex.cells.size(); ++i) {
            bool ok = true;
            std::string detail;
            shapes[i] = cell_shape(complex, complex.cells[i], ok, detail);
            if (!ok && convex) {
                convex = false;
                why = complex.cells[i].key + ": " + detail;
            }
        }
        check("cells-convex-position", convex, why);
    }

    // edge graph against Tamari rotations
    {
        std::set<std::pair<int, int>> subdivision_edges, covers;
        for (size_t i = 0; i < complex.cells.size(); ++i)
            for (auto e : shapes[i].hull_edges) subdivision_edges.insert(e);
        for (auto [a, b] : complex.hasse_edges) covers.emplace(std::min(a, b), std::max(a, b));
        check("edge-graph", subdivision_edges == covers,
              std::to_string(subdivision_edges.size()) + " subdivision edges vs " +
                  std::to_string(covers.size()) + " covers");
    }

    // union of cells convex, by exact measures
    long long union_measure = 0, hull_measure = 0;
    {
        __int128 total = 0;
        for (size_t i = 0; i < complex.cells.size(); ++i)
            if (complex.cells[i].dim == complex.ambient) total += shapes[i].measure;
        union_measure = static_cast<long long>(total);
        if (complex.ambient == 2) {
            std::vector<Vec2> cycle;
            for (int local : convex_hull_2d(complex.pts2))
                cycle.push_back(complex.pts2[static_cast<size_t>(local)]);
            hull_measure = twice_area(cycle);
        } else {
            hull_measure = convex_hull_3d(complex.pts3).six_volume;
        }
        check("union-convex", union_measure == hull_measure,
              "cells " + std::to_string(union_measure) + " vs hull " + std::to_string(hull_measure));
    }

    // Whether the convex union is literally cut out by a subset of the full
    // realization's facet planes. Observed to fail even where the union is
    // convex (the boundary can use chords of the full hull), so this entry is
    // a recorded finding, not a gate.
    {
        GeometricComplex full = complex.ambient == 2 ? realize_2d(s, max_trees)
                                                     : realize_3d(s, max_trees);
        bool subset = union_measure == hull_measure;  // only meaningful for a convex union
        std::string detail;
        if (!subset) {
            detail = "union is not convex";
        } else if (complex.ambient == 2) {
            auto edge_lines = [&](const std::vector<Vec2>& pts) {
                std::set<std::array<long long, 3>> lines;  // (a,b,c): ax+by=c, inside ax+by<=c
                const std::vector<int> hull = convex_hull_2d(pts);
                for (size_t k = 0; k < hull.size(); ++k) {
                    const Vec2 &u = pts[static_cast<size_t>(hull[k])],
                               &v = pts[static_cast<size_t>(hull[(k + 1) % hull.size()])];
                    long long a = v.y - u.y, b = u.x - v.x;
                    long long x = a < 0 ? -a : a, y = b < 0 ? -b : b;
                    while (y) {
                        long long t = x % y;
                        x = y;
                        y = t;
                    }
                    if (x) {
                        a /= x;
                        b /= x;
                    }
                    lines.insert({a, b, a * u.x + b * u.y});
                }
                return lines;
            };
            const auto sub = edge_lines(complex.pts2), all = edge_lines(full.pts2);
            subset = std::includes(all.begin(), all.end(), sub.begin(), sub.end());
            detail = std::to_string(sub.size()) + " facets vs " + std::to_string(all.size());
        } else {
            auto facet_planes = [&](const std::vector<Vec3>& pts) {
                std::set<std::array<long long, 4>> planes;
                for (const auto& f : convex_hull_3d(pts).facets) planes.insert(f.plane);
                return planes;
            };
            const auto sub = facet_planes(complex.pts3), all = facet_planes(full.pts3);
            subset = std::includes(all.begin(), all.end(), sub.begin(), sub.end());
            detail = std::to_string(sub.size()) + " facets vs " + std::to_string(all.size());
        }
        report.checks.push_back(
            CheckResult{"union-is-zonotope-minus-facets", subset, std::move(detail), true});
    }

    return out;
}

namespace {

std::string svg_coord(long long v) { return std::to_string(v); }

} // namespace

void export_svg(const GeometricComplex& complex, std::ostream& out) {
    if (complex.ambient != 2) throw std::invalid_argument("svg export needs a 2d complex");
    static const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                     "#cab2d6", "#ffff99", "#1f78b4", "#33a02c"};
    const long long kScale = 40, kMargin = 40;
    long long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const Vec2& p : complex.pts2) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, -p.y);
        max_y = std::max(max_y, -p.y);
    }
    const long long w = (max_x - min_x) * kScale + 2 * kMargin;
    const long long h = (max_y - min_y) * kScale + 2 * kMargin;
    auto X = [&](const Vec2& p) { return svg_coord((p.x - min_x) * kScale + kMargin); };
    auto Y = [&](const Vec2& p) { return svg_coord((-p.y - min_y) * kScale + kMargin); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    size_t color = 0;
    for (const GeometricCell& cell : complex.cells) {
        if (cell.dim != 2) continue;
        std::vector<Vec2> pts;
        for (int id : cell.vertices) pts.push_back(complex.pts2[static_cast<size_t>(id)]);
        out << "  <polygon points=\"";
        bool first = true;
        for (int local : convex_hull_2d(pts)) {
            if (!first) out << ' ';
            first = false;
            out << X(pts[static_cast<size_t>(local)]) << ',' << Y(pts[static_cast<size_t>(local)]);
        }
        out << "\" fill=\"" << kPalette[color % 8] << "\" stroke=\"none\"/>\n";
        ++color;
    }
    for (auto [a, b] : complex.hasse_edges) {
        const Vec2 &u = complex.pts2[static_cast<size_t>(a)], &v = complex.pts2[static_cast<size_t>(b)];
        out << "  <line x1=\"" << X(u) << "\" y1=\"" << Y(u) << "\" x2=\"" << X(v) << "\" y2=\""
            << Y(v) << "\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
}

void export_scene_json(const GeometricComplex& complex, std::ostream& out) {
    out << "{\n  \"s\": [";
    for (int i = 1; i <= complex.s.length(); ++i) out << (i > 1 ? "," : "") << complex.s(i);
    out << "],\n  \"ambient\": " << complex.ambient << ",\n  \"vertices\": [\n";
    for (size_t i = 0; i < complex.trees.size(); ++i) {
        out << "    {\"tree\": \"" << complex.trees[i].to_string() << "\", \"coords\": [";
        if (complex.ambient == 2)
            out << complex.pts2[i].x << "," << complex.pts2[i].y;
        else
            out << complex.pts3[i].x << "," << complex.pts3[i].y << "," << complex.pts3[i].z;
        out << "]}" << (i + 1 < complex.trees.size() ? "," : "") << "\n";
    }
    out << "  ],\n  \"edges\": [";
    for (size_t i = 0; i < complex.hasse_edges.size(); ++i)
        out << (i ? "," : "") << "[" << complex.hasse_edges[i].first << ","
            << complex.hasse_edges[i].second << "]";
    out << "],\n  \"cells\": [\n";
    for (size_t i = 0; i < complex.cells.size(); ++i) {
        out << "    {\"dim\": " << complex.cells[i].dim << ", \"vertices\": [";
        for (size_t j = 0; j < complex.cells[i].vertices.size(); ++j)
            out << (j ? "," : "") << complex.cells[i].vertices[j];
        out << "]}" << (i + 1 < complex.cells.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
}

void export_obj(const GeometricComplex& complex, std::ostream& out) {
    if (complex.ambient != 3) throw std::invalid_argument("obj export needs a 3d complex");
    out << "# s-permutahedron cells for s = (" << complex.s.to_string() << ")\n";
    for (const Vec3& p : complex.pts3) out << "v " << p.x << ' ' << p.y << ' ' << p.z << "\n";
    size_t cell_counter = 0;
    for (const GeometricCell& cell : complex.cells) {
        if (cell.dim != 3) continue;
        out << "g cell_" << cell_counter++ << "\n";
        std::vector<Vec3> pts;
        for (int id : cell.vertices) pts.push_back(complex.pts3[static_cast<size_t>(id)]);
        const Hull3 hull = convex_hull_3d(pts);
        for (const HullFacet& facet : hull.facets) {
            out << "f";
            for (int local : facet.cycle) out << ' ' << cell.vertices[static_cast<size_t>(local)] + 1;
            out << "\n";
        }
    }
}

} // namespace sperm

