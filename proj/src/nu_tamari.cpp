#include "sperm/nu_tamari.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sperm {

LatticePath::LatticePath(std::string steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("path must be nonempty");
    for (char ch : steps_)
        if (ch != 'N' && ch != 'E')
            throw std::invalid_argument("path steps must be N or E");
    for (char ch : steps_) {
        if (ch == 'N') ++height_;
        else ++width_;
    }
    row_width_.assign(static_cast<size_t>(height_) + 1, 0);
    int x = 0, y = 0;
    for (char ch : steps_) {
        if (ch == 'N') ++y;
        else row_width_[static_cast<size_t>(y)] = ++x;
    }
    // every row extends at least as far as the rows below it
    for (int r = 1; r <= height_; ++r)
        row_width_[static_cast<size_t>(r)] =
            std::max(row_width_[static_cast<size_t>(r)], row_width_[static_cast<size_t>(r) - 1]);
}

LatticePath LatticePath::from_composition(const WeakComposition& s) {
    std::string steps;
    for (int i = 1; i <= s.length(); ++i) {
        steps += 'N';
        steps.append(static_cast<size_t>(s(i)), 'E');
    }
    return LatticePath(std::move(steps));
}

std::vector<GridPoint> points_above(const LatticePath& path) {
    std::vector<GridPoint> out;
    for (int y = 0; y <= path.height(); ++y)
        for (int x = 0; x <= path.row_width(y); ++x) out.push_back(GridPoint{x, y});
    std::sort(out.begin(), out.end());
    return out;
}

bool are_nu_compatible(GridPoint p, GridPoint q, const LatticePath& path) {
    if (!path.contains(p) || !path.contains(q))
        throw std::invalid_argument("point outside the region above the path");
    if (p.x == q.x || p.y == q.y) return true;
    if (p.x > q.x) std::swap(p, q);
    if (p.y > q.y) return true;  // northwest/southeast position
    const GridPoint southeast{q.x, p.y};
    return !path.contains(southeast);
}

bool NuTree::contains(GridPoint p) const {
    return std::binary_search(nodes.begin(), nodes.end(), p);
}

namespace {

// Bron-Kerbosch with pivoting over the compatibility graph.
void max_cliques(const std::vector<std::vector<bool>>& adj, std::vector<int>& R,
                 std::vector<int> P, std::vector<int> X, std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    int pivot = !P.empty() ? P.front() : X.front();
    size_t best = 0;
    for (int candidate : P) {
        size_t deg = 0;
        for (int v : P)
            if (adj[static_cast<size_t>(candidate)][static_cast<size_t>(v)]) ++deg;
        if (deg >= best) {
            best = deg;
            pivot = candidate;
        }
    }
    std::vector<int> candidates;
    for (int v : P)
        if (!adj[static_cast<size_t>(pivot)][static_cast<size_t>(v)]) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> P2, X2;
        for (int u : P)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) P2.push_back(u);
        for (int u : X)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) X2.push_back(u);
        R.push_back(v);
        max_cliques(adj, R, std::move(P2), std::move(X2), out);
        R.pop_back();
        P.erase(std::remove(P.begin(), P.end(), v), P.end());
        X.push_back(v);
    }
}

} // namespace

std::vector<NuTree> enumerate_nu_trees(const LatticePath& path) {
    const std::vector<GridPoint> points = points_above(path);
    const size_t m = points.size();
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            adj[i][j] = adj[j][i] = are_nu_compatible(points[i], points[j], path);

    std::vector<std::vector<int>> cliques;
    std::vector<int> R, P(m), X;
    for (size_t i = 0; i < m; ++i) P[i] = static_cast<int>(i);
    max_cliques(adj, R, std::move(P), std::move(X), cliques);

    std::vector<NuTree> out;
    for (const auto& clique : cliques) {
        NuTree tree;
        for (int idx : clique) tree.nodes.push_back(points[static_cast<size_t>(idx)]);
        std::sort(tree.nodes.begin(), tree.nodes.end());
        if (static_cast<int>(tree.nodes.size()) != path.length() + 1)
            throw std::logic_error("maximal compatible set of unexpected size");
        out.push_back(std::move(tree));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Witnesses (p above, r right) for a rotation at q; the spanned rectangle
// must contain no other tree nodes.
std::optional<std::pair<GridPoint, GridPoint>> rotation_witnesses(const NuTree& tree, GridPoint q) {
    std::optional<GridPoint> above, right;
    for (const GridPoint& t : tree.nodes) {
        if (t.x == q.x && t.y > q.y && (!above || t.y < above->y)) above = t;
        if (t.y == q.y && t.x > q.x && (!right || t.x < right->x)) right = t;
    }
    if (!above || !right) return std::nullopt;
    for (const GridPoint& t : tree.nodes) {
        if (t == q || t == *above || t == *right) continue;
        if (q.x <= t.x && t.x <= right->x && q.y <= t.y && t.y <= above->y) return std::nullopt;
    }
    return std::make_pair(*above, *right);
}

} // namespace

std::vector<GridPoint> nu_ascents(const NuTree& tree, const LatticePath& path) {
    (void)path;
    std::vector<GridPoint> out;
    for (const GridPoint& q : tree.nodes)
        if (rotation_witnesses(tree, q)) out.push_back(q);
    return out;
}

NuTree nu_rotate(const NuTree& tree, GridPoint q, const LatticePath& path) {
    auto witnesses = rotation_witnesses(tree, q);
    if (!witnesses)
        throw std::invalid_argument("(" + std::to_string(q.x) + "," + std::to_string(q.y) +
                                    ") is not an ascent of the tree");
    const GridPoint upper_right{witnesses->second.x, witnesses->first.y};
    NuTree out;
    for (const GridPoint& t : tree.nodes)
        if (!(t == q)) out.nodes.push_back(t);
    out.nodes.push_back(upper_right);
    std::sort(out.nodes.begin(), out.nodes.end());
    for (size_t i = 0; i < out.nodes.size(); ++i)
        for (size_t j = i + 1; j < out.nodes.size(); ++j)
            if (!are_nu_compatible(out.nodes[i], out.nodes[j], path))
                throw std::logic_error("rotation produced an incompatible pair");
    return out;
}

bool is_covering_face(const CoveringNuFace& face, const LatticePath& path) {
    if (std::find(face.nodes.begin(), face.nodes.end(), path.root()) == face.nodes.end())
        return false;
    std::vector<bool> row(static_cast<size_t>(path.height()) + 1, false);
    std::vector<bool> col(static_cast<size_t>(path.width()) + 1, false);
    for (const GridPoint& p : face.nodes) {
        row[static_cast<size_t>(p.y)] = true;
        col[static_cast<size_t>(p.x)] = true;
    }
    return std::all_of(row.begin(), row.end(), [](bool b) { return b; }) &&
           std::all_of(col.begin(), col.end(), [](bool b) { return b; });
}

CoveringNuFace face_from_pair(const NuTree& tree, const std::vector<GridPoint>& ascents) {
    CoveringNuFace out;
    for (const GridPoint& p : tree.nodes)
        if (std::find(ascents.begin(), ascents.end(), p) == ascents.end()) out.nodes.push_back(p);
    std::sort(out.nodes.begin(), out.nodes.end());
    return out;
}

int face_dimension(const CoveringNuFace& face, const LatticePath& path) {
    return path.length() + 1 - static_cast<int>(face.nodes.size());
}

int NuLattice::index_of(const NuTree& t) const {
    auto it = std::lower_bound(trees.begin(), trees.end(), t);
    if (it == trees.end() || !(*it == t)) throw std::invalid_argument("tree not in lattice");
    return static_cast<int>(it - trees.begin());
}

NuLattice nu_lattice(const LatticePath& path) {
    NuLattice out{path, enumerate_nu_trees(path), {}, {}};
    const size_t m = out.trees.size();
    out.reachable.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) out.reachable[i][i] = true;
    for (size_t i = 0; i < m; ++i)
        for (const GridPoint& q : nu_ascents(out.trees[i], path)) {
            NuTree upper = nu_rotate(out.trees[i], q, path);
            out.edges.emplace_back(static_cast<int>(i), out.index_of(upper));
        }
    // reflexive-transitive closure of the rotation digraph
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [from, to] : out.edges)
            for (size_t i = 0; i < m; ++i)
                if (out.reachable[i][static_cast<size_t>(from)] &&
                    !out.reachable[i][static_cast<size_t>(to)]) {
                    out.reachable[i][static_cast<size_t>(to)] = true;
                    changed = true;
                }
    }
    return out;
}

NuFaceSet covering_faces(const LatticePath& path) {
    NuFaceSet out{path, {}, {}, {}};
    const std::vector<NuTree> trees = enumerate_nu_trees(path);
    std::map<CoveringNuFace, int> seen;
    for (const NuTree& tree : trees) {
        const std::vector<GridPoint> ascents = nu_ascents(tree, path);
        const size_t k = ascents.size();
        for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
            std::vector<GridPoint> chosen;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1ull << i)) chosen.push_back(ascents[i]);
            CoveringNuFace face = face_from_pair(tree, chosen);
            if (!is_covering_face(face, path))
                throw std::logic_error("tree minus ascents is not covering");
            if (face_dimension(face, path) != static_cast<int>(chosen.size()))
                throw std::logic_error("face dimension mismatch");
            seen[face] += 1;
        }
    }
    for (const auto& [face, count] : seen) {
        if (count != 1)
            throw std::logic_error("covering face arises from several (tree, ascents) pairs");
        out.faces.push_back(face);
        out.dimension.push_back(face_dimension(face, path));
    }
    int max_dim = 0;
    for (int d : out.dimension) max_dim = std::max(max_dim, d);
    out.count_by_dimension.assign(static_cast<size_t>(max_dim) + 1, 0);
    for (int d : out.dimension) out.count_by_dimension[static_cast<size_t>(d)] += 1;
    return out;
}

NuTree min_nu_tree_containing(const CoveringNuFace& face, const NuLattice& lattice) {
    std::vector<int> hits;
    for (size_t i = 0; i < lattice.trees.size(); ++i) {
        bool contains_all = true;
        for (const GridPoint& p : face.nodes)
            if (!lattice.trees[i].contains(p)) contains_all = false;
        if (contains_all) hits.push_back(static_cast<int>(i));
    }
    if (hits.empty()) throw std::invalid_argument("no tree contains the face");
    int lo = hits.front();
    for (int t : hits)
        if (lattice.leq(t, lo)) lo = t;
    for (int t : hits)
        if (!lattice.leq(lo, t)) throw std::logic_error("face has no unique minimal tree");
    return lattice.trees[static_cast<size_t>(lo)];
}

NuTree max_nu_tree_containing(const CoveringNuFace& face, const NuLattice& lattice) {
    std::vector<int> hits;
    for (size_t i = 0; i < lattice.trees.size(); ++i) {
        bool contains_all = true;
        for (const GridPoint& p : face.nodes)
            if (!lattice.trees[i].contains(p)) contains_all = false;
        if (contains_all) hits.push_back(static_cast<int>(i));
    }
    if (hits.empty()) throw std::invalid_argument("no tree contains the face");
    int hi = hits.front();
    for (int t : hits)
        if (lattice.leq(hi, t)) hi = t;
    for (int t : hits)
        if (!lattice.leq(t, hi)) throw std::logic_error("face has no unique maximal tree");
    return lattice.trees[static_cast<size_t>(hi)];
}

NuTree right_flush(const SDecreasingTree& tree) {
    if (!is_s_tamari(tree))
        throw std::invalid_argument("right flushing expects an s-Tamari tree: " + tree.to_string());
    const auto& s = tree.composition();
    const int n = s.length();

    // label every position (internal node or empty slot) by the number of
    // internal nodes traversed strictly before it in reverse preorder
    std::vector<int> height_count(static_cast<size_t>(n) + 1, 0);
    int seen = 0;
    auto walk = [&](auto&& self, int node) -> void {
        height_count[static_cast<size_t>(seen)] += 1;
        ++seen;
        for (int slot = s(node); slot >= 0; --slot) {
            if (int c = tree.child(node, slot); c != 0)
                self(self, c);
            else
                height_count[static_cast<size_t>(seen)] += 1;
        }
    };
    walk(walk, tree.root());

    const LatticePath path = LatticePath::from_composition(s.reversed());
    NuTree out;
    std::vector<char> blocked_column(static_cast<size_t>(path.width()) + 1, 0); // non-leftmost node below
    for (int y = 0; y <= n; ++y) {
        int needed = height_count[static_cast<size_t>(y)];
        if (needed == 0) continue;
        std::vector<int> placed;
        for (int x = path.row_width(y); x >= 0 && needed > 0; --x) {
            if (blocked_column[static_cast<size_t>(x)]) continue;
            placed.push_back(x);
            --needed;
        }
        if (needed > 0) throw std::logic_error("right flushing ran out of positions");
        const int leftmost = *std::min_element(placed.begin(), placed.end());
        for (int x : placed) {
            out.nodes.push_back(GridPoint{x, y});
            if (x != leftmost) blocked_column[static_cast<size_t>(x)] = 1;
        }
    }
    std::sort(out.nodes.begin(), out.nodes.end());
    if (static_cast<int>(out.nodes.size()) != path.length() + 1)
        throw std::logic_error("right flushing produced a set of unexpected size");
    return out;
}

IsoReport verify_isomorphism(const WeakComposition& s, std::int64_t max_trees) {
    const LatticePath path = LatticePath::from_composition(s.reversed());
    IsoReport report{s, path, 0, 0, {}};
    auto fail = [&](std::string msg) {
        if (report.violations.size() < 32) report.violations.push_back(std::move(msg));
    };

    const TamariFaceSet tamari = enumerate_tamari_faces(s, max_trees);
    const NuLattice nu = nu_lattice(path);

    if (tamari.trees.size() != nu.trees.size())
        fail("tree counts differ: " + std::to_string(tamari.trees.size()) + " vs " +
             std::to_string(nu.trees.size()));

    // vertex bijection
    std::vector<int> image(tamari.trees.size(), -1);
    std::vector<bool> hit(nu.trees.size(), false);
    for (size_t i = 0; i < tamari.trees.size(); ++i) {
        NuTree flushed = right_flush(tamari.trees[i]);
        int idx = nu.index_of(flushed);
        image[i] = idx;
        if (hit[static_cast<size_t>(idx)]) fail("right flushing is not injective");
        hit[static_cast<size_t>(idx)] = true;
        report.trees_matched += 1;
    }

    // order isomorphism
    for (size_t i = 0; i < tamari.trees.size(); ++i)
        for (size_t j = 0; j < tamari.trees.size(); ++j) {
            const bool lhs = leq(tamari.trees[i], tamari.trees[j]);
            const bool rhs = nu.leq(image[i], image[j]);
            if (lhs != rhs) {
                fail("order mismatch between " + tamari.trees[i].to_string() + " and " +
                     tamari.trees[j].to_string());
                break;
            }
        }

    // rotations commute; record the point of the corresponding nu-ascent
    std::map<std::pair<std::string, TamariAscent>, GridPoint> ascent_point;
    for (size_t i = 0; i < tamari.trees.size(); ++i) {
        const NuTree& flushed = nu.trees[static_cast<size_t>(image[i])];
        for (const TamariAscent& asc : tamari_ascents(tamari.trees[i])) {
            const NuTree rotated_image = right_flush(tamari_rotate(tamari.trees[i], asc));
            bool found = false;
            for (const GridPoint& q : nu_ascents(flushed, path))
                if (nu_rotate(flushed, q, path) == rotated_image) {
                    ascent_point[{tamari.trees[i].to_string(), asc}] = q;
                    found = true;
                    break;
                }
            if (!found)
                fail("rotation at (" + std::to_string(asc.a) + "," + std::to_string(asc.c) +
                     ") of " + tamari.trees[i].to_string() + " does not commute with flushing");
        }
    }
    if (!report.violations.empty()) return report;

    // face bijection, order reversing on containment
    const NuFaceSet nu_faces = covering_faces(path);
    std::map<CoveringNuFace, int> nu_face_index;
    for (size_t f = 0; f < nu_faces.faces.size(); ++f)
        nu_face_index.emplace(nu_faces.faces[f], static_cast<int>(f));

    std::map<std::string, size_t> tamari_index;
    for (size_t i = 0; i < tamari.trees.size(); ++i)
        tamari_index.emplace(tamari.trees[i].to_string(), i);

    std::vector<CoveringNuFace> mapped(tamari.faces.size());
    std::vector<bool> face_hit(nu_faces.faces.size(), false);
    for (size_t f = 0; f < tamari.faces.size(); ++f) {
        const PureTamariInterval& face = tamari.faces[f];
        const size_t lower_idx = tamari_index.at(face.lower.to_string());
        const NuTree& flushed = nu.trees[static_cast<size_t>(image[lower_idx])];
        std::vector<GridPoint> points;
        for (const TamariAscent& asc : face.ascents)
            points.push_back(ascent_point.at({face.lower.to_string(), asc}));
        CoveringNuFace mapped_face = face_from_pair(flushed, points);
        auto it = nu_face_index.find(mapped_face);
        if (it == nu_face_index.end()) {
            fail("face image is not a covering face");
            continue;
        }
        if (face_hit[static_cast<size_t>(it->second)]) fail("face map is not injective");
        face_hit[static_cast<size_t>(it->second)] = true;
        mapped[f] = std::move(mapped_face);
        report.faces_matched += 1;
    }
    if (tamari.faces.size() != nu_faces.faces.size())
        fail("face counts differ: " + std::to_string(tamari.faces.size()) + " vs " +
             std::to_string(nu_faces.faces.size()));
    if (!report.violations.empty()) return report;

    for (size_t f = 0; f < tamari.faces.size(); ++f)
        for (size_t g = 0; g < tamari.faces.size(); ++g) {
            const bool contained = leq(tamari.faces[g].lower, tamari.faces[f].lower) &&
                                   leq(tamari.faces[f].upper, tamari.faces[g].upper);
            const bool reversed = std::includes(mapped[f].nodes.begin(), mapped[f].nodes.end(),
                                                mapped[g].nodes.begin(), mapped[g].nodes.end());
            if (contained != reversed) {
                fail("face containment is not order-reversed");
                f = tamari.faces.size();
                break;
            }
        }
    return report;
}

} // namespace sperm
