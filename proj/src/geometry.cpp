#include "sperm/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

namespace sperm {

namespace {

long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long checked_ll(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}

} // namespace

Rat::Rat(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (long long g = gcd_ll(num_, den_); g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rat operator+(const Rat& a, const Rat& b) {
    __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 den = static_cast<__int128>(a.den_) * b.den_;
    __int128 g = 1;
    {
        __int128 x = num < 0 ? -num : num, y = den;
        while (y) {
            __int128 t = x % y;
            x = y;
            y = t;
        }
        g = x == 0 ? 1 : x;
    }
    return Rat(checked_ll(num / g, "+"), checked_ll(den / g, "+"));
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    const long long g1 = gcd_ll(a.num_, b.den_);
    const long long g2 = gcd_ll(b.num_, a.den_);
    __int128 num = static_cast<__int128>(a.num_ / (g1 ? g1 : 1)) * (b.num_ / (g2 ? g2 : 1));
    __int128 den = static_cast<__int128>(a.den_ / (g2 ? g2 : 1)) * (b.den_ / (g1 ? g1 : 1));
    return Rat(checked_ll(num, "*"), checked_ll(den, "*"));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    return a * Rat(b.den_, b.num_);
}

bool Rat::operator<(const Rat& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rat::to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

RationalPoint coords_v(const SDecreasingTree& tree) {
    const int n = tree.size();
    RationalPoint p(static_cast<size_t>(n), Rat(0));
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            const Rat c(tree.card(j, i));
            p[static_cast<size_t>(i) - 1] = p[static_cast<size_t>(i) - 1] + c;
            p[static_cast<size_t>(j) - 1] = p[static_cast<size_t>(j) - 1] - c;
        }
    return p;
}

RationalPoint coords_3d_fixed(const SDecreasingTree& tree) {
    if (tree.size() != 4) throw std::invalid_argument("corrected coordinates need length 4");
    const auto& s = tree.composition();
    RationalPoint p(4, Rat(0));
    for (int j = 2; j <= 4; ++j)
        for (int i = 1; i < j; ++i) {
            long long offset = 0;
            if (j == 3) {
                const int c3 = tree.card(3, i);
                if (c3 == s(3))
                    offset = 2ll * s(3);
                else if (c3 > 0)
                    offset = s(3) + (tree.card(4, 1) - tree.card(4, 3)) +
                             (tree.card(4, 2) - tree.card(4, 3));
            }
            const Rat c(3ll * tree.card(j, i) + offset);
            p[static_cast<size_t>(i) - 1] = p[static_cast<size_t>(i) - 1] + c;
            p[static_cast<size_t>(j) - 1] = p[static_cast<size_t>(j) - 1] - c;
        }
    return p;
}

namespace {

long long integral(const Rat& r, const char* what) {
    if (!r.is_integer()) throw std::logic_error(std::string("expected integral coordinate in ") + what);
    return r.num();
}

} // namespace

Vec2 project_sum_zero_2d(const RationalPoint& p) {
    if (p.size() != 3) throw std::invalid_argument("2d projection needs points in R^3");
    const long long a = integral(p[0], "project2"), b = integral(p[1], "project2"),
                    c = integral(p[2], "project2");
    return Vec2{a - b, a + b - 2 * c};
}

Vec3 project_sum_zero_3d(const RationalPoint& p) {
    if (p.size() != 4) throw std::invalid_argument("3d projection needs points in R^4");
    const long long a = integral(p[0], "project3"), b = integral(p[1], "project3"),
                    c = integral(p[2], "project3"), d = integral(p[3], "project3");
    return Vec3{a - b, a + b - 2 * c, a + b + c - 3 * d};
}

std::vector<RationalPoint> zonotope_vertices(const WeakComposition& s) {
    const int n = s.length();
    if (n > 6) throw std::invalid_argument("zonotope enumeration supported up to length 6");
    std::vector<std::pair<int, int>> generators;  // (i,j), i<j, with s(j) > 0
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            if (s(j) > 0) generators.emplace_back(i, j);

    std::vector<RationalPoint> sums;
    const size_t count = 1ull << generators.size();
    for (size_t mask = 0; mask < count; ++mask) {
        RationalPoint p(static_cast<size_t>(n), Rat(0));
        for (size_t g = 0; g < generators.size(); ++g) {
            auto [i, j] = generators[g];
            const int target = (mask >> g) & 1 ? i : j;
            p[static_cast<size_t>(target) - 1] = p[static_cast<size_t>(target) - 1] + Rat(s(j));
        }
        sums.push_back(std::move(p));
    }
    std::sort(sums.begin(), sums.end(), [](const RationalPoint& x, const RationalPoint& y) {
        for (size_t k = 0; k < x.size(); ++k) {
            if (x[k] < y[k]) return true;
            if (y[k] < x[k]) return false;
        }
        return false;
    });
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

    // keep only hull vertices; the points live in a hyperplane of constant sum
    std::vector<RationalPoint> out;
    if (n == 1) {
        out.push_back(sums.front());
    } else if (n == 2) {
        out.push_back(sums.front());
        if (sums.size() > 1) out.push_back(sums.back());
    } else if (n == 3) {
        std::vector<Vec2> pts;
        for (const auto& p : sums) pts.push_back(project_sum_zero_2d(p));
        for (int idx : convex_hull_2d(pts)) out.push_back(sums[static_cast<size_t>(idx)]);
    } else if (n == 4) {
        std::vector<Vec3> pts;
        for (const auto& p : sums) pts.push_back(project_sum_zero_3d(p));
        Hull3 hull = convex_hull_3d(pts);
        for (int idx : hull.vertices) out.push_back(sums[static_cast<size_t>(idx)]);
    } else {
        throw std::invalid_argument("zonotope vertex extraction supported up to length 4");
    }
    return out;
}

std::vector<int> convex_hull_2d(const std::vector<Vec2>& pts) {
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return pts[static_cast<size_t>(i)] < pts[static_cast<size_t>(j)];
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](int i, int j) {
                                return pts[static_cast<size_t>(i)] == pts[static_cast<size_t>(j)];
                            }),
                order.end());
    if (order.size() <= 2) return order;

    auto cross = [&](int o, int a, int b) {
        const Vec2 &P = pts[static_cast<size_t>(o)], &A = pts[static_cast<size_t>(a)],
                   &B = pts[static_cast<size_t>(b)];
        return static_cast<__int128>(A.x - P.x) * (B.y - P.y) -
               static_cast<__int128>(A.y - P.y) * (B.x - P.x);
    };

    std::vector<int> hull;
    for (int pass = 0; pass < 2; ++pass) {
        const size_t base = hull.size();
        for (int idx : order) {
            while (hull.size() >= base + 2 &&
                   cross(hull[hull.size() - 2], hull[hull.size() - 1], idx) <= 0)
                hull.pop_back();
            hull.push_back(idx);
        }
        hull.pop_back();
        std::reverse(order.begin(), order.end());
    }
    return hull;  // counterclockwise, strict corners only
}

long long twice_area(const std::vector<Vec2>& cycle) {
    __int128 sum = 0;
    for (size_t i = 0; i < cycle.size(); ++i) {
        const Vec2 &a = cycle[i], &b = cycle[(i + 1) % cycle.size()];
        sum += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
    }
    if (sum < 0) sum = -sum;
    return checked_ll(sum, "area");
}

namespace {

struct Tri {
    int a, b, c;
    long long nx, ny, nz;  // outward normal
    __int128 d;            // n . p = d on the plane
};

__int128 dot_n(const Tri& t, const Vec3& p) {
    return static_cast<__int128>(t.nx) * p.x + static_cast<__int128>(t.ny) * p.y +
           static_cast<__int128>(t.nz) * p.z;
}

Tri make_tri(const std::vector<Vec3>& pts, int a, int b, int c) {
    const Vec3 &A = pts[static_cast<size_t>(a)], &B = pts[static_cast<size_t>(b)],
               &C = pts[static_cast<size_t>(c)];
    const long long ux = B.x - A.x, uy = B.y - A.y, uz = B.z - A.z;
    const long long vx = C.x - A.x, vy = C.y - A.y, vz = C.z - A.z;
    Tri t{a, b, c,
          checked_ll(static_cast<__int128>(uy) * vz - static_cast<__int128>(uz) * vy, "normal"),
          checked_ll(static_cast<__int128>(uz) * vx - static_cast<__int128>(ux) * vz, "normal"),
          checked_ll(static_cast<__int128>(ux) * vy - static_cast<__int128>(uy) * vx, "normal"),
          0};
    t.d = dot_n(t, A);
    return t;
}

} // namespace

Hull3 convex_hull_3d(const std::vector<Vec3>& pts) {
    const size_t m = pts.size();
    // initial affinely independent quadruple
    int p0 = 0, p1 = -1, p2 = -1, p3 = -1;
    for (size_t i = 1; i < m && p1 < 0; ++i)
        if (!(pts[i] == pts[0])) p1 = static_cast<int>(i);
    if (p1 < 0) throw std::invalid_argument("hull input is a single point");
    for (size_t i = 1; i < m && p2 < 0; ++i) {
        Tri t = make_tri(pts, p0, p1, static_cast<int>(i));
        if (t.nx || t.ny || t.nz) p2 = static_cast<int>(i);
    }
    if (p2 < 0) throw std::invalid_argument("hull input is collinear");
    {
        Tri base = make_tri(pts, p0, p1, p2);
        for (size_t i = 0; i < m && p3 < 0; ++i)
            if (dot_n(base, pts[i]) != base.d) p3 = static_cast<int>(i);
    }
    if (p3 < 0) throw std::invalid_argument("hull input is coplanar");

    std::vector<Tri> tris;
    {
        auto oriented = [&](int a, int b, int c, int opposite) {
            Tri t = make_tri(pts, a, b, c);
            if (dot_n(t, pts[static_cast<size_t>(opposite)]) > t.d) t = make_tri(pts, a, c, b);
            return t;
        };
        tris.push_back(oriented(p0, p1, p2, p3));
        tris.push_back(oriented(p0, p1, p3, p2));
        tris.push_back(oriented(p0, p2, p3, p1));
        tris.push_back(oriented(p1, p2, p3, p0));
    }

    for (size_t i = 0; i < m; ++i) {
        const int pi = static_cast<int>(i);
        if (pi == p0 || pi == p1 || pi == p2 || pi == p3) continue;
        std::vector<char> visible(tris.size(), 0);
        bool any = false;
        for (size_t t = 0; t < tris.size(); ++t)
            if (dot_n(tris[t], pts[i]) > tris[t].d) {
                visible[t] = 1;
                any = true;
            }
        if (!any) continue;
        // horizon: directed edges of visible triangles whose reverse sits in an invisible one
        std::set<std::pair<int, int>> visible_edges;
        for (size_t t = 0; t < tris.size(); ++t)
            if (visible[t]) {
                visible_edges.emplace(tris[t].a, tris[t].b);
                visible_edges.emplace(tris[t].b, tris[t].c);
                visible_edges.emplace(tris[t].c, tris[t].a);
            }
        std::vector<std::pair<int, int>> horizon;
        for (const auto& e : visible_edges)
            if (!visible_edges.count({e.second, e.first})) horizon.push_back(e);
        std::vector<Tri> next;
        for (size_t t = 0; t < tris.size(); ++t)
            if (!visible[t]) next.push_back(tris[t]);
        for (const auto& [u, v] : horizon) next.push_back(make_tri(pts, u, v, pi));
        tris = std::move(next);
    }

    // sanity: closed orientable surface with every point inside or on it
    {
        std::set<std::pair<int, int>> directed;
        for (const Tri& t : tris) {
            directed.emplace(t.a, t.b);
            directed.emplace(t.b, t.c);
            directed.emplace(t.c, t.a);
        }
        for (const auto& e : directed)
            if (!directed.count({e.second, e.first}))
                throw std::logic_error("hull surface is not closed");
        for (const Tri& t : tris)
            for (size_t i = 0; i < m; ++i)
                if (dot_n(t, pts[i]) > t.d) throw std::logic_error("hull misses a point");
    }

    // merge coplanar triangles into facets
    std::map<std::array<long long, 4>, std::vector<size_t>> groups;
    for (size_t t = 0; t < tris.size(); ++t) {
        long long g = gcd_ll(gcd_ll(tris[t].nx, tris[t].ny),
                             gcd_ll(tris[t].nz, checked_ll(tris[t].d, "plane")));
        if (g == 0) g = 1;
        groups[{tris[t].nx / g, tris[t].ny / g, tris[t].nz / g, checked_ll(tris[t].d, "plane") / g}]
            .push_back(t);
    }

    Hull3 out;
    std::set<int> vertex_set;
    std::set<std::pair<int, int>> edge_set;
    for (const auto& [plane, members] : groups) {
        std::map<int, int> successor;  // boundary walk inside the facet
        std::set<std::pair<int, int>> dir;
        for (size_t t : members) {
            dir.emplace(tris[t].a, tris[t].b);
            dir.emplace(tris[t].b, tris[t].c);
            dir.emplace(tris[t].c, tris[t].a);
        }
        for (const auto& e : dir)
            if (!dir.count({e.second, e.first})) successor[e.first] = e.second;
        if (successor.empty()) throw std::logic_error("degenerate hull facet");
        std::vector<int> cycle;
        const int start = successor.begin()->first;
        for (int v = start; cycle.empty() || v != start; v = successor.at(v)) cycle.push_back(v);
        // drop collinear corners
        auto collinear = [&](int a, int b, int c) {
            Tri t = make_tri(pts, a, b, c);
            return t.nx == 0 && t.ny == 0 && t.nz == 0;
        };
        for (bool changed = true; changed && cycle.size() > 2;) {
            changed = false;
            for (size_t k = 0; k < cycle.size(); ++k) {
                const int prev = cycle[(k + cycle.size() - 1) % cycle.size()];
                const int next = cycle[(k + 1) % cycle.size()];
                if (collinear(prev, cycle[k], next)) {
                    cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(k));
                    changed = true;
                    break;
                }
            }
        }
        // canonical start for reproducible output
        const size_t lo =
            static_cast<size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
        std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(lo), cycle.end());
        HullFacet facet;
        facet.cycle = cycle;
        facet.plane = plane;
        for (size_t k = 0; k < cycle.size(); ++k) {
            vertex_set.insert(cycle[k]);
            int a = cycle[k], b = cycle[(k + 1) % cycle.size()];
            edge_set.emplace(std::min(a, b), std::max(a, b));
        }
        out.facets.push_back(std::move(facet));
    }
    out.vertices.assign(vertex_set.begin(), vertex_set.end());
    out.edges.assign(edge_set.begin(), edge_set.end());

    // 6 * volume by fanning from the first vertex
    const Vec3& origin = pts[static_cast<size_t>(out.vertices.front())];
    __int128 six_vol = 0;
    for (const HullFacet& facet : out.facets) {
        bool contains_origin = false;
        for (int v : facet.cycle)
            if (v == out.vertices.front()) contains_origin = true;
        if (contains_origin) continue;
        const Vec3& c0 = pts[static_cast<size_t>(facet.cycle[0])];
        for (size_t k = 1; k + 1 < facet.cycle.size(); ++k) {
            const Vec3& c1 = pts[static_cast<size_t>(facet.cycle[k])];
            const Vec3& c2 = pts[static_cast<size_t>(facet.cycle[k + 1])];
            const long long ax = c0.x - origin.x, ay = c0.y - origin.y, az = c0.z - origin.z;
            const long long bx = c1.x - origin.x, by = c1.y - origin.y, bz = c1.z - origin.z;
            const long long cx = c2.x - origin.x, cy = c2.y - origin.y, cz = c2.z - origin.z;
            six_vol += static_cast<__int128>(ax) * (static_cast<__int128>(by) * cz - static_cast<__int128>(bz) * cy) -
                       static_cast<__int128>(ay) * (static_cast<__int128>(bx) * cz - static_cast<__int128>(bz) * cx) +
                       static_cast<__int128>(az) * (static_cast<__int128>(bx) * cy - static_cast<__int128>(by) * cx);
        }
    }
    if (six_vol < 0) six_vol = -six_vol;
    out.six_volume = checked_ll(six_vol, "volume");
    return out;
}

} // namespace sperm
