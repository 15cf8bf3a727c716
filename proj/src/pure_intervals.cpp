#include "sperm/pure_intervals.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "sperm/enumeration.hpp"

namespace sperm {

namespace {

void require_comparable(const SDecreasingTree& lower, const SDecreasingTree& upper) {
    if (!leq(lower, upper))
        throw std::invalid_argument("trees are not comparable: " + lower.to_string() + " vs " +
                                    upper.to_string());
}

} // namespace

PureInterval make_pure_interval(const SDecreasingTree& lower, std::vector<TreeAscent> ascents) {
    std::sort(ascents.begin(), ascents.end());
    ascents.erase(std::unique(ascents.begin(), ascents.end()), ascents.end());
    SDecreasingTree upper = add_ascents(lower, ascents);
    return PureInterval{lower, std::move(ascents), std::move(upper)};
}

std::vector<Variation> variations(const SDecreasingTree& lower, const SDecreasingTree& upper) {
    require_comparable(lower, upper);
    const int n = lower.size();
    std::vector<Variation> out;
    for (int c = 2; c <= n; ++c)
        for (int a = 1; a < c; ++a)
            if (upper.card(c, a) > lower.card(c, a))
                out.push_back(Variation{c, a, lower.card(c, a),
                                        upper.card(c, a) - lower.card(c, a), false, false});

    auto varies = [&](int c, int a) { return upper.card(c, a) > lower.card(c, a); };

    for (Variation& var : out) {
        var.essential = true;
        for (int b = var.a + 1; b < var.c; ++b)
            if (lower.is_middle_descendant(var.a, b) && varies(var.c, b)) {
                var.essential = false;
                break;
            }
    }
    // minimality needs the essential flags of smaller pairs, computed above
    auto essential_at = [&](int b, int a) {
        for (const Variation& v : out)
            if (v.c == b && v.a == a) return v.essential;
        return false;
    };
    for (Variation& var : out) {
        if (!var.essential) continue;
        var.minimal_essential = true;
        for (int b = var.a + 1; b < var.c; ++b)
            if (essential_at(b, var.a)) {
                var.minimal_essential = false;
                break;
            }
    }
    std::sort(out.begin(), out.end(), [](const Variation& x, const Variation& y) {
        return x.c != y.c ? x.c < y.c : x.a < y.a;
    });
    return out;
}

std::vector<TreeAscent> minimal_essential_ascents(const SDecreasingTree& lower,
                                                  const SDecreasingTree& upper) {
    std::vector<TreeAscent> out;
    for (const Variation& var : variations(lower, upper))
        if (var.minimal_essential) out.push_back(TreeAscent{var.a, var.c, var.value});
    std::sort(out.begin(), out.end());
    return out;
}

bool is_pure_interval(const SDecreasingTree& lower, const SDecreasingTree& upper) {
    require_comparable(lower, upper);
    const std::vector<Variation> vars = variations(lower, upper);
    for (const Variation& v : vars)
        if (v.amplitude != 1) return false;

    auto find = [&](int c, int a) -> const Variation* {
        for (const Variation& v : vars)
            if (v.c == c && v.a == a) return &v;
        return nullptr;
    };

    // (c,a)_v and (b,a)_w variations force (c,b)_v
    for (const Variation& ca : vars)
        for (int b = ca.a + 1; b < ca.c; ++b)
            if (find(b, ca.a) != nullptr) {
                const Variation* cb = find(ca.c, b);
                if (cb == nullptr || cb->value != ca.value) return false;
            }

    const auto& s = lower.composition();
    for (const Variation& ca : vars) {
        if (!ca.essential) continue;
        for (int b = ca.a + 1; b < ca.c; ++b) {
            if (s(b) == 0) continue;
            const Variation* cb = find(ca.c, b);
            if (cb == nullptr || !cb->essential || cb->value != ca.value) continue;
            const Variation* ba = find(b, ca.a);
            if (ba == nullptr || ba->value != 0) return false;
        }
    }
    return true;
}

std::vector<int> variation_path(const PureInterval& interval, int c, int a) {
    const std::vector<Variation> vars = variations(interval.lower, interval.upper);
    const Variation* target = nullptr;
    for (const Variation& v : vars)
        if (v.c == c && v.a == a) target = &v;
    if (target == nullptr)
        throw std::invalid_argument("(" + std::to_string(c) + "," + std::to_string(a) +
                                    ") is not a variation of the interval");
    const int value = target->value;
    const auto& s = interval.lower.composition();
    std::vector<int> path{c};
    for (int ci = c - 1; ci >= a; --ci) {
        bool essential_with_value = false;
        for (const Variation& v : vars)
            if (v.c == c && v.a == ci && v.value == value && v.essential) essential_with_value = true;
        if (!essential_with_value) continue;
        if (ci == a || interval.lower.card(ci, a) < s(ci)) path.push_back(ci);
    }
    return path;
}

bool is_compatible_variation(const PureInterval& p1, const PureInterval& p2, int c, int a, int v) {
    const SDecreasingTree& t1 = p1.lower;
    const SDecreasingTree& t2 = p2.lower;
    if (t1.card(c, a) != v || t2.card(c, a) != v) return false;
    if (p1.upper.card(c, a) <= v || p2.upper.card(c, a) <= v) return false;
    const auto& s = t1.composition();
    for (int b = a + 1; b < c; ++b) {
        if (t2.is_middle_descendant(a, b) && t1.card(b, a) != s(b)) return false;
        if (t1.is_middle_descendant(a, b) && t2.card(b, a) != s(b)) return false;
    }
    return true;
}

std::optional<PureInterval> intersect(const PureInterval& p1, const PureInterval& p2) {
    if (p1.lower.composition() != p2.lower.composition())
        throw std::invalid_argument("faces belong to different compositions");

    SDecreasingTree bottom = join(p1.lower, p2.lower);
    if (!leq(bottom, p1.upper) || !leq(bottom, p2.upper)) return std::nullopt;

    const int n = bottom.size();
    std::vector<std::pair<int, int>> compatible;  // (c,a)
    for (int c = 2; c <= n; ++c)
        for (int a = 1; a < c; ++a) {
            const int v = p1.lower.card(c, a);
            if (p2.lower.card(c, a) != v) continue;
            if (is_compatible_variation(p1, p2, c, a, v)) compatible.emplace_back(c, a);
        }

    std::vector<TreeAscent> ascents;
    for (auto [c, a] : compatible) {
        bool minimal = true;
        for (auto [c2, a2] : compatible)
            if (a2 == a && c2 > a && c2 < c) minimal = false;
        if (minimal) ascents.push_back(TreeAscent{a, c, bottom.card(c, a)});
    }
    return make_pure_interval(bottom, std::move(ascents));
}

FaceSet enumerate_faces(const WeakComposition& s, std::int64_t max_trees) {
    FaceSet out{s, enumerate_trees(s, max_trees), {}, {}};
    out.count_by_dimension.assign(static_cast<size_t>(s.length()) + 1, 0);
    std::vector<std::vector<PureInterval>> graded(static_cast<size_t>(s.length()) + 1);
    for (const SDecreasingTree& tree : out.trees) {
        const std::vector<TreeAscent> ascents = tree_ascents(tree);
        const size_t k = ascents.size();
        for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
            std::vector<TreeAscent> chosen;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1ull << i)) chosen.push_back(ascents[i]);
            const size_t dim = chosen.size();
            graded[dim].push_back(make_pure_interval(tree, std::move(chosen)));
            out.count_by_dimension[dim] += 1;
        }
    }
    for (auto& level : graded)
        for (auto& face : level) out.faces.push_back(std::move(face));
    while (!out.count_by_dimension.empty() && out.count_by_dimension.back() == 0)
        out.count_by_dimension.pop_back();
    return out;
}

namespace {

// Word-packed tree sets for interval arithmetic over an enumerated lattice.
struct Bitset {
    std::vector<std::uint64_t> words;
    explicit Bitset(size_t bits = 0) : words((bits + 63) / 64, 0) {}
    void set(size_t i) { words[i / 64] |= 1ull << (i % 64); }
    bool test(size_t i) const { return words[i / 64] & (1ull << (i % 64)); }
    bool empty() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }
    static Bitset intersect(const Bitset& x, const Bitset& y) {
        Bitset out;
        out.words.resize(x.words.size());
        for (size_t i = 0; i < x.words.size(); ++i) out.words[i] = x.words[i] & y.words[i];
        return out;
    }
    bool operator==(const Bitset& o) const { return words == o.words; }
};

} // namespace

ComplexReport verify_complex(const WeakComposition& s, std::int64_t max_trees, int threads) {
    FaceSet faces = enumerate_faces(s, max_trees);
    ComplexReport report{s, faces.count_by_dimension, 0, 0, {}};

    const size_t num_trees = faces.trees.size();
    std::unordered_map<std::string, size_t> tree_index;
    for (size_t i = 0; i < num_trees; ++i) tree_index.emplace(faces.trees[i].to_string(), i);

    // leq as bitsets: up[i] = set of j with tree_i <= tree_j
    std::vector<Bitset> up(num_trees, Bitset(num_trees));
    for (size_t i = 0; i < num_trees; ++i)
        for (size_t j = 0; j < num_trees; ++j)
            if (leq(faces.trees[i], faces.trees[j])) up[i].set(j);
    std::vector<Bitset> down(num_trees, Bitset(num_trees));
    for (size_t i = 0; i < num_trees; ++i)
        for (size_t j = 0; j < num_trees; ++j)
            if (up[j].test(i)) down[i].set(j);

    struct FaceData {
        size_t lower = 0, upper = 0;
        Bitset members;
    };
    std::vector<FaceData> data(faces.faces.size());
    std::unordered_map<std::string, size_t> face_index;
    auto face_key = [](const PureInterval& f) {
        std::string key = f.lower.to_string();
        for (const TreeAscent& asc : f.ascents)
            key += "|" + std::to_string(asc.a) + "," + std::to_string(asc.c);
        return key;
    };
    for (size_t f = 0; f < faces.faces.size(); ++f) {
        const PureInterval& face = faces.faces[f];
        FaceData d;
        d.lower = tree_index.at(face.lower.to_string());
        d.upper = tree_index.at(face.upper.to_string());
        d.members = Bitset::intersect(up[d.lower], down[d.upper]);
        data[f] = std::move(d);
        face_index.emplace(face_key(face), f);
    }

    std::vector<std::string> violations;
    std::mutex violations_mutex;
    auto record = [&](std::string msg) {
        std::lock_guard<std::mutex> hold(violations_mutex);
        if (violations.size() < 32) violations.push_back(std::move(msg));
    };

    // closure under subfaces
    std::atomic<std::int64_t> subfaces{0};
    for (size_t f = 0; f < faces.faces.size(); ++f) {
        const PureInterval& face = faces.faces[f];
        for (size_t ti = 0; ti < num_trees; ++ti) {
            if (!data[f].members.test(ti)) continue;
            const SDecreasingTree& inner = faces.trees[ti];
            const std::vector<TreeAscent> inner_ascents = tree_ascents(inner);
            const size_t k = inner_ascents.size();
            for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
                std::vector<TreeAscent> chosen;
                for (size_t i = 0; i < k; ++i)
                    if (mask & (1ull << i)) chosen.push_back(inner_ascents[i]);
                PureInterval sub = make_pure_interval(inner, std::move(chosen));
                if (!leq(sub.upper, face.upper)) continue;
                subfaces.fetch_add(1);
                if (!face_index.count(face_key(sub)))
                    record("subface of " + face_key(face) + " missing: " + face_key(sub));
            }
        }
    }
    report.subfaces_checked = subfaces.load();

    // pairwise intersections against the construction
    const size_t total = faces.faces.size();
    std::atomic<size_t> next{0};
    std::atomic<std::int64_t> pairs{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= total) break;
            for (size_t j = i; j < total; ++j) {
                pairs.fetch_add(1);
                Bitset common = Bitset::intersect(data[i].members, data[j].members);
                std::optional<PureInterval> built = intersect(faces.faces[i], faces.faces[j]);
                if (common.empty()) {
                    if (built)
                        record("faces " + face_key(faces.faces[i]) + " and " +
                               face_key(faces.faces[j]) + ": construction nonempty but sets disjoint");
                    continue;
                }
                // brute: locate the unique min and max of the common set
                std::vector<size_t> members;
                for (size_t t = 0; t < num_trees; ++t)
                    if (common.test(t)) members.push_back(t);
                size_t lo = members.front(), hi = members.front();
                for (size_t t : members) {
                    if (up[t].test(lo)) lo = t;
                    if (up[hi].test(t)) hi = t;
                }
                bool bounded = true;
                for (size_t t : members)
                    if (!up[lo].test(t) || !up[t].test(hi)) bounded = false;
                if (!bounded) {
                    record("faces " + face_key(faces.faces[i]) + " and " + face_key(faces.faces[j]) +
                           ": intersection has no unique extrema");
                    continue;
                }
                if (!(common == Bitset::intersect(up[lo], down[hi]))) {
                    record("faces " + face_key(faces.faces[i]) + " and " + face_key(faces.faces[j]) +
                           ": intersection is not a full interval");
                    continue;
                }
                if (!is_pure_interval(faces.trees[lo], faces.trees[hi])) {
                    record("faces " + face_key(faces.faces[i]) + " and " + face_key(faces.faces[j]) +
                           ": intersection fails the pure-interval characterization");
                    continue;
                }
                if (!built) {
                    record("faces " + face_key(faces.faces[i]) + " and " + face_key(faces.faces[j]) +
                           ": construction empty but sets intersect");
                    continue;
                }
                size_t built_lo = tree_index.at(built->lower.to_string());
                size_t built_hi = tree_index.at(built->upper.to_string());
                if (built_lo != lo || built_hi != hi)
                    record("faces " + face_key(faces.faces[i]) + " and " + face_key(faces.faces[j]) +
                           ": construction disagrees with the brute-force interval");
            }
        }
    };
    std::vector<std::thread> pool;
    const int workers = std::max(1, threads);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    report.pairs_checked = pairs.load();
    report.violations = std::move(violations);
    return report;
}

} // namespace sperm
