#include "sperm/tamari.hpp"

#include <algorithm>
#include <unordered_map>

namespace sperm {

bool is_s_tamari(const SDecreasingTree& tree) {
    const int n = tree.size();
    for (int c = 3; c <= n; ++c)
        for (int b = 2; b < c; ++b)
            for (int a = 1; a < b; ++a)
                if (tree.card(c, a) > tree.card(c, b)) return false;
    return true;
}

std::vector<TamariAscent> tamari_ascents(const SDecreasingTree& tree) {
    std::vector<TamariAscent> out;
    const auto& s = tree.composition();
    for (int c = 1; c <= tree.size(); ++c)
        for (int slot = 0; slot < s(c); ++slot)  // right child (slot s(c)) excluded
            if (int a = tree.child(c, slot); a != 0) out.push_back(TamariAscent{a, c});
    std::sort(out.begin(), out.end());
    return out;
}

SDecreasingTree tamari_rotate(const SDecreasingTree& tree, const TamariAscent& ascent) {
    return tamari_add_ascents(tree, {ascent});
}

SDecreasingTree tamari_add_ascents(const SDecreasingTree& tree,
                                   const std::vector<TamariAscent>& ascents) {
    if (!is_s_tamari(tree)) throw std::invalid_argument("tree is not s-Tamari: " + tree.to_string());
    const std::vector<TamariAscent> valid = tamari_ascents(tree);
    InversionMultiset inv = tree.inversions();
    for (const TamariAscent& asc : ascents) {
        if (std::find(valid.begin(), valid.end(), asc) == valid.end())
            throw std::invalid_argument("(" + std::to_string(asc.a) + "," + std::to_string(asc.c) +
                                        ") is not a Tamari-ascent of " + tree.to_string());
        inv.set_card(asc.c, asc.a, tree.card(asc.c, asc.a) + 1);
    }
    SDecreasingTree out =
        SDecreasingTree::from_inversions(transitive_closure(inv), tree.composition());
    if (!is_s_tamari(out))
        throw std::logic_error("rotation left the Tamari family at " + tree.to_string());
    return out;
}

PureTamariInterval make_pure_tamari_interval(const SDecreasingTree& lower,
                                             std::vector<TamariAscent> ascents) {
    std::sort(ascents.begin(), ascents.end());
    ascents.erase(std::unique(ascents.begin(), ascents.end()), ascents.end());
    SDecreasingTree upper = tamari_add_ascents(lower, ascents);
    return PureTamariInterval{lower, std::move(ascents), std::move(upper)};
}

std::vector<SDecreasingTree> enumerate_tamari_trees(const WeakComposition& s, std::int64_t max_trees) {
    std::vector<SDecreasingTree> out;
    for_each_tree(s, max_trees, [&](const SDecreasingTree& t) {
        if (is_s_tamari(t)) out.push_back(t);
    });
    std::sort(out.begin(), out.end());
    return out;
}

TamariFaceSet enumerate_tamari_faces(const WeakComposition& s, std::int64_t max_trees) {
    TamariFaceSet out{s, enumerate_tamari_trees(s, max_trees), {}, {}};
    out.count_by_dimension.assign(static_cast<size_t>(s.length()) + 1, 0);
    std::vector<std::vector<PureTamariInterval>> graded(static_cast<size_t>(s.length()) + 1);
    for (const SDecreasingTree& tree : out.trees) {
        const std::vector<TamariAscent> ascents = tamari_ascents(tree);
        const size_t k = ascents.size();
        for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
            std::vector<TamariAscent> chosen;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1ull << i)) chosen.push_back(ascents[i]);
            const size_t dim = chosen.size();
            graded[dim].push_back(make_pure_tamari_interval(tree, std::move(chosen)));
            out.count_by_dimension[dim] += 1;
        }
    }
    for (auto& level : graded)
        for (auto& face : level) out.faces.push_back(std::move(face));
    while (!out.count_by_dimension.empty() && out.count_by_dimension.back() == 0)
        out.count_by_dimension.pop_back();
    return out;
}

IntPolynomial f_polynomial_tamari(const WeakComposition& s, std::int64_t max_trees) {
    std::vector<std::int64_t> histogram(static_cast<size_t>(s.length()) + 1, 0);
    for_each_tree(s, max_trees, [&](const SDecreasingTree& t) {
        if (is_s_tamari(t)) histogram[tamari_ascents(t).size()] += 1;
    });
    IntPolynomial result;
    IntPolynomial one_plus_t(std::vector<BigUint>{BigUint(1), BigUint(1)});
    IntPolynomial power = IntPolynomial::constant(1);
    for (size_t k = 0; k < histogram.size(); ++k) {
        if (histogram[k] > 0)
            result += power.scaled(static_cast<std::uint64_t>(histogram[k]));
        power = power * one_plus_t;
    }
    return result;
}

std::int64_t s_catalan(const WeakComposition& s, std::int64_t max_trees) {
    std::int64_t count = 0;
    for_each_tree(s, max_trees, [&](const SDecreasingTree& t) {
        if (is_s_tamari(t)) ++count;
    });
    return count;
}

std::int64_t s_narayana(const WeakComposition& s, int k, std::int64_t max_trees) {
    std::int64_t count = 0;
    for_each_tree(s, max_trees, [&](const SDecreasingTree& t) {
        if (is_s_tamari(t) && static_cast<int>(tamari_ascents(t).size()) == k) ++count;
    });
    return count;
}

TamariHasseDiagram tamari_hasse_diagram(const WeakComposition& s, std::int64_t max_trees) {
    TamariHasseDiagram out{s, enumerate_tamari_trees(s, max_trees), {}};
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i)
        index.emplace(out.vertices[static_cast<size_t>(i)].to_string(), i);
    for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i)
        for (const TamariAscent& asc : tamari_ascents(out.vertices[static_cast<size_t>(i)])) {
            SDecreasingTree upper = tamari_rotate(out.vertices[static_cast<size_t>(i)], asc);
            out.edges.push_back(TamariHasseEdge{i, index.at(upper.to_string()), asc});
        }
    return out;
}

} // namespace sperm
