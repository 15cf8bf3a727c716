#include "sperm/json_io.hpp"

#include <json.hpp>

namespace sperm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json composition_json(const WeakComposition& s) {
    ordered_json arr = ordered_json::array();
    for (int e : s.entries()) arr.push_back(e);
    return arr;
}

ordered_json tree_node_json(const SDecreasingTree& tree, int node) {
    ordered_json arr = ordered_json::array();
    arr.push_back(node);
    for (int slot = 0; slot < tree.num_slots(node); ++slot) {
        if (int c = tree.child(node, slot); c != 0)
            arr.push_back(tree_node_json(tree, c));
        else
            arr.push_back(nullptr);
    }
    return arr;
}

ordered_json tree_json(const SDecreasingTree& tree) {
    ordered_json out;
    out["s"] = composition_json(tree.composition());
    out["tree"] = tree_node_json(tree, tree.root());
    return out;
}

void collect_children(const json& node, std::vector<std::vector<int>>& children) {
    if (!node.is_array() || node.empty() || !node[0].is_number_integer())
        throw std::invalid_argument("bad tree node in JSON");
    const int label = node[0].get<int>();
    if (label < 1 || label > static_cast<int>(children.size()))
        throw std::invalid_argument("tree label out of range in JSON");
    auto& slots = children[static_cast<size_t>(label) - 1];
    if (!slots.empty()) throw std::invalid_argument("duplicate tree label in JSON");
    for (size_t i = 1; i < node.size(); ++i) {
        if (node[i].is_null()) {
            slots.push_back(0);
        } else {
            collect_children(node[i], children);
            slots.push_back(node[i][0].get<int>());
        }
    }
}

SDecreasingTree tree_from_parsed(const json& doc) {
    if (!doc.contains("s") || !doc.contains("tree"))
        throw std::invalid_argument("tree JSON needs keys 's' and 'tree'");
    std::vector<int> entries;
    for (const auto& e : doc["s"]) entries.push_back(e.get<int>());
    WeakComposition s(entries);
    std::vector<std::vector<int>> children(static_cast<size_t>(s.length()));
    collect_children(doc["tree"], children);
    for (int node = 1; node <= s.length(); ++node)
        if (children[static_cast<size_t>(node) - 1].empty() && s(node) + 1 > 0)
            children[static_cast<size_t>(node) - 1].assign(static_cast<size_t>(s(node)) + 1, 0);
    return SDecreasingTree::from_structure(s, std::move(children));
}

} // namespace

std::string multiset_to_json(const InversionMultiset& inv, const WeakComposition& s) {
    ordered_json out;
    out["s"] = composition_json(s);
    ordered_json card = ordered_json::array();
    for (int c = 2; c <= inv.size(); ++c)
        for (int a = 1; a < c; ++a)
            if (inv.card(c, a) != 0) card.push_back(ordered_json::array({c, a, inv.card(c, a)}));
    out["card"] = card;
    return out.dump();
}

std::string tree_to_json(const SDecreasingTree& tree) { return tree_json(tree).dump(); }

std::string face_to_json(const PureInterval& face) {
    ordered_json out;
    out["lower"] = tree_json(face.lower);
    ordered_json ascents = ordered_json::array();
    for (const TreeAscent& asc : face.ascents) ascents.push_back(ordered_json::array({asc.a, asc.c}));
    out["ascents"] = ascents;
    return out.dump();
}

SDecreasingTree tree_from_json(const std::string& text) {
    return tree_from_parsed(json::parse(text));
}

PureInterval face_from_json(const std::string& text) {
    const json doc = json::parse(text);
    if (!doc.contains("lower") || !doc.contains("ascents"))
        throw std::invalid_argument("face JSON needs keys 'lower' and 'ascents'");
    SDecreasingTree lower = tree_from_parsed(doc["lower"]);
    std::vector<TreeAscent> ascents;
    for (const auto& pair : doc["ascents"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("face ascents must be [a,c] pairs");
        const int a = pair[0].get<int>(), c = pair[1].get<int>();
        ascents.push_back(TreeAscent{a, c, lower.card(c, a)});
    }
    return make_pure_interval(lower, std::move(ascents));
}

} // namespace sperm
