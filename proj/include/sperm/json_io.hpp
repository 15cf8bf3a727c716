#pragma once

#include <string>

#include "sperm/pure_intervals.hpp"

namespace sperm {

// Wire formats, stable key order:
//   multiset: {"s": [..], "card": [[c,a,v], ...]}   (zero entries omitted)
//   tree:     {"s": [..], "tree": nested-list}       node = [label, slot...], empty slot = null
//   face:     {"lower": tree, "ascents": [[a,c], ...]}

std::string multiset_to_json(const InversionMultiset& inv, const WeakComposition& s);
std::string tree_to_json(const SDecreasingTree& tree);
std::string face_to_json(const PureInterval& face);

SDecreasingTree tree_from_json(const std::string& text);
PureInterval face_from_json(const std::string& text);

} // namespace sperm
