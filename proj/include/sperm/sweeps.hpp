#pragma once

#include <vector>

#include "sperm/composition.hpp"

namespace sperm {

// Pinned composition lists driving the exhaustive suites, so every run cross
// checks the same ground. Kept small enough that brute-force lattice oracles
// stay fast.
namespace sweeps {

// oracle suites: closures, joins, meets, round trips
inline const std::vector<WeakComposition>& core() {
    static const std::vector<WeakComposition> list = {
        WeakComposition{0, 2, 2},    WeakComposition{0, 0, 2},    WeakComposition{0, 1, 2},
        WeakComposition{0, 2, 1},    WeakComposition{1, 1, 1},    WeakComposition{0, 1, 2, 1},
        WeakComposition{0, 1, 1, 2}, WeakComposition{0, 2, 1, 1}, WeakComposition{0, 0, 2, 2},
        WeakComposition{0, 2, 2, 2}, WeakComposition{0, 2, 1, 0, 2}};
    return list;
}

// pairwise-intersection and subface closure checks
inline const std::vector<WeakComposition>& complex() {
    static const std::vector<WeakComposition> list = {
        WeakComposition{0, 2, 2},    WeakComposition{0, 0, 2},       WeakComposition{0, 1, 2},
        WeakComposition{0, 1, 1, 2}, WeakComposition{0, 2, 1, 1},    WeakComposition{0, 2, 2, 2},
        WeakComposition{0, 2, 1, 0, 2}};
    return list;
}

// interval characterization, compositions with at most 500 trees
inline const std::vector<WeakComposition>& characterization() {
    static const std::vector<WeakComposition> list = {
        WeakComposition{0, 2, 2},    WeakComposition{0, 0, 2},    WeakComposition{0, 1, 2},
        WeakComposition{0, 2, 1},    WeakComposition{0, 1, 1, 2}, WeakComposition{0, 2, 1, 1},
        WeakComposition{0, 1, 1, 1, 2}};
    return list;
}

// Tamari sublattice and isomorphism checks
inline const std::vector<WeakComposition>& tamari() {
    static const std::vector<WeakComposition> list = {
        WeakComposition{0, 2, 2}, WeakComposition{0, 1, 2}, WeakComposition{0, 2, 1},
        WeakComposition{0, 1, 1, 2}, WeakComposition{0, 2, 2, 2}};
    return list;
}

inline const std::vector<WeakComposition>& realize_2d() {
    static const std::vector<WeakComposition> list = {
        WeakComposition{0, 2, 2}, WeakComposition{0, 4, 3}, WeakComposition{0, 0, 2}};
    return list;
}

inline const std::vector<WeakComposition>& realize_3d() {
    static const std::vector<WeakComposition> list = {
        WeakComposition{0, 2, 2, 2}, WeakComposition{0, 2, 3, 2}, WeakComposition{0, 3, 3, 3}};
    return list;
}

} // namespace sweeps
} // namespace sperm
