#include "sperm/enumeration.hpp"

namespace sperm {

namespace {

ReferenceFPolynomial row(std::vector<int> s, std::vector<std::uint64_t> coeffs_low_to_high) {
    std::vector<BigUint> coeffs;
    coeffs.reserve(coeffs_low_to_high.size());
    for (std::uint64_t c : coeffs_low_to_high) coeffs.emplace_back(c);
    return ReferenceFPolynomial{WeakComposition(std::move(s)), IntPolynomial(std::move(coeffs))};
}

} // namespace

const std::vector<ReferenceFPolynomial>& reference_f_polynomials() {
    static const std::vector<ReferenceFPolynomial> table = {
        row({0, 0, 1}, {4, 4, 1}),
        row({0, 0, 2}, {9, 12, 4}),
        row({0, 0, 3}, {16, 24, 9}),
        row({0, 1, 1}, {6, 6, 1}),
        row({0, 1, 2}, {12, 15, 4}),
        row({0, 1, 3}, {20, 28, 9}),
        row({0, 2, 1}, {8, 9, 2}),
        row({0, 2, 2}, {15, 20, 6}),
        row({0, 2, 3}, {24, 35, 12}),
        row({0, 3, 1}, {10, 12, 3}),
        row({0, 3, 2}, {18, 25, 8}),
        row({0, 3, 3}, {28, 42, 15}),
        row({0, 0, 0, 1}, {8, 12, 6, 1}),
        row({0, 0, 0, 2}, {27, 54, 36, 8}),
        row({0, 0, 0, 3}, {64, 144, 108, 27}),
        row({0, 0, 1, 1}, {18, 28, 12, 1}),
        row({0, 0, 1, 2}, {48, 90, 51, 8}),
        row({0, 0, 1, 3}, {100, 208, 136, 27}),
        row({0, 0, 2, 1}, {32, 57, 30, 4}),
        row({0, 0, 2, 2}, {75, 152, 96, 18}),
        row({0, 0, 2, 3}, {144, 315, 220, 48}),
        row({0, 0, 3, 1}, {50, 96, 56, 9}),
        row({0, 0, 3, 2}, {108, 230, 155, 32}),
        row({0, 0, 3, 3}, {196, 444, 324, 75}),
        row({0, 1, 0, 1}, {12, 18, 8, 1}),
        row({0, 1, 0, 2}, {36, 69, 42, 8}),
        row({0, 1, 0, 3}, {80, 172, 120, 27}),
        row({0, 1, 1, 1}, {24, 36, 14, 1}),
        row({0, 1, 1, 2}, {60, 108, 57, 8}),
        row({0, 1, 1, 3}, {120, 240, 148, 27}),
        row({0, 1, 2, 1}, {40, 68, 33, 4}),
        row({0, 1, 2, 2}, {90, 175, 104, 18}),
        row({0, 1, 2, 3}, {168, 354, 235, 48}),
        row({0, 1, 3, 1}, {60, 110, 60, 9}),
        row({0, 1, 3, 2}, {126, 258, 165, 32}),
        row({0, 1, 3, 3}, {224, 490, 342, 75}),
        row({0, 2, 0, 1}, {16, 26, 13, 2}),
        row({0, 2, 0, 2}, {45, 90, 58, 12}),
        row({0, 2, 0, 3}, {96, 212, 153, 36}),
        row({0, 2, 1, 1}, {30, 48, 21, 2}),
        row({0, 2, 1, 2}, {72, 135, 76, 12}),
        row({0, 2, 1, 3}, {140, 288, 185, 36}),
        row({0, 2, 2, 1}, {48, 85, 44, 6}),
        row({0, 2, 2, 2}, {105, 210, 130, 24}),
        row({0, 2, 2, 3}, {192, 413, 282, 60}),
        row({0, 2, 3, 1}, {70, 132, 75, 12}),
        row({0, 2, 3, 2}, {144, 301, 198, 40}),
        row({0, 2, 3, 3}, {252, 560, 399, 90}),
        row({0, 3, 0, 1}, {20, 34, 18, 3}),
        row({0, 3, 0, 2}, {54, 111, 74, 16}),
        row({0, 3, 0, 3}, {112, 252, 186, 45}),
        row({0, 3, 1, 1}, {36, 60, 28, 3}),
        row({0, 3, 1, 2}, {84, 162, 95, 16}),
        row({0, 3, 1, 3}, {160, 336, 222, 45}),
        row({0, 3, 2, 1}, {56, 102, 55, 8}),
        row({0, 3, 2, 2}, {120, 245, 156, 30}),
        row({0, 3, 2, 3}, {216, 472, 329, 72}),
        row({0, 3, 3, 1}, {80, 154, 90, 15}),
        row({0, 3, 3, 2}, {162, 344, 231, 48}),
        row({0, 3, 3, 3}, {280, 630, 456, 105}),
        row({0, 4, 4, 4}, {585, 1404, 1100, 280}),
        row({0, 5, 5, 5}, {1056, 2640, 2170, 585}),
        row({0, 6, 6, 6}, {1729, 4446, 3774, 1056}),
        row({0, 2, 2, 2, 2}, {945, 2520, 2380, 924, 120}),
        row({0, 3, 3, 3, 3}, {3640, 10920, 11946, 5610, 945}),
        row({0, 2, 1, 0, 2}, {216, 549, 498, 188, 24}),
        row({0, 2, 0, 1, 3, 2}, {7938, 27108, 35474, 21941, 6278, 640}),
        row({0, 1, 1, 2, 0, 3, 3}, {194040, 841320, 1481796, 1349600, 665262, 166377, 16200}),
    };
    return table;
}

} // namespace sperm
