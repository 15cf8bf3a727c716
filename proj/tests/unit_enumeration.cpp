#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sperm/sweeps.hpp"
#include "sperm/weak_order.hpp"

using namespace sperm;
using namespace sperm::testing;

namespace {

IntPolynomial poly(std::vector<std::uint64_t> coeffs) {
    std::vector<BigUint> big;
    for (auto c : coeffs) big.emplace_back(c);
    return IntPolynomial(std::move(big));
}

} // namespace

TEST_SUITE_BEGIN("enumeration");

TEST_CASE("big integers behave") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(1481796).to_string() == "1481796");
    CHECK((BigUint(999999999) + BigUint(1)).to_string() == "1000000000");
    CHECK((BigUint(123456789012345ull) * BigUint(987654321ull)).to_string() ==
          "121932631124827861592745");
    CHECK(BigUint::parse("121932631124827861592745") ==
          BigUint(123456789012345ull) * BigUint(987654321ull));
    CHECK(BigUint(5) < BigUint(6));
    CHECK_FALSE(BigUint(6) < BigUint(6));
}

TEST_CASE("tree counts") {
    CHECK(tree_count(WeakComposition{4, 7}) == 8);      // v+1
    CHECK(tree_count(WeakComposition{0, 2, 2}) == 15);
    CHECK(tree_count(WeakComposition{2, 2, 2, 2}) == 105);  // 1*3*5*7
    CHECK(tree_count(WeakComposition{3, 3, 3, 3}) == 280);  // 1*4*7*10
    CHECK(tree_count(WeakComposition{9}) == 1);
    CHECK(tree_count(WeakComposition{0, 100, 100}, 1000) == -1);
}

TEST_CASE("enumeration is duplicate free, ordered and bounded") {
    const auto trees = enumerate_trees(WeakComposition{0, 2, 2}, 100000);
    REQUIRE(trees.size() == 15);
    std::set<std::string> keys;
    for (const auto& t : trees) keys.insert(t.to_string());
    CHECK(keys.size() == 15);
    CHECK(std::is_sorted(trees.begin(), trees.end(),
                         [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); }));
    CHECK_THROWS_AS(enumerate_trees(WeakComposition{0, 2, 2}, 10), SizeBoundExceeded);
}

TEST_CASE("f-polynomial of small compositions") {
    CHECK(f_polynomial_direct(WeakComposition{0, 2, 2}, 100000) == poly({15, 20, 6}));
    CHECK(f_polynomial_recursive(WeakComposition{0, 2, 2}) == poly({15, 20, 6}));
    CHECK(f_polynomial_direct(WeakComposition{0, 0, 2}, 100000) == poly({9, 12, 4}));
    CHECK(f_polynomial_recursive(WeakComposition{0, 0, 2}) == poly({9, 12, 4}));
    CHECK(f_polynomial_recursive(WeakComposition{5}) == poly({1}));
    CHECK(f_polynomial_direct(WeakComposition{5}, 10) == poly({1}));
    CHECK(f_polynomial_recursive(WeakComposition{3, 4}) == poly({5, 4}));  // v+1+vt
}

TEST_CASE("the length-3 recursion splits as stated") {
    // f(0,2,2) = 3 f(0,4) + 2 t f(0,3)
    const IntPolynomial f04 = f_polynomial_recursive(WeakComposition{0, 4});
    const IntPolynomial f03 = f_polynomial_recursive(WeakComposition{0, 3});
    CHECK(f04 == poly({5, 4}));
    CHECK(f03 == poly({4, 3}));
    const IntPolynomial combined = f04.scaled(3) + f03.scaled(2).shifted(1);
    CHECK(combined == poly({15, 20, 6}));
    CHECK(combined == f_polynomial_recursive(WeakComposition{0, 2, 2}));

    // f(0,0,2) = f(0,2)^2
    const IntPolynomial f02 = f_polynomial_recursive(WeakComposition{0, 2});
    CHECK(f02 * f02 == f_polynomial_recursive(WeakComposition{0, 0, 2}));
}

TEST_CASE("reference table replays under both methods") {
    for (const ReferenceFPolynomial& row : reference_f_polynomials()) {
        CHECK(f_polynomial_recursive(row.s) == row.f);
        if (tree_count(row.s, 20000) > 0)
            CHECK(f_polynomial_direct(row.s, 20000, 2) == row.f);
    }
}

TEST_CASE("direct and recursive agree on a random sweep") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len(1, 5), entry(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> entries(static_cast<size_t>(len(rng)));
        for (int& e : entries) e = entry(rng);
        const WeakComposition s(entries);
        if (tree_count(s, 5000) < 0) continue;
        CHECK(f_polynomial_direct(s, 5000) == f_polynomial_recursive(s));
    }
}

TEST_CASE("threaded direct computation matches single threaded") {
    const WeakComposition s{0, 2, 1, 0, 2};
    CHECK(f_polynomial_direct(s, 100000, 2) == f_polynomial_direct(s, 100000, 1));
}

TEST_CASE("eulerian polynomial") {
    // decreasing binary trees on three nodes carry the classical statistics
    CHECK(s_eulerian(WeakComposition{1, 1, 1}, 100) == poly({1, 4, 1}));
    CHECK(s_eulerian(WeakComposition{7}, 100) == poly({1}));
    for (const WeakComposition& s : sweeps::core())
        CHECK(s_eulerian(s, 100000).composed_with_one_plus_t() ==
              f_polynomial_direct(s, 100000));
}

TEST_CASE("f-polynomial counts faces by dimension") {
    for (const WeakComposition& s :
         {WeakComposition{0, 2, 2}, WeakComposition{0, 0, 2}, WeakComposition{0, 1, 1, 2}}) {
        const IntPolynomial f = f_polynomial_direct(s, 100000);
        std::int64_t vertices = 0, edges = 0;
        const auto trees = enumerate_trees(s, 100000);
        vertices = static_cast<std::int64_t>(trees.size());
        for (const auto& t : trees) edges += static_cast<std::int64_t>(tree_ascents(t).size());
        CHECK(f.coeff(0) == BigUint(static_cast<std::uint64_t>(vertices)));
        CHECK(f.coeff(1) == BigUint(static_cast<std::uint64_t>(edges)));
    }
}

TEST_CASE("square compositions count by the shifted factorial product") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 3; ++m) {
            std::vector<int> entries(static_cast<size_t>(n), m);
            std::int64_t expected = 1;
            for (int i = 0; i < n; ++i) expected *= 1 + static_cast<std::int64_t>(i) * m;
            CHECK(tree_count(WeakComposition(entries)) == expected);
        }
}

TEST_SUITE_END();
