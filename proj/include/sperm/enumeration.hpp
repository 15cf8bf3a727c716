#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sperm/tree.hpp"

namespace sperm {

// Arbitrary-precision unsigned integer, base 10^9 limbs. Only the handful of
// operations polynomial bookkeeping needs.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    std::string to_string() const;

    BigUint& operator+=(const BigUint& o);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) { lhs += rhs; return lhs; }
    friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }
    bool operator<(const BigUint& o) const;

    // Parses a decimal string (digits only).
    static BigUint parse(const std::string& text);

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, base 1e9, no trailing zero limb
    void trim();
};

// Polynomial with non-negative integer coefficients, index = degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigUint> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(std::uint64_t v);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const BigUint& coeff(int k) const;
    const std::vector<BigUint>& coefficients() const { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { lhs += rhs; return lhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);

    IntPolynomial shifted(int by) const;              // multiply by t^by
    IntPolynomial scaled(std::uint64_t factor) const;
    // Substitutes t -> 1+t.
    IntPolynomial composed_with_one_plus_t() const;

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    // Coefficients low to high, space separated: "15 20 6".
    std::string to_string() const;

private:
    std::vector<BigUint> coeffs_;
    void trim();
};

class SizeBoundExceeded : public std::runtime_error {
public:
    SizeBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Number of trees for s, or -1 when the count exceeds `cap`.
std::int64_t tree_count(const WeakComposition& s, std::int64_t cap = INT64_MAX / 2);

// All trees in canonical order (sorted by serialization). Throws
// SizeBoundExceeded when the count exceeds max_trees.
std::vector<SDecreasingTree> enumerate_trees(const WeakComposition& s, std::int64_t max_trees);

// Streaming enumeration (unspecified order); bound enforced up front.
void for_each_tree(const WeakComposition& s, std::int64_t max_trees,
                   const std::function<void(const SDecreasingTree&)>& visit);

// Sum over trees of (1+t)^{#ascents}.
IntPolynomial f_polynomial_direct(const WeakComposition& s, std::int64_t max_trees, int threads = 1);

// Recursive computation; needs no enumeration and no size bound.
IntPolynomial f_polynomial_recursive(const WeakComposition& s);

// Sum over trees of t^{#ascents}.
IntPolynomial s_eulerian(const WeakComposition& s, std::int64_t max_trees);

struct ReferenceFPolynomial {
    WeakComposition s;
    IntPolynomial f;
};

// Golden f-polynomials used by the `table` command and the regression suite.
const std::vector<ReferenceFPolynomial>& reference_f_polynomials();

} // namespace sperm
