#include "sperm/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "sperm/weak_order.hpp"

namespace sperm {

namespace {
constexpr std::uint32_t kLimbBase = 1000000000u;
}

BigUint::BigUint(std::uint64_t v) {
    while (v) {
        limbs_.push_back(static_cast<std::uint32_t>(v % kLimbBase));
        v /= kLimbBase;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& o) {
    std::uint64_t carry = 0;
    const size_t n = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(n, 0);
    for (size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(sum % kLimbBase);
        carry = sum / kLimbBase;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
    BigUint out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                static_cast<std::uint64_t>(lhs.limbs_[i]) * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kLimbBase);
            carry = cur / kLimbBase;
        }
        size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur % kLimbBase);
            carry = cur / kLimbBase;
            ++k;
        }
    }
    out.trim();
    return out;
}

bool BigUint::operator<(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
    return false;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

BigUint BigUint::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    BigUint out;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad integer literal: " + text);
        out = out * BigUint(10);
        out += BigUint(static_cast<std::uint64_t>(ch - '0'));
    }
    return out;
}

IntPolynomial IntPolynomial::constant(std::uint64_t v) {
    return IntPolynomial(std::vector<BigUint>{BigUint(v)});
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigUint& IntPolynomial::coeff(int k) const {
    static const BigUint zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return IntPolynomial();
    std::vector<BigUint> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int by) const {
    if (coeffs_.empty()) return IntPolynomial();
    std::vector<BigUint> out(coeffs_.size() + static_cast<size_t>(by));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<size_t>(by)] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled(std::uint64_t factor) const {
    std::vector<BigUint> out = coeffs_;
    BigUint f(factor);
    for (auto& c : out) c = c * f;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::composed_with_one_plus_t() const {
    // Horner: result = (...(a_d (1+t) + a_{d-1})(1+t) + ...) + a_0
    IntPolynomial result;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        result = result + result.shifted(1);  // result *= (1+t)
        result += IntPolynomial(std::vector<BigUint>{coeffs_[i]});
    }
    return result;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ' ';
        out += coeffs_[i].to_string();
    }
    return out;
}

std::int64_t tree_count(const WeakComposition& s, std::int64_t cap) {
    // Inserting node k (top down) chooses among 1 + sum_{j>k} s(j) open slots.
    const int n = s.length();
    std::int64_t count = 1, open = 0;
    for (int k = n - 1; k >= 1; --k) {
        open += s(k + 1);
        std::int64_t slots = open + 1;
        if (count > cap / slots) return -1;
        count *= slots;
    }
    return count;
}

namespace {

void enumerate_rec(const WeakComposition& s, int next,
                   std::vector<std::vector<int>>& children,
                   std::vector<std::pair<int, int>>& empty_slots,
                   const std::function<void(const SDecreasingTree&)>& visit) {
    if (next == 0) {
        visit(SDecreasingTree::from_structure(s, children));
        return;
    }
    const size_t slot_count = empty_slots.size();
    for (size_t i = 0; i < slot_count; ++i) {
        auto [node, slot] = empty_slots[i];
        children[static_cast<size_t>(node) - 1][static_cast<size_t>(slot)] = next;
        std::vector<std::pair<int, int>> slots;
        slots.reserve(slot_count - 1 + static_cast<size_t>(s(next)) + 1);
        for (size_t j = 0; j < slot_count; ++j)
            if (j != i) slots.push_back(empty_slots[j]);
        for (int k = 0; k <= s(next); ++k) slots.emplace_back(next, k);
        enumerate_rec(s, next - 1, children, slots, visit);
        children[static_cast<size_t>(node) - 1][static_cast<size_t>(slot)] = 0;
    }
}

} // namespace

void for_each_tree(const WeakComposition& s, std::int64_t max_trees,
                   const std::function<void(const SDecreasingTree&)>& visit) {
    if (tree_count(s, max_trees) < 0)
        throw SizeBoundExceeded("composition (" + s.to_string() + ") has more than " +
                                std::to_string(max_trees) + " trees");
    const int n = s.length();
    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    for (int node = 1; node <= n; ++node)
        children[static_cast<size_t>(node) - 1].assign(static_cast<size_t>(s(node)) + 1, 0);
    std::vector<std::pair<int, int>> slots;
    for (int k = 0; k <= s(n); ++k) slots.emplace_back(n, k);
    enumerate_rec(s, n - 1, children, slots, visit);
}

std::vector<SDecreasingTree> enumerate_trees(const WeakComposition& s, std::int64_t max_trees) {
    std::vector<SDecreasingTree> out;
    for_each_tree(s, max_trees, [&](const SDecreasingTree& t) { out.push_back(t); });
    std::sort(out.begin(), out.end());
    return out;
}

IntPolynomial f_polynomial_direct(const WeakComposition& s, std::int64_t max_trees, int threads) {
    // histogram of ascent counts, then sum of (1+t)^k expansions
    std::vector<std::int64_t> histogram(static_cast<size_t>(s.length()) + 1, 0);
    if (threads <= 1) {
        for_each_tree(s, max_trees, [&](const SDecreasingTree& t) {
            histogram[tree_ascents_from_inversions(t).size()] += 1;
        });
    } else {
        // Partition work by the position of node n-1 (its slot in the root).
        const int n = s.length();
        if (n == 1) {
            histogram[0] = 1;
        } else {
            if (tree_count(s, max_trees) < 0)
                throw SizeBoundExceeded("composition (" + s.to_string() + ") has more than " +
                                        std::to_string(max_trees) + " trees");
            std::atomic<int> next_slot{0};
            std::vector<std::vector<std::int64_t>> partial(
                static_cast<size_t>(threads),
                std::vector<std::int64_t>(static_cast<size_t>(n) + 1, 0));
            auto worker = [&](int tid) {
                for (;;) {
                    int slot = next_slot.fetch_add(1);
                    if (slot > s(n)) break;
                    std::vector<std::vector<int>> children(static_cast<size_t>(n));
                    for (int node = 1; node <= n; ++node)
                        children[static_cast<size_t>(node) - 1].assign(static_cast<size_t>(s(node)) + 1, 0);
                    children[static_cast<size_t>(n) - 1][static_cast<size_t>(slot)] = n - 1;
                    std::vector<std::pair<int, int>> slots;
                    for (int k = 0; k <= s(n); ++k)
                        if (k != slot) slots.emplace_back(n, k);
                    for (int k = 0; k <= s(n - 1); ++k) slots.emplace_back(n - 1, k);
                    enumerate_rec(s, n - 2, children, slots, [&](const SDecreasingTree& t) {
                        partial[static_cast<size_t>(tid)][tree_ascents_from_inversions(t).size()] += 1;
                    });
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
            for (auto& th : pool) th.join();
            for (const auto& part : partial)
                for (size_t k = 0; k < part.size(); ++k) histogram[k] += part[k];
        }
    }

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

IntPolynomial s_eulerian(const WeakComposition& s, std::int64_t max_trees) {
    std::vector<BigUint> coeffs(static_cast<size_t>(s.length()) + 1);
    for_each_tree(s, max_trees, [&](const SDecreasingTree& t) {
        coeffs[tree_ascents_from_inversions(t).size()] += BigUint(1);
    });
    return IntPolynomial(std::move(coeffs));
}

namespace {

IntPolynomial f_recursive_impl(std::vector<int> s, std::map<std::vector<int>, IntPolynomial>& memo) {
    const int n = static_cast<int>(s.size());
    if (n == 1) return IntPolynomial::constant(1);
    if (auto it = memo.find(s); it != memo.end()) return it->second;

    const int u = s[static_cast<size_t>(n) - 2];
    const int v = s[static_cast<size_t>(n) - 1];
    IntPolynomial result;
    if (n > 2 && u == 0) {
        std::vector<int> left(s.begin(), s.end() - 2);
        left.push_back(v);
        result = f_recursive_impl(std::move(left), memo) *
                 f_recursive_impl(std::vector<int>{0, v}, memo);
    } else {
        std::vector<int> merged(s.begin(), s.end() - 2);
        merged.push_back(u + v);
        IntPolynomial head = f_recursive_impl(merged, memo).scaled(static_cast<std::uint64_t>(v) + 1);
        result = head;
        if (v > 0) {
            merged.back() = u + v - 1;
            result += f_recursive_impl(merged, memo).scaled(static_cast<std::uint64_t>(v)).shifted(1);
        }
    }
    memo.emplace(std::move(s), result);
    return result;
}

} // namespace

IntPolynomial f_polynomial_recursive(const WeakComposition& s) {
    std::map<std::vector<int>, IntPolynomial> memo;
    return f_recursive_impl(s.entries(), memo);
}

} // namespace sperm
