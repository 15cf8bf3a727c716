#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sperm {

// A weak composition s = (s(1), ..., s(n)) of non-negative integers.
// Entries are accessed 1-based to match the usual indexing of tree nodes.
class WeakComposition {
public:
    explicit WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw std::invalid_argument("composition must have length >= 1");
        for (int e : entries_)
            if (e < 0)
                throw std::invalid_argument("composition entries must be non-negative");
    }

    WeakComposition(std::initializer_list<int> entries)
        : WeakComposition(std::vector<int>(entries)) {}

    int length() const { return static_cast<int>(entries_.size()); }
    int operator()(int i) const { return entries_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& entries() const { return entries_; }

    WeakComposition reversed() const {
        return WeakComposition(std::vector<int>(entries_.rbegin(), entries_.rend()));
    }

    bool operator==(const WeakComposition& o) const { return entries_ == o.entries_; }
    bool operator!=(const WeakComposition& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i]);
        }
        return out;
    }

    // Parses "0,2,2"; throws std::invalid_argument on malformed input.
    static WeakComposition parse(const std::string& text);

private:
    std::vector<int> entries_;
};

} // namespace sperm
