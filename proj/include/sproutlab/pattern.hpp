#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "sproutlab/errors.hpp"

namespace sproutlab {

// Bijection from default labels 1..n to indices 1..n; assignment()[d-1] is the index of d.
class IndexPattern {
  public:
    explicit IndexPattern(std::vector<int> assignment) : assignment_(std::move(assignment)) {
        const int n = static_cast<int>(assignment_.size());
        if (n == 0) throw pattern_error("pattern must be non-empty");
        vertex_at_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int d = 1; d <= n; ++d) {
            const int idx = assignment_[static_cast<std::size_t>(d) - 1];
            if (idx < 1 || idx > n) throw pattern_error("pattern entry outside 1..n");
            if (vertex_at_[static_cast<std::size_t>(idx)] != 0)
                throw pattern_error("pattern repeats index " + std::to_string(idx));
            vertex_at_[static_cast<std::size_t>(idx)] = d;
        }
    }

    static IndexPattern identity(int n) {
        if (n < 1) throw pattern_error("pattern must be non-empty");
        std::vector<int> a(static_cast<std::size_t>(n));
        std::iota(a.begin(), a.end(), 1);
        return IndexPattern(std::move(a));
    }

    int size() const noexcept { return static_cast<int>(assignment_.size()); }

    int index_of(int vertex) const {
        if (vertex < 1 || vertex > size()) throw pattern_error("vertex label outside 1..n");
        return assignment_[static_cast<std::size_t>(vertex) - 1];
    }

    int vertex_at(int index) const {
        if (index < 1 || index > size()) throw pattern_error("index outside 1..n");
        return vertex_at_[static_cast<std::size_t>(index)];
    }

    const std::vector<int>& assignment() const noexcept { return assignment_; }

    // Index reversal i -> n+1-i; arc directions flip, weights are preserved.
    IndexPattern reversed() const {
        std::vector<int> a(assignment_.size());
        const int n = size();
        for (std::size_t d = 0; d < assignment_.size(); ++d) a[d] = n + 1 - assignment_[d];
        return IndexPattern(std::move(a));
    }

    friend bool operator==(const IndexPattern& a, const IndexPattern& b) {
        return a.assignment_ == b.assignment_;
    }
    friend std::strong_ordering operator<=>(const IndexPattern& a, const IndexPattern& b) {
        return a.assignment_ <=> b.assignment_;
    }

  private:
    std::vector<int> assignment_;
    std::vector<int> vertex_at_;
};

// Concatenation on the disjoint label set: p2's indices shift up by p1.size().
inline IndexPattern combine_patterns(const IndexPattern& p1, const IndexPattern& p2) {
    std::vector<int> a = p1.assignment();
    a.reserve(a.size() + p2.assignment().size());
    for (int idx : p2.assignment()) a.push_back(idx + p1.size());
    return IndexPattern(std::move(a));
}

}  // namespace sproutlab
