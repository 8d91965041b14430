#pragma once

#include <algorithm>
#include <cstdlib>
#include <span>
#include <vector>

#include "sproutlab/graph.hpp"
#include "sproutlab/pattern.hpp"

namespace sproutlab {

// Arc from the endpoint with the smaller pattern index to the larger; weight = index difference.
struct Arc {
    int tail = 0;
    int head = 0;
    int weight = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Oriented, arc-weighted clone of a Graph under a pattern. One arc per base edge, in base edge order.
class SproutGraph {
  public:
    SproutGraph(Graph base, IndexPattern pattern)
        : base_(std::move(base)), pattern_(std::move(pattern)) {
        if (pattern_.size() != base_.order())
            throw pattern_error("pattern length does not match graph order");
        arcs_.reserve(base_.edges().size());
        for (const Edge& e : base_.edges()) {
            const int iu = pattern_.index_of(e.u);
            const int iv = pattern_.index_of(e.v);
            const Arc a = iu < iv ? Arc{e.u, e.v, iv - iu} : Arc{e.v, e.u, iu - iv};
            weight_sum_ += a.weight;
            maturity_ = std::max(maturity_, a.weight);
            arcs_.push_back(a);
        }
    }

    const Graph& base() const noexcept { return base_; }
    const IndexPattern& pattern() const noexcept { return pattern_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    // mw: sum of all arc weights.
    long long maturity_weight() const noexcept { return weight_sum_; }

    // m_I: the largest arc weight; 0 for an arcless graph.
    int maturity() const noexcept { return maturity_; }

  private:
    Graph base_;
    IndexPattern pattern_;
    std::vector<Arc> arcs_;
    long long weight_sum_ = 0;
    int maturity_ = 0;
};

inline SproutGraph sprout(const Graph& g, const IndexPattern& p) { return SproutGraph(g, p); }

// mw without materializing arcs; the solvers' inner loops use the raw-array form below.
inline long long maturity_weight(const Graph& g, const IndexPattern& p) {
    if (p.size() != g.order()) throw pattern_error("pattern length does not match graph order");
    long long s = 0;
    for (const Edge& e : g.edges()) s += std::abs(p.index_of(e.u) - p.index_of(e.v));
    return s;
}

// Sorted distinct weight levels including 0; maturity is the maximum level.
struct Timeline {
    std::vector<int> levels;
    int maturity = 0;
    friend auto operator<=>(const Timeline&, const Timeline&) = default;
};

inline Timeline timeline(const SproutGraph& s) {
    std::vector<int> levels{0};
    for (const Arc& a : s.arcs()) levels.push_back(a.weight);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return Timeline{std::move(levels), s.maturity()};
}

// The sprouting graph at level t: exactly the arcs with weight <= t.
struct Snapshot {
    int level = 0;
    std::vector<Arc> arcs;
};

inline Snapshot snapshot(const SproutGraph& s, int t) {
    if (t < 0) throw graph_error("snapshot level must be non-negative");
    Snapshot shot{t, {}};
    for (const Arc& a : s.arcs())
        if (a.weight <= t) shot.arcs.push_back(a);
    return shot;
}

// Adult: in-degree equals degree (pure sink). Isolated vertices qualify vacuously.
inline std::vector<int> adult_vertices(const SproutGraph& s) {
    std::vector<int> out_deg(static_cast<std::size_t>(s.base().order()) + 1, 0);
    for (const Arc& a : s.arcs()) ++out_deg[static_cast<std::size_t>(a.tail)];
    std::vector<int> adults;
    for (int v = 1; v <= s.base().order(); ++v)
        if (out_deg[static_cast<std::size_t>(v)] == 0) adults.push_back(v);
    return adults;
}

// Initiator: out-degree equals degree (pure source). Isolated vertices qualify vacuously.
inline std::vector<int> initiator_vertices(const SproutGraph& s) {
    std::vector<int> in_deg(static_cast<std::size_t>(s.base().order()) + 1, 0);
    for (const Arc& a : s.arcs()) ++in_deg[static_cast<std::size_t>(a.head)];
    std::vector<int> initiators;
    for (int v = 1; v <= s.base().order(); ++v)
        if (in_deg[static_cast<std::size_t>(v)] == 0) initiators.push_back(v);
    return initiators;
}

// True iff the arcs form one directed path visiting all `order` vertices.
inline bool is_directed_spanning_path(std::span<const Arc> arcs, int order) {
    if (static_cast<int>(arcs.size()) != order - 1) return false;
    if (order == 1) return true;
    std::vector<int> in_deg(static_cast<std::size_t>(order) + 1, 0);
    std::vector<int> next(static_cast<std::size_t>(order) + 1, 0);
    for (const Arc& a : arcs) {
        if (next[static_cast<std::size_t>(a.tail)] != 0) return false;
        next[static_cast<std::size_t>(a.tail)] = a.head;
        if (++in_deg[static_cast<std::size_t>(a.head)] > 1) return false;
    }
    int start = 0;
    for (int v = 1; v <= order; ++v)
        if (in_deg[static_cast<std::size_t>(v)] == 0 && next[static_cast<std::size_t>(v)] != 0) {
            if (start != 0) return false;
            start = v;
        }
    if (start == 0) return false;
    int length = 1;
    for (int v = start; next[static_cast<std::size_t>(v)] != 0; v = next[static_cast<std::size_t>(v)]) ++length;
    return length == order;
}

enum class LobMode { unique_adult, unique_initiator };

// Leaf-lobbing labeling: rounds of current leaves take the lowest unused indices, ascending
// default-label order within a round; the survivor (or final K_2) takes the highest indices.
// unique_initiator is the index reversal of unique_adult (equivalently, highest indices first).
inline IndexPattern leaf_lob_pattern(const Graph& t, LobMode mode) {
    if (!is_tree(t)) throw tree_error("leaf_lob_pattern requires a tree");
    const int n = t.order();
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> alive(static_cast<std::size_t>(n) + 1, 1);
    for (int v = 1; v <= n; ++v) deg[static_cast<std::size_t>(v)] = t.degree(v);
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    int next_index = 1;
    int remaining = n;
    while (remaining > 0) {
        std::vector<int> round;
        for (int v = 1; v <= n; ++v)
            if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] <= 1)
                round.push_back(v);
        for (int v : round) assignment[static_cast<std::size_t>(v) - 1] = next_index++;
        for (int v : round) {
            alive[static_cast<std::size_t>(v)] = 0;
            --remaining;
            for (int w : t.neighbors(v))
                if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
        }
    }
    IndexPattern p{std::move(assignment)};
    return mode == LobMode::unique_adult ? p : p.reversed();
}

}  // namespace sproutlab
