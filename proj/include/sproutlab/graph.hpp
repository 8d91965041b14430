#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sproutlab/errors.hpp"

namespace sproutlab {

// Undirected edge over default vertex labels, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on default labels 1..n. Immutable after construction.
class Graph {
  public:
    explicit Graph(int order) : order_(order) {
        if (order < 1) throw graph_error("graph order must be a positive integer");
        adjacency_.resize(static_cast<std::size_t>(order) + 1);
    }

    Graph(int order, std::vector<Edge> edges) : Graph(order) {
        for (Edge& e : edges) {
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 1 || e.v > order_) throw graph_error("edge endpoint outside 1..n");
            if (e.u == e.v) throw graph_error("self-loops are not allowed");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw graph_error("duplicate edge");
        edges_ = std::move(edges);
        // Sorted edge order makes every adjacency list ascending.
        for (const Edge& e : edges_) {
            adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
    }

    Graph(int order, const std::vector<std::pair<int, int>>& pairs)
        : Graph(order, [&] {
              std::vector<Edge> es;
              es.reserve(pairs.size());
              for (auto [u, v] : pairs) es.push_back(Edge{u, v});
              return es;
          }()) {}

    int order() const noexcept { return order_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    // Neighbors of v in ascending label order.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Component id per vertex (index 0 unused); ids assigned 0,1,... by lowest contained label.
    std::vector<int> component_ids() const {
        std::vector<int> id(static_cast<std::size_t>(order_) + 1, -1);
        int next = 0;
        std::vector<int> stack;
        for (int s = 1; s <= order_; ++s) {
            if (id[static_cast<std::size_t>(s)] >= 0) continue;
            id[static_cast<std::size_t>(s)] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : neighbors(v)) {
                    if (id[static_cast<std::size_t>(w)] < 0) {
                        id[static_cast<std::size_t>(w)] = next;
                        stack.push_back(w);
                    }
                }
            }
            ++next;
        }
        return id;
    }

    int component_count() const {
        const std::vector<int> id = component_ids();
        return 1 + *std::max_element(id.begin() + 1, id.end());
    }

    bool is_connected() const { return component_count() == 1; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

  private:
    void check_vertex(int v) const {
        if (v < 1 || v > order_) throw graph_error("vertex label outside 1..n");
    }

    int order_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// --- graph families (default-label conventions used throughout) ---

// P_n: edges (i, i+1). P_1 = K_1.
inline Graph make_path(int n) {
    if (n < 1) throw family_parameter_error("path requires n >= 1");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back(Edge{i, i + 1});
    return Graph(n, std::move(es));
}

// C_n: path edges plus the closing edge (1, n).
inline Graph make_cycle(int n) {
    if (n < 3) throw family_parameter_error("cycle requires n >= 3");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back(Edge{i, i + 1});
    es.push_back(Edge{1, n});
    return Graph(n, std::move(es));
}

inline Graph make_complete(int n) {
    if (n < 1) throw family_parameter_error("complete requires n >= 1");
    std::vector<Edge> es;
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v <= n; ++v) es.push_back(Edge{u, v});
    return Graph(n, std::move(es));
}

// K_{1,n}: center has default label 1, leaves 2..n+1.
inline Graph make_star(int leaves) {
    if (leaves < 1) throw family_parameter_error("star requires n >= 1 leaves");
    std::vector<Edge> es;
    for (int v = 2; v <= leaves + 1; ++v) es.push_back(Edge{1, v});
    return Graph(leaves + 1, std::move(es));
}

// K_{n,m}: left column 1..n, right column n+1..n+m.
inline Graph make_complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw family_parameter_error("complete_bipartite requires n, m >= 1");
    std::vector<Edge> es;
    for (int u = 1; u <= n; ++u)
        for (int j = 1; j <= m; ++j) es.push_back(Edge{u, n + j});
    return Graph(n + m, std::move(es));
}

// W_{rim+1}: hub is default label 1, rim cycle on 2..rim+1.
inline Graph make_wheel(int rim) {
    if (rim < 3) throw family_parameter_error("wheel requires rim size >= 3");
    std::vector<Edge> es;
    for (int v = 2; v <= rim + 1; ++v) es.push_back(Edge{1, v});
    for (int v = 2; v <= rim; ++v) es.push_back(Edge{v, v + 1});
    es.push_back(Edge{2, rim + 1});
    return Graph(rim + 1, std::move(es));
}

// L_n: left pillar 1..n, right pillar n+1..2n, steps (i, n+i) for 2 <= i <= n-1 only.
// The end rungs are deliberately absent; make_full_ladder carries all n rungs.
inline Graph make_ladder(int n) {
    if (n < 3) throw family_parameter_error("ladder requires n >= 3");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) {
        es.push_back(Edge{i, i + 1});
        es.push_back(Edge{n + i, n + i + 1});
    }
    for (int i = 2; i <= n - 1; ++i) es.push_back(Edge{i, n + i});
    return Graph(2 * n, std::move(es));
}

// Conventional ladder: same pillars, rungs (i, n+i) for every 1 <= i <= n.
inline Graph make_full_ladder(int n) {
    if (n < 1) throw family_parameter_error("ladder_full requires n >= 1");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) {
        es.push_back(Edge{i, i + 1});
        es.push_back(Edge{n + i, n + i + 1});
    }
    for (int i = 1; i <= n; ++i) es.push_back(Edge{i, n + i});
    return Graph(2 * n, std::move(es));
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform integer in [0, bound) by rejection; bound >= 1.
inline std::uint64_t splitmix64_below(std::uint64_t& state, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = splitmix64(state);
    } while (x >= limit);
    return x % bound;
}

}  // namespace detail

// Uniform random m-edge graph on n vertices; identical output for a given seed everywhere.
inline Graph make_random(int n, int m, std::uint64_t seed) {
    if (n < 1) throw family_parameter_error("random requires n >= 1");
    const long long all = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > all) throw family_parameter_error("random edge count outside 0..n(n-1)/2");
    std::vector<Edge> pool;
    pool.reserve(static_cast<std::size_t>(all));
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v <= n; ++v) pool.push_back(Edge{u, v});
    std::uint64_t state = seed;
    // Partial Fisher-Yates: the first m slots become the sample.
    for (int i = 0; i < m; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) +
            static_cast<std::size_t>(detail::splitmix64_below(state, pool.size() - static_cast<std::size_t>(i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(m));
    return Graph(n, std::move(pool));
}

// Uniform random labeled tree decoded from a random Prufer sequence.
inline Graph make_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw family_parameter_error("random tree requires n >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, std::vector<Edge>{Edge{1, 2}});
    std::uint64_t state = seed;
    std::vector<int> prufer(static_cast<std::size_t>(n) - 2);
    for (int& x : prufer) x = 1 + static_cast<int>(detail::splitmix64_below(state, static_cast<std::uint64_t>(n)));
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 1);
    for (int x : prufer) ++deg[static_cast<std::size_t>(x)];
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(n) - 1);
    for (int x : prufer) {
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (deg[static_cast<std::size_t>(leaf)] != 1) continue;
            es.push_back(Edge{std::min(leaf, x), std::max(leaf, x)});
            deg[static_cast<std::size_t>(leaf)] = 0;
            --deg[static_cast<std::size_t>(x)];
            break;
        }
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v) {
        if (deg[static_cast<std::size_t>(v)] != 1) continue;
        (a ? b : a) = v;
    }
    es.push_back(Edge{a, b});
    return Graph(n, std::move(es));
}

// Dispatch by family name; params as the CLI receives them.
inline Graph make_family(std::string_view family, std::span<const int> params) {
    const auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw family_parameter_error(std::string("family '") + std::string(family) + "' expects " +
                                         std::to_string(k) + " parameter(s)");
    };
    if (family == "path") {
        want(1);
        return make_path(params[0]);
    }
    if (family == "cycle") {
        want(1);
        return make_cycle(params[0]);
    }
    if (family == "complete") {
        want(1);
        return make_complete(params[0]);
    }
    if (family == "star") {
        want(1);
        return make_star(params[0]);
    }
    if (family == "complete_bipartite") {
        want(2);
        return make_complete_bipartite(params[0], params[1]);
    }
    if (family == "wheel") {
        want(1);
        return make_wheel(params[0]);
    }
    if (family == "ladder") {
        want(1);
        return make_ladder(params[0]);
    }
    if (family == "ladder_full") {
        want(1);
        return make_full_ladder(params[0]);
    }
    throw family_parameter_error(std::string("unknown family '") + std::string(family) + "'");
}

// --- graph operations ---

inline Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int u = 1; u < g.order(); ++u)
        for (int v = u + 1; v <= g.order(); ++v)
            if (!g.has_edge(u, v)) es.push_back(Edge{u, v});
    return Graph(g.order(), std::move(es));
}

// Labels of h shift up by g.order(); label sets concatenate, so the union is order-sensitive.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> es = g.edges();
    for (const Edge& e : h.edges()) es.push_back(Edge{e.u + g.order(), e.v + g.order()});
    return Graph(g.order() + h.order(), std::move(es));
}

inline Graph join(const Graph& g, const Graph& h) {
    std::vector<Edge> es = disjoint_union(g, h).edges();
    for (int u = 1; u <= g.order(); ++u)
        for (int v = 1; v <= h.order(); ++v) es.push_back(Edge{u, g.order() + v});
    return Graph(g.order() + h.order(), std::move(es));
}

// Disjoint union plus the single bridge (v, u + g.order()).
inline Graph edge_joint(const Graph& g, const Graph& h, int v, int u) {
    if (v < 1 || v > g.order()) throw graph_error("edge_joint: v outside 1..order(g)");
    if (u < 1 || u > h.order()) throw graph_error("edge_joint: u outside 1..order(h)");
    std::vector<Edge> es = disjoint_union(g, h).edges();
    es.push_back(Edge{v, u + g.order()});
    return Graph(g.order() + h.order(), std::move(es));
}

inline constexpr int kHamiltonCapDefault = 15;

// Lexicographically least Hamilton path as a vertex sequence, or nullopt.
inline std::optional<std::vector<int>> find_hamilton_path(const Graph& g, int cap = kHamiltonCapDefault) {
    const int n = g.order();
    if (n > cap)
        throw size_cap_error("find_hamilton_path: order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    if (n == 1) return std::vector<int>{1};
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    path.reserve(static_cast<std::size_t>(n));
    auto extend = [&](auto&& self, int v) -> bool {
        path.push_back(v);
        used[static_cast<std::size_t>(v)] = 1;
        if (static_cast<int>(path.size()) == n) return true;
        for (int w : g.neighbors(v))
            if (!used[static_cast<std::size_t>(w)] && self(self, w)) return true;
        path.pop_back();
        used[static_cast<std::size_t>(v)] = 0;
        return false;
    };
    for (int s = 1; s <= n; ++s)
        if (extend(extend, s)) return path;
    return std::nullopt;
}

// Depth-first spanning tree rooted at label 1, neighbors taken in ascending order.
inline Graph spanning_tree(const Graph& g) {
    if (!g.is_connected()) throw connectivity_error("spanning_tree requires a connected graph");
    std::vector<Edge> es;
    std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
    auto dfs = [&](auto&& self, int v) -> void {
        seen[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                es.push_back(Edge{std::min(v, w), std::max(v, w)});
                self(self, w);
            }
        }
    };
    dfs(dfs, 1);
    return Graph(g.order(), std::move(es));
}

inline bool is_tree(const Graph& g) {
    return g.edge_count() == g.order() - 1 && g.is_connected();
}

// Path-shaped: connected, acyclic, maximum degree <= 2 (a labeled P_{order}).
inline bool is_path_shaped(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 1; v <= g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

}  // namespace sproutlab
