#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sproutlab/graph.hpp"
#include "sproutlab/pattern.hpp"
#include "sproutlab/solvers.hpp"
#include "sproutlab/sprout.hpp"

namespace sproutlab {

inline constexpr int kSweepCapDefault = 6;     // order cap for all-connected-graph sweeps
inline constexpr int kZaneCapDefault = 6;      // edge-count cap for the q-edge sweep
inline constexpr int kHamiltonHuntCapDefault = 6;

// Every connected graph on `order` labeled vertices, in edge-set lexicographic order.
inline std::vector<Graph> all_connected_graphs(int order) {
    if (order < 1) throw family_parameter_error("all_connected_graphs requires order >= 1");
    std::vector<Edge> pool;
    for (int u = 1; u < order; ++u)
        for (int v = u + 1; v <= order; ++v) pool.push_back(Edge{u, v});
    std::vector<Graph> graphs;
    std::vector<int> parent(static_cast<std::size_t>(order) + 1);
    auto root = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    const std::uint64_t masks = 1ULL << pool.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        for (int v = 1; v <= order; ++v) parent[static_cast<std::size_t>(v)] = v;
        int merges = 0;
        std::vector<Edge> es;
        for (std::size_t b = 0; b < pool.size(); ++b) {
            if (!(mask >> b & 1)) continue;
            es.push_back(pool[b]);
            const int ru = root(pool[b].u);
            const int rv = root(pool[b].v);
            if (ru != rv) {
                parent[static_cast<std::size_t>(ru)] = rv;
                ++merges;
            }
        }
        if (merges == order - 1) graphs.push_back(Graph(order, std::move(es)));
    }
    std::sort(graphs.begin(), graphs.end(),
              [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
    return graphs;
}

// A violating timeline pair with its extreme witnesses; re-computable from (graph, patterns).
struct CounterexampleRecord {
    Graph graph;
    IndexPattern pattern_a;  // lexicographically least pattern attaining max mw in group a
    IndexPattern pattern_b;  // lexicographically least pattern attaining min mw in group b
    Timeline timeline_a;
    Timeline timeline_b;
    long long mw_a = 0;
    long long mw_b = 0;
    std::string claim;
};

// Same-timeline patterns with different weights (the stated non-implication, kept as data).
struct EqualTimelineWitness {
    IndexPattern pattern_a;  // least pattern attaining the group minimum
    IndexPattern pattern_b;  // least pattern attaining the group maximum
    Timeline timeline;
    long long mw_a = 0;
    long long mw_b = 0;
};

struct PatternConjectureReport {
    Graph graph;
    unsigned long long patterns_checked = 0;
    unsigned long long timeline_groups = 0;
    std::vector<CounterexampleRecord> violations;
    std::optional<EqualTimelineWitness> equal_timeline_distinct_mw;
};

namespace detail {

struct TimelineGroup {
    long long min_value = 0;
    long long max_value = 0;
    std::vector<int> min_witness;
    std::vector<int> max_witness;
    int maturity = 0;
    bool used = false;
};

// True iff a is a proper subset of b; both sorted ascending.
inline bool proper_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

// Groups all patterns by timeline level set, then flags every pair T_a properly inside T_b whose
// weight ranges overlap the claimed strict order (max over group a >= min over group b).
inline PatternConjectureReport hunt_pattern_conjecture(const Graph& g, const SolveOptions& opts = {}) {
    detail::check_cap("hunt_pattern_conjecture", g.order(), opts);
    const auto edges = detail::flat_edges(g);
    const int n = g.order();

    // Reversal halving: p and reverse(p) share timeline and mw, so absorbing both witnesses
    // from the enumerated half covers the full pattern space.
    std::map<std::vector<int>, detail::TimelineGroup> groups;
    unsigned long long checked = 0;
    std::vector<int> levels;
    const detail::UnitExtrema scan = detail::scan_halved(
        n, 1, [&](detail::UnitExtrema& r, const std::vector<int>& p) {
            ++r.explored;
            r.used = true;
            levels.assign(1, 0);
            long long value = 0;
            int maturity = 0;
            for (auto [x, y] : edges) {
                const int w = std::abs(p[static_cast<std::size_t>(x)] - p[static_cast<std::size_t>(y)]);
                value += w;
                maturity = std::max(maturity, w);
                levels.push_back(w);
            }
            std::sort(levels.begin(), levels.end());
            levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
            detail::TimelineGroup& grp = groups[levels];
            auto take = [&](long long& best, std::vector<int>& w, bool minimizing) {
                const bool improves = minimizing ? value < best : value > best;
                if (!grp.used || improves) {
                    best = value;
                    detail::copy_candidate(p, false, w);
                    if (detail::candidate_less(p, true, w)) detail::copy_candidate(p, true, w);
                } else if (value == best) {
                    if (detail::candidate_less(p, false, w)) detail::copy_candidate(p, false, w);
                    if (detail::candidate_less(p, true, w)) detail::copy_candidate(p, true, w);
                }
            };
            if (!grp.used) {
                grp.min_witness.assign(static_cast<std::size_t>(n), 0);
                grp.max_witness.assign(static_cast<std::size_t>(n), 0);
                grp.maturity = maturity;
            }
            take(grp.min_value, grp.min_witness, true);
            take(grp.max_value, grp.max_witness, false);
            grp.used = true;
        });
    checked = scan.explored;

    PatternConjectureReport report{g, checked, groups.size(), {}, std::nullopt};
    for (auto a = groups.begin(); a != groups.end(); ++a) {
        for (auto b = groups.begin(); b != groups.end(); ++b) {
            if (a == b || !detail::proper_subset(a->first, b->first)) continue;
            if (a->second.max_value < b->second.min_value) continue;
            report.violations.push_back(CounterexampleRecord{
                g, IndexPattern(a->second.max_witness), IndexPattern(b->second.min_witness),
                Timeline{a->first, a->second.maturity}, Timeline{b->first, b->second.maturity},
                a->second.max_value, b->second.min_value, "pattern-conjecture"});
        }
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const CounterexampleRecord& x, const CounterexampleRecord& y) {
                  if (x.pattern_a != y.pattern_a) return x.pattern_a < y.pattern_a;
                  return x.pattern_b < y.pattern_b;
              });
    // Corroborating witness: the lexicographically least timeline whose group spans two weights.
    for (const auto& [lv, grp] : groups) {
        if (grp.min_value == grp.max_value) continue;
        report.equal_timeline_distinct_mw =
            EqualTimelineWitness{IndexPattern(grp.min_witness), IndexPattern(grp.max_witness),
                                 Timeline{lv, grp.maturity}, grp.min_value, grp.max_value};
        break;
    }
    return report;
}

struct PatternConjectureSweep {
    int max_order = 0;
    unsigned long long graphs_checked = 0;
    unsigned long long graphs_violating = 0;
    unsigned long long graphs_with_equal_timeline_witness = 0;
    std::vector<CounterexampleRecord> violations;  // sorted by (order, edge set, patterns)
    std::vector<PatternConjectureReport> witness_reports;  // one per graph with a witness, violations stripped
};

// Runs the hunt over every connected labeled graph of order 2..max_order.
inline PatternConjectureSweep hunt_pattern_conjecture_sweep(int max_order,
                                                            const SolveOptions& opts = {}) {
    if (max_order < 2) throw family_parameter_error("sweep requires max_order >= 2");
    if (max_order > kSweepCapDefault && !opts.force_large)
        throw size_cap_error("hunt_pattern_conjecture_sweep: max_order " + std::to_string(max_order) +
                             " exceeds cap " + std::to_string(kSweepCapDefault) +
                             " (force_large overrides)");
    SolveOptions inner = opts;
    inner.cap = std::max(opts.cap, max_order);  // the max_order gate above is the scale check
    PatternConjectureSweep sweep{max_order, 0, 0, 0, {}, {}};
    for (int order = 2; order <= max_order; ++order) {
        for (const Graph& g : all_connected_graphs(order)) {
            PatternConjectureReport rep = hunt_pattern_conjecture(g, inner);
            ++sweep.graphs_checked;
            if (!rep.violations.empty()) ++sweep.graphs_violating;
            for (CounterexampleRecord& r : rep.violations) sweep.violations.push_back(std::move(r));
            if (rep.equal_timeline_distinct_mw) {
                ++sweep.graphs_with_equal_timeline_witness;
                rep.violations.clear();
                sweep.witness_reports.push_back(std::move(rep));
            }
        }
    }
    // all_connected_graphs yields edge sets in lexicographic order per order, and records within
    // one graph are pattern-sorted already, so the flat list is canonically sorted as required.
    return sweep;
}

struct ZaneViolation {
    Graph graph;
    long long min_mw = 0;
    bool path_shaped = false;
};

struct ZaneReport {
    int q = 0;
    unsigned long long connected_count = 0;  // connected labeled graphs with exactly q edges
    long long global_min = 0;                // least min-mw over them (the theorem claims q)
    unsigned long long attaining_count = 0;
    unsigned long long path_shaped_count = 0;
    std::vector<ZaneViolation> non_path_attainers;   // attain the global min, not path-shaped
    std::vector<ZaneViolation> path_non_attainers;   // path-shaped, min-mw above the global min
};

// Sweeps every connected labeled graph with exactly q edges (as edge subsets of K_{q+1},
// support relabeled 1..s) and tests that the global minimum q is attained exactly by paths.
inline ZaneReport hunt_zane(int q, const SolveOptions& opts = {}) {
    if (q < 1) throw family_parameter_error("hunt_zane requires q >= 1");
    if (q > kZaneCapDefault && !opts.force_large)
        throw size_cap_error("hunt_zane: q " + std::to_string(q) + " exceeds cap " +
                             std::to_string(kZaneCapDefault) + " (force_large overrides)");
    const int big = q + 1;  // a connected graph with q edges has at most q+1 vertices
    // Supports never exceed q+1, which the q cap above already vets; widen the per-graph cap
    // so a caller-narrowed one cannot reject them.
    SolveOptions inner = opts;
    inner.cap = std::max(opts.cap, big);
    std::vector<Edge> pool;
    for (int u = 1; u < big; ++u)
        for (int v = u + 1; v <= big; ++v) pool.push_back(Edge{u, v});

    struct Entry {
        Graph graph;
        long long min_mw;
        bool path_shaped;
    };
    std::vector<Entry> entries;

    std::vector<int> pick(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) pick[static_cast<std::size_t>(i)] = i;
    const int pool_size = static_cast<int>(pool.size());
    std::vector<int> relabel(static_cast<std::size_t>(big) + 1, 0);
    for (;;) {
        // Compress the support to labels 1..s, preserving label order.
        std::fill(relabel.begin(), relabel.end(), 0);
        for (int i : pick) {
            relabel[static_cast<std::size_t>(pool[static_cast<std::size_t>(i)].u)] = 1;
            relabel[static_cast<std::size_t>(pool[static_cast<std::size_t>(i)].v)] = 1;
        }
        int support = 0;
        for (int v = 1; v <= big; ++v)
            if (relabel[static_cast<std::size_t>(v)]) relabel[static_cast<std::size_t>(v)] = ++support;
        std::vector<Edge> es;
        es.reserve(static_cast<std::size_t>(q));
        for (int i : pick)
            es.push_back(Edge{relabel[static_cast<std::size_t>(pool[static_cast<std::size_t>(i)].u)],
                              relabel[static_cast<std::size_t>(pool[static_cast<std::size_t>(i)].v)]});
        Graph g(support, std::move(es));
        if (g.is_connected()) {
            const bool shaped = is_path_shaped(g);
            const long long value = brute_force_extrema(g, inner).min_value;
            entries.push_back(Entry{std::move(g), value, shaped});
        }
        // Next q-combination of pool indices in lexicographic order.
        int slot = q - 1;
        while (slot >= 0 && pick[static_cast<std::size_t>(slot)] == pool_size - q + slot) --slot;
        if (slot < 0) break;
        ++pick[static_cast<std::size_t>(slot)];
        for (int j = slot + 1; j < q; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }

    ZaneReport report;
    report.q = q;
    report.connected_count = entries.size();
    report.global_min = entries.empty() ? 0 : entries.front().min_mw;
    for (const Entry& e : entries) report.global_min = std::min(report.global_min, e.min_mw);
    for (const Entry& e : entries) {
        if (e.path_shaped) ++report.path_shaped_count;
        if (e.min_mw == report.global_min) {
            ++report.attaining_count;
            if (!e.path_shaped)
                report.non_path_attainers.push_back(ZaneViolation{e.graph, e.min_mw, false});
        } else if (e.path_shaped) {
            report.path_non_attainers.push_back(ZaneViolation{e.graph, e.min_mw, true});
        }
    }
    return report;
}

struct HamiltonViolation {
    Graph graph;
    bool has_hamilton_path = false;
    bool has_t1_spanning_pattern = false;
};

struct HamiltonReport {
    int order = 0;
    unsigned long long connected_count = 0;
    unsigned long long with_hamilton_path = 0;
    std::vector<HamiltonViolation> violations;  // the biconditional claims this stays empty
};

namespace detail {

// Does any pattern make snapshot(1) a directed spanning path? Equivalent to: some vertex order
// has all consecutive pairs adjacent (weight-1 arcs are exactly consecutive-index edges). The
// unit tests pin this equivalence against literal sprout/snapshot evaluation.
inline std::optional<std::vector<int>> t1_spanning_order(const Graph& g) {
    const int n = g.order();
    if (n == 1) return std::vector<int>{1};
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            ok = g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]);
        if (ok) return order;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

}  // namespace detail

// Checks, over all connected labeled graphs of the given order, that a Hamilton path exists
// iff some pattern's snapshot(1) is a directed spanning path.
inline HamiltonReport hunt_hamilton_t1(int order, const SolveOptions& opts = {}) {
    if (order < 1) throw family_parameter_error("hunt_hamilton_t1 requires order >= 1");
    if (order > kHamiltonHuntCapDefault && !opts.force_large)
        throw size_cap_error("hunt_hamilton_t1: order " + std::to_string(order) + " exceeds cap " +
                             std::to_string(kHamiltonHuntCapDefault) + " (force_large overrides)");
    HamiltonReport report;
    report.order = order;
    for (const Graph& g : all_connected_graphs(order)) {
        ++report.connected_count;
        const bool backtracking_side = find_hamilton_path(g).has_value();
        const auto witness_order = detail::t1_spanning_order(g);
        bool pattern_side = witness_order.has_value();
        if (witness_order) {
            // Drive the claimed witness through the real machinery before trusting it.
            std::vector<int> assignment(static_cast<std::size_t>(order));
            for (int i = 0; i < order; ++i)
                assignment[static_cast<std::size_t>((*witness_order)[static_cast<std::size_t>(i)]) - 1] =
                    i + 1;
            const SproutGraph s = sprout(g, IndexPattern(std::move(assignment)));
            pattern_side = is_directed_spanning_path(snapshot(s, 1).arcs, order);
        }
        if (backtracking_side) ++report.with_hamilton_path;
        if (backtracking_side != pattern_side)
            report.violations.push_back(HamiltonViolation{g, backtracking_side, pattern_side});
    }
    return report;
}

}  // namespace sproutlab
