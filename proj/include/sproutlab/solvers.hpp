#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <thread>
#include <utility>
#include <vector>

#include "sproutlab/graph.hpp"
#include "sproutlab/pattern.hpp"
#include "sproutlab/sprout.hpp"

namespace sproutlab {

inline constexpr int kBruteForceCapDefault = 11;
inline constexpr int kBranchBoundCapDefault = 16;

struct SolveOptions {
    int cap = kBruteForceCapDefault;  // maximum order accepted without force_large
    bool force_large = false;
    unsigned jobs = 1;  // worker threads; results are identical for any value
};

struct ExtremaResult {
    long long min_value = 0;
    long long max_value = 0;
    IndexPattern min_pattern;  // lexicographically least witness over all n! patterns
    IndexPattern max_pattern;
    unsigned long long explored = 0;  // patterns evaluated (reversal halving skips about half)
};

// Uniform random pattern; same seed, same pattern, on every platform.
inline IndexPattern random_pattern(int n, std::uint64_t seed) {
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i + 1;
    std::uint64_t state = seed;
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(
            detail::splitmix64_below(state, static_cast<std::uint64_t>(i) + 1));
        std::swap(a[static_cast<std::size_t>(i)], a[j]);
    }
    return IndexPattern(std::move(a));
}

namespace detail {

// 0-based endpoint pairs for the solver hot loops.
inline std::vector<std::pair<int, int>> flat_edges(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges().size());
    for (const Edge& e : g.edges()) es.emplace_back(e.u - 1, e.v - 1);
    return es;
}

inline long long eval_mw(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& p) {
    long long s = 0;
    for (auto [x, y] : edges) s += std::abs(p[static_cast<std::size_t>(x)] - p[static_cast<std::size_t>(y)]);
    return s;
}

// Lexicographic compare of min(p, reverse(p)) against w; true iff the candidate is strictly less.
// reverse(p) maps every entry x to n+1-x; neither view is materialized.
inline bool candidate_less(const std::vector<int>& p, bool reversed, const std::vector<int>& w) {
    const int n = static_cast<int>(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const int v = reversed ? n + 1 - p[i] : p[i];
        if (v != w[i]) return v < w[i];
    }
    return false;
}

inline void copy_candidate(const std::vector<int>& p, bool reversed, std::vector<int>& w) {
    const int n = static_cast<int>(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) w[i] = reversed ? n + 1 - p[i] : p[i];
}

struct UnitExtrema {
    long long min_value = 0;
    long long max_value = 0;
    std::vector<int> min_witness;
    std::vector<int> max_witness;
    unsigned long long explored = 0;
    bool used = false;
};

// Consider both p and its reversal as witnesses for any extremum p attains.
inline void absorb_pattern(UnitExtrema& r, const std::vector<int>& p, long long value) {
    ++r.explored;
    auto take = [&](long long& best, std::vector<int>& w, bool minimizing) {
        const bool improves = minimizing ? value < best : value > best;
        if (!r.used || improves) {
            best = value;
            copy_candidate(p, false, w);
            if (candidate_less(p, true, w)) copy_candidate(p, true, w);
        } else if (value == best) {
            if (candidate_less(p, false, w)) copy_candidate(p, false, w);
            if (candidate_less(p, true, w)) copy_candidate(p, true, w);
        }
    };
    take(r.min_value, r.min_witness, true);
    take(r.max_value, r.max_witness, false);
    r.used = true;
}

inline void merge_units(UnitExtrema& into, const UnitExtrema& from) {
    if (!from.used) return;
    into.explored += from.explored;
    if (!into.used) {
        into.min_value = from.min_value;
        into.max_value = from.max_value;
        into.min_witness = from.min_witness;
        into.max_witness = from.max_witness;
        into.used = true;
        return;
    }
    if (from.min_value < into.min_value ||
        (from.min_value == into.min_value && from.min_witness < into.min_witness)) {
        into.min_value = from.min_value;
        into.min_witness = from.min_witness;
    }
    if (from.max_value > into.max_value ||
        (from.max_value == into.max_value && from.max_witness < into.max_witness)) {
        into.max_value = from.max_value;
        into.max_witness = from.max_witness;
    }
}

// Enumerates patterns with index(vertex 1) <= ceil(n/2); every pattern or its reversal is covered.
// Work units are (index of vertex 1, index of vertex 2) prefixes; unit results merge in fixed
// order, so the outcome is identical for any worker count.
template <typename PatternFn>
inline UnitExtrema scan_halved(int n, unsigned jobs, PatternFn&& per_pattern) {
    UnitExtrema total;
    total.min_witness.assign(static_cast<std::size_t>(n), 0);
    total.max_witness.assign(static_cast<std::size_t>(n), 0);
    if (n == 1) {
        std::vector<int> p{1};
        per_pattern(total, p);
        return total;
    }
    const int first_cap = (n + 1) / 2;
    std::vector<std::pair<int, int>> units;
    for (int a = 1; a <= first_cap; ++a)
        for (int b = 1; b <= n; ++b)
            if (b != a) units.emplace_back(a, b);

    std::vector<UnitExtrema> results(units.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::vector<int> tail;
        for (;;) {
            const std::size_t unit = cursor.fetch_add(1);
            if (unit >= units.size()) return;
            const auto [a, b] = units[unit];
            UnitExtrema& r = results[unit];
            r.min_witness.assign(static_cast<std::size_t>(n), 0);
            r.max_witness.assign(static_cast<std::size_t>(n), 0);
            p[0] = a;
            p[1] = b;
            tail.clear();
            for (int v = 1; v <= n; ++v)
                if (v != a && v != b) tail.push_back(v);
            do {
                std::copy(tail.begin(), tail.end(), p.begin() + 2);
                per_pattern(r, p);
            } while (std::next_permutation(tail.begin(), tail.end()));
        }
    };

    const unsigned worker_count =
        std::max(1u, std::min(jobs, static_cast<unsigned>(units.size())));
    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned i = 0; i < worker_count; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (const UnitExtrema& r : results) merge_units(total, r);
    return total;
}

inline void check_cap(const char* op, int order, const SolveOptions& opts) {
    if (order > opts.cap && !opts.force_large)
        throw size_cap_error(std::string(op) + ": order " + std::to_string(order) +
                             " exceeds cap " + std::to_string(opts.cap) +
                             " (force_large overrides)");
}

}  // namespace detail

// Exact global minimum and maximum of mw over all n! patterns.
inline ExtremaResult brute_force_extrema(const Graph& g, const SolveOptions& opts = {}) {
    detail::check_cap("brute_force_extrema", g.order(), opts);
    const auto edges = detail::flat_edges(g);
    detail::UnitExtrema total =
        detail::scan_halved(g.order(), opts.jobs, [&](detail::UnitExtrema& r, const std::vector<int>& p) {
            detail::absorb_pattern(r, p, detail::eval_mw(edges, p));
        });
    return ExtremaResult{total.min_value, total.max_value, IndexPattern(std::move(total.min_witness)),
                         IndexPattern(std::move(total.max_witness)), total.explored};
}

struct BoundedSearchResult {
    long long value = 0;
    IndexPattern pattern;
    unsigned long long explored = 0;  // search nodes expanded
};

// Depth-first exact minimization. Index positions 1..n are filled in order; at each depth the
// unassigned vertices are tried in ascending label order. Bound: exact weight of fully assigned
// edges, plus (next position - assigned index) per half-assigned edge, plus 1 per untouched edge.
// Prunes when bound >= incumbent, so the result is the first optimum in DFS order.
inline BoundedSearchResult branch_and_bound_min(const Graph& g,
                                                const SolveOptions& opts = {.cap = kBranchBoundCapDefault}) {
    detail::check_cap("branch_and_bound_min", g.order(), opts);
    const int n = g.order();
    const auto edges = detail::flat_edges(g);

    const IndexPattern identity = IndexPattern::identity(n);
    long long incumbent = maturity_weight(g, identity);
    std::vector<int> best = identity.assignment();

    std::vector<int> idx(static_cast<std::size_t>(n), 0);  // 0 = unassigned
    unsigned long long explored = 0;

    auto bound = [&](int assigned) -> long long {
        long long b = 0;
        for (auto [x, y] : edges) {
            const int ix = idx[static_cast<std::size_t>(x)];
            const int iy = idx[static_cast<std::size_t>(y)];
            if (ix && iy)
                b += std::abs(ix - iy);
            else if (ix)
                b += assigned + 1 - ix;
            else if (iy)
                b += assigned + 1 - iy;
            else
                b += 1;
        }
        return b;
    };

    auto dfs = [&](auto&& self, int assigned) -> void {
        ++explored;
        if (assigned == n) {
            const long long value = bound(assigned);
            if (value < incumbent) {
                incumbent = value;
                best = idx;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (idx[static_cast<std::size_t>(v)]) continue;
            idx[static_cast<std::size_t>(v)] = assigned + 1;
            if (bound(assigned + 1) < incumbent) self(self, assigned + 1);
            idx[static_cast<std::size_t>(v)] = 0;
        }
    };
    dfs(dfs, 0);
    return BoundedSearchResult{incumbent, IndexPattern(std::move(best)), explored};
}

// Maxi-max zigzag sequence: seed n,1,n-1 then alternately prepend / append the unused value
// with the largest new end difference, ties to the smaller value.
inline std::vector<int> mmaw_sequence(int n) {
    if (n < 1) throw family_parameter_error("mmaw_sequence requires n >= 1");
    if (n == 1) return {1};
    if (n == 2) return {1, 2};
    std::deque<int> seq{n, 1, n - 1};
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int v : seq) used[static_cast<std::size_t>(v)] = 1;
    bool prepend = true;
    for (int placed = 3; placed < n; ++placed) {
        const int end = prepend ? seq.front() : seq.back();
        int pick = 0;
        int best_gap = -1;
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            const int gap = std::abs(end - v);
            if (gap > best_gap) {
                best_gap = gap;
                pick = v;
            }
        }
        used[static_cast<std::size_t>(pick)] = 1;
        if (prepend)
            seq.push_front(pick);
        else
            seq.push_back(pick);
        prepend = !prepend;
    }
    return {seq.begin(), seq.end()};
}

// The sequence applied positionally along P_n: path vertex i takes index mmaw_sequence(n)[i-1].
inline IndexPattern mmaw_path_pattern(int n) {
    if (n < 2) throw family_parameter_error("mmaw_path_pattern requires n >= 2");
    return IndexPattern(mmaw_sequence(n));
}

// Same assignment around C_n; the closing edge joins the two sequence ends.
inline IndexPattern mmaw_cycle_pattern(int n) {
    if (n < 3) throw family_parameter_error("mmaw_cycle_pattern requires n >= 3");
    return IndexPattern(mmaw_sequence(n));
}

// Maxi-min labeling: the identity 1..n; attains min mw = n-1 on P_n.
inline IndexPattern mmaw_identity_pattern(int n) { return IndexPattern::identity(n); }

struct DualityReport {
    int order = 0;
    long long complete_value = 0;  // mw of K_order, the pattern-independent constant
    unsigned long long patterns_checked = 0;
    bool sum_identity_holds = false;  // mw(g,p) + mw(complement(g),p) == complete_value for all p
    ExtremaResult graph_extrema;
    ExtremaResult complement_extrema;
    bool witness_duality_holds = false;  // argmin(g) == argmax(complement) and vice versa
};

// Checks the complement decomposition of K_n's arc weights over every pattern.
inline DualityReport complement_duality(const Graph& g, const SolveOptions& opts = {}) {
    detail::check_cap("complement_duality", g.order(), opts);
    const Graph co = complement(g);
    const long long complete_value =
        maturity_weight(make_complete(g.order()), IndexPattern::identity(g.order()));
    ExtremaResult graph_extrema = brute_force_extrema(g, opts);
    ExtremaResult complement_extrema = brute_force_extrema(co, opts);

    const auto ge = detail::flat_edges(g);
    const auto ce = detail::flat_edges(co);
    std::atomic<bool> holds{true};
    const detail::UnitExtrema scan =
        detail::scan_halved(g.order(), opts.jobs, [&](detail::UnitExtrema& r, const std::vector<int>& p) {
            ++r.explored;
            r.used = true;
            if (detail::eval_mw(ge, p) + detail::eval_mw(ce, p) != complete_value)
                holds.store(false, std::memory_order_relaxed);
        });
    const bool witness_duality = graph_extrema.min_pattern == complement_extrema.max_pattern &&
                                 graph_extrema.max_pattern == complement_extrema.min_pattern;
    return DualityReport{g.order(),        complete_value,
                         scan.explored,    holds.load(),
                         std::move(graph_extrema), std::move(complement_extrema),
                         witness_duality};
}

}  // namespace sproutlab
