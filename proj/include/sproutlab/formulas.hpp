#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sproutlab/graph.hpp"
#include "sproutlab/pattern.hpp"
#include "sproutlab/solvers.hpp"
#include "sproutlab/sprout.hpp"

// Closed-form family values, transcribed exactly as stated in the source propositions,
// including the ones the exact solver refutes. The verifier reports each against the oracle;
// known-wrong forms (see data/expected_mismatches.json) stay wrong here on purpose.

namespace sproutlab {

namespace detail {
inline int ceil_div(int a, int b) { return (a + b - 1) / b; }
}  // namespace detail

// Sum_{j=1}^{n-1} Sum_{i=1}^{n-j} i; equals mw(K_n) under every pattern.
inline long long complete_mw_formula(int n) {
    if (n < 1) throw family_parameter_error("complete_mw_formula requires n >= 1");
    long long total = 0;
    for (int j = 1; j <= n - 1; ++j)
        for (int i = 1; i <= n - j; ++i) total += i;
    return total;
}

inline long long path_min_formula(int n) {
    if (n < 2) throw family_parameter_error("path_min_formula requires n >= 2");
    return n - 1;
}

// Sum_{i=0}^{ceil(n/2)-2} (2n-3-4i); empty range (n = 2) sums to 0.
inline long long path_max_formula(int n) {
    if (n < 2) throw family_parameter_error("path_max_formula requires n >= 2");
    long long total = 0;
    for (int i = 0; i <= detail::ceil_div(n, 2) - 2; ++i) total += 2 * n - 3 - 4 * i;
    return total;
}

inline long long cycle_min_formula(int n) {
    if (n < 3) throw family_parameter_error("cycle_min_formula requires n >= 3");
    return 2LL * (n - 1);
}

// path max + 1 for the closing edge; n = 3 is the stated K_3 constant 4.
inline long long cycle_max_formula(int n) {
    if (n < 3) throw family_parameter_error("cycle_max_formula requires n >= 3");
    if (n == 3) return 4;
    return path_max_formula(n) + 1;
}

// K_{1,n} minimum: 2*Sum_{i=1}^{c-1} i + c for odd n, 2*Sum_{i=1}^{c-1} i for even n,
// where c = ceil((n+1)/2). The n = 1 case falls out of the odd branch.
inline long long star_min_formula(int leaves) {
    if (leaves < 1) throw family_parameter_error("star_min_formula requires n >= 1 leaves");
    const int c = detail::ceil_div(leaves + 1, 2);
    long long twice_triangle = 0;
    for (int i = 1; i <= c - 1; ++i) twice_triangle += 2 * i;
    return leaves % 2 == 1 ? twice_triangle + c : twice_triangle;
}

// K_{1,n} maximum: Sum_{i=1}^{n} i.
inline long long star_max_formula(int leaves) {
    if (leaves < 1) throw family_parameter_error("star_max_formula requires n >= 1 leaves");
    long long total = 0;
    for (int i = 1; i <= leaves; ++i) total += i;
    return total;
}

enum class Objective { minimum, maximum };

// Center indices attaining the extremum: odd n -> {c, c+1}, even n -> {c}, maximum -> {1, n+1}.
inline std::vector<int> star_center_indices(int leaves, Objective objective) {
    if (leaves < 1) throw family_parameter_error("star_center_indices requires n >= 1 leaves");
    const int c = detail::ceil_div(leaves + 1, 2);
    if (objective == Objective::maximum) {
        if (leaves == 1) return {1, 2};
        return {1, leaves + 1};
    }
    if (leaves % 2 == 1) return {c, c + 1};
    return {c};
}

// K_{n,m} minimum: (nm/2)(n+m-1) + (m/2)(m+1) for odd n+m, (nm/2)(n+m) for even n+m.
inline long long bipartite_min_formula(int n, int m) {
    if (n < 2 || m < 2) throw family_parameter_error("bipartite formulas require n, m >= 2");
    const long long nm = static_cast<long long>(n) * m;
    if ((n + m) % 2 == 1) return nm * (n + m - 1) / 2 + static_cast<long long>(m) * (m + 1) / 2;
    return nm * (n + m) / 2;
}

namespace detail {
// Odd n+m case shared by both bracketings: (n(floor((n+m)/2)-1) + n(n+1)/2)(n+m).
inline long long bipartite_max_odd(int n, int m) {
    const long long inner = static_cast<long long>(n) * ((n + m) / 2 - 1) +
                            static_cast<long long>(n) * (n + 1) / 2;
    return inner * (n + m);
}
}  // namespace detail

// Even n+m reading A of the unbalanced "(n(n-1)+nm/2(n+m)": n(n-1) + (nm/2)(n+m).
inline long long bipartite_max_formula_a(int n, int m) {
    if (n < 2 || m < 2) throw family_parameter_error("bipartite formulas require n, m >= 2");
    if ((n + m) % 2 == 1) return detail::bipartite_max_odd(n, m);
    return static_cast<long long>(n) * (n - 1) + static_cast<long long>(n) * m * (n + m) / 2;
}

// Even n+m reading B: (n(n-1) + nm/2)(n+m), computed exactly (n+m even keeps it integral).
inline long long bipartite_max_formula_b(int n, int m) {
    if (n < 2 || m < 2) throw family_parameter_error("bipartite formulas require n, m >= 2");
    if ((n + m) % 2 == 1) return detail::bipartite_max_odd(n, m);
    return (2LL * n * (n - 1) + static_cast<long long>(n) * m) * (n + m) / 2;
}

enum class BipartiteLabeling { minimum, maximum };

// The labelings described in the bipartite proof. minimum: left column takes indices
// 1, m+2..m+n top-down, right column 2..m+1. maximum: columns consecutively 1..n then n+1..n+m.
inline IndexPattern bipartite_labeling_pattern(int n, int m, BipartiteLabeling which) {
    if (n < 2 || m < 2) throw family_parameter_error("bipartite labelings require n, m >= 2");
    std::vector<int> a(static_cast<std::size_t>(n + m));
    if (which == BipartiteLabeling::maximum) {
        for (int i = 0; i < n + m; ++i) a[static_cast<std::size_t>(i)] = i + 1;
    } else {
        a[0] = 1;
        for (int i = 2; i <= n; ++i) a[static_cast<std::size_t>(i) - 1] = m + i;
        for (int j = 1; j <= m; ++j) a[static_cast<std::size_t>(n + j) - 1] = 1 + j;
    }
    return IndexPattern(std::move(a));
}

inline long long bipartite_labeling_value(int n, int m, BipartiteLabeling which) {
    return maturity_weight(make_complete_bipartite(n, m), bipartite_labeling_pattern(n, m, which));
}

// W_{rim+1} minimum: cycle min + star min + 2.
inline long long wheel_min_formula(int rim) {
    if (rim < 4) throw family_parameter_error("wheel formulas require rim >= 4");
    return cycle_min_formula(rim) + star_min_formula(rim) + 2;
}

// W_{rim+1} maximum: cycle max + star max.
inline long long wheel_max_formula(int rim) {
    if (rim < 4) throw family_parameter_error("wheel formulas require rim >= 4");
    return cycle_max_formula(rim) + star_max_formula(rim);
}

// L_n minimum: 2(n-1) + n(n-2). Ladder maxima have no stated closed form (open problem).
inline long long ladder_min_formula(int n) {
    if (n < 3) throw family_parameter_error("ladder_min_formula requires n >= 3");
    return 2LL * (n - 1) + static_cast<long long>(n) * (n - 2);
}

// mw(g,pg) + mw(h,ph) + |k - (l+n)| where k, l are the chosen vertices' indices and n = order(g).
// Exactly the mw of edge_joint(g,h,v,u) under combine_patterns(pg,ph).
inline long long edge_joint_mw_formula(const Graph& g, const IndexPattern& pg, const Graph& h,
                                       const IndexPattern& ph, int v, int u) {
    if (v < 1 || v > g.order()) throw graph_error("edge_joint_mw_formula: v outside 1..order(g)");
    if (u < 1 || u > h.order()) throw graph_error("edge_joint_mw_formula: u outside 1..order(h)");
    const long long k = pg.index_of(v);
    const long long l = ph.index_of(u);
    return maturity_weight(g, pg) + maturity_weight(h, ph) + std::abs(k - (l + g.order()));
}

// Mirrored composition: h's block comes first, g shifts by m = order(h); bridge term |(k+m) - l|.
// Exactly the mw of edge_joint(h,g,u,v) under combine_patterns(ph,pg).
inline long long edge_joint_mw_formula_mirrored(const Graph& g, const IndexPattern& pg, const Graph& h,
                                                const IndexPattern& ph, int v, int u) {
    if (v < 1 || v > g.order()) throw graph_error("edge_joint_mw_formula_mirrored: v outside 1..order(g)");
    if (u < 1 || u > h.order()) throw graph_error("edge_joint_mw_formula_mirrored: u outside 1..order(h)");
    const long long k = pg.index_of(v);
    const long long l = ph.index_of(u);
    return maturity_weight(g, pg) + maturity_weight(h, ph) + std::abs(k + h.order() - l);
}

enum class Verdict { match, mismatch, unchecked };

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        default: return "unchecked";
    }
}

struct FormulaReport {
    std::string family;
    std::vector<int> params;
    std::string quantity;  // "min", "max", "mw", "max_a", "max_b", "min_labeling", "max_labeling"
    long long formula_value = 0;
    std::optional<long long> oracle_value;
    Verdict verdict = Verdict::unchecked;
    std::string reference;  // the closed form as written
};

namespace detail {

inline FormulaReport make_report(std::string family, std::vector<int> params, std::string quantity,
                                 long long formula, std::optional<long long> oracle,
                                 std::string reference) {
    const Verdict v = !oracle ? Verdict::unchecked
                              : (*oracle == formula ? Verdict::match : Verdict::mismatch);
    return FormulaReport{std::move(family), std::move(params), std::move(quantity),
                         formula,           oracle,            v,
                         std::move(reference)};
}

// Oracle extrema when the order fits the cap discipline; nullopt marks unchecked.
inline std::optional<ExtremaResult> oracle_extrema(const Graph& g, const SolveOptions& opts) {
    if (g.order() > opts.cap && !opts.force_large) return std::nullopt;
    return brute_force_extrema(g, opts);
}

}  // namespace detail

// One report per (parameter, quantity), deterministic order. For complete_bipartite the range
// sweeps ordered pairs (n, m) in [from..to]^2 because the stated formulas are order-sensitive.
inline std::vector<FormulaReport> verify_family(std::string_view family, int from, int to,
                                                const SolveOptions& opts = {}) {
    std::vector<FormulaReport> reports;
    const auto minmax = [](const std::optional<ExtremaResult>& r)
        -> std::pair<std::optional<long long>, std::optional<long long>> {
        if (!r) return {std::nullopt, std::nullopt};
        return {r->min_value, r->max_value};
    };

    if (family == "path") {
        if (from < 2) throw family_parameter_error("verify path requires from >= 2");
        for (int n = from; n <= to; ++n) {
            const auto [omin, omax] = minmax(detail::oracle_extrema(make_path(n), opts));
            reports.push_back(detail::make_report("path", {n}, "min", path_min_formula(n), omin, "n-1"));
            reports.push_back(detail::make_report("path", {n}, "max", path_max_formula(n), omax,
                                                  "sum_{i=0}^{ceil(n/2)-2} (2n-3-4i)"));
        }
    } else if (family == "cycle") {
        if (from < 3) throw family_parameter_error("verify cycle requires from >= 3");
        for (int n = from; n <= to; ++n) {
            const auto [omin, omax] = minmax(detail::oracle_extrema(make_cycle(n), opts));
            reports.push_back(
                detail::make_report("cycle", {n}, "min", cycle_min_formula(n), omin, "2(n-1)"));
            reports.push_back(detail::make_report("cycle", {n}, "max", cycle_max_formula(n), omax,
                                                  "path max + 1 (n=3: the K_3 constant 4)"));
        }
    } else if (family == "complete") {
        if (from < 1) throw family_parameter_error("verify complete requires from >= 1");
        for (int n = from; n <= to; ++n) {
            const auto [omin, omax] = minmax(detail::oracle_extrema(make_complete(n), opts));
            // Constant family: min and max coincide; a disagreement on either flags mismatch.
            std::optional<long long> oracle;
            if (omin && omax) oracle = (*omin == *omax) ? omin : std::optional<long long>(-1);
            reports.push_back(detail::make_report("complete", {n}, "mw", complete_mw_formula(n), oracle,
                                                  "sum_{j=1}^{n-1} sum_{i=1}^{n-j} i"));
        }
    } else if (family == "star") {
        if (from < 1) throw family_parameter_error("verify star requires from >= 1 leaves");
        for (int n = from; n <= to; ++n) {
            const auto [omin, omax] = minmax(detail::oracle_extrema(make_star(n), opts));
            reports.push_back(detail::make_report("star", {n}, "min", star_min_formula(n), omin,
                                                  "2 sum_{i=1}^{ceil((n+1)/2)-1} i (+ ceil((n+1)/2) for odd n)"));
            reports.push_back(
                detail::make_report("star", {n}, "max", star_max_formula(n), omax, "sum_{i=1}^{n} i"));
        }
    } else if (family == "complete_bipartite") {
        if (from < 2) throw family_parameter_error("verify complete_bipartite requires from >= 2");
        for (int n = from; n <= to; ++n) {
            for (int m = from; m <= to; ++m) {
                const auto [omin, omax] =
                    minmax(detail::oracle_extrema(make_complete_bipartite(n, m), opts));
                reports.push_back(detail::make_report(
                    "complete_bipartite", {n, m}, "min", bipartite_min_formula(n, m), omin,
                    "(nm/2)(n+m-1) + (m/2)(m+1) odd n+m; (nm/2)(n+m) even"));
                reports.push_back(detail::make_report(
                    "complete_bipartite", {n, m}, "max_a", bipartite_max_formula_a(n, m), omax,
                    "reading A of (n(n-1)+nm/2(n+m): n(n-1) + (nm/2)(n+m)"));
                reports.push_back(detail::make_report(
                    "complete_bipartite", {n, m}, "max_b", bipartite_max_formula_b(n, m), omax,
                    "reading B of (n(n-1)+nm/2(n+m): (n(n-1) + nm/2)(n+m)"));
                reports.push_back(detail::make_report(
                    "complete_bipartite", {n, m}, "min_labeling",
                    bipartite_labeling_value(n, m, BipartiteLabeling::minimum), omin,
                    "proof labeling: left 1, m+2..m+n; right 2..m+1"));
                reports.push_back(detail::make_report(
                    "complete_bipartite", {n, m}, "max_labeling",
                    bipartite_labeling_value(n, m, BipartiteLabeling::maximum), omax,
                    "proof labeling: columns consecutive 1..n, n+1..n+m"));
            }
        }
    } else if (family == "wheel") {
        if (from < 4) throw family_parameter_error("verify wheel requires from >= 4 (rim size)");
        for (int n = from; n <= to; ++n) {
            const auto [omin, omax] = minmax(detail::oracle_extrema(make_wheel(n), opts));
            reports.push_back(detail::make_report("wheel", {n}, "min", wheel_min_formula(n), omin,
                                                  "cycle min + star min + 2"));
            reports.push_back(detail::make_report("wheel", {n}, "max", wheel_max_formula(n), omax,
                                                  "cycle max + star max"));
        }
    } else if (family == "ladder") {
        if (from < 3) throw family_parameter_error("verify ladder requires from >= 3");
        for (int n = from; n <= to; ++n) {
            const auto [omin, omax] = minmax(detail::oracle_extrema(make_ladder(n), opts));
            (void)omax;  // ladder maxima are an open problem; only the min has a stated form
            reports.push_back(detail::make_report("ladder", {n}, "min", ladder_min_formula(n), omin,
                                                  "2(n-1) + n(n-2)"));
        }
    } else {
        throw family_parameter_error(std::string("verify does not know family '") +
                                     std::string(family) + "'");
    }
    return reports;
}

// Canonical allowlist key, e.g. "path/4/max" or "complete_bipartite/2,2/min".
inline std::string mismatch_key(const FormulaReport& r) {
    std::string key = r.family + "/";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(r.params[i]);
    }
    key += "/" + r.quantity;
    return key;
}

}  // namespace sproutlab
