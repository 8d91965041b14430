// Acceptance gate: one check per shipped claim, one pass/fail line each. The ladder criterion
// documents a known-wrong stated closed form at n = 5; the process exits 0 only when every other
// criterion passes and that one fails in exactly the documented way.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "sproutlab/sproutlab.hpp"
#include "test_support.hpp"

namespace sl = sproutlab;

namespace {

struct Outcome {
    bool pass = false;
    bool documented_failure = false;  // failed, but exactly as shipped expectations describe
    std::vector<std::string> notes;
};

Outcome pass() { return {true, false, {}}; }

Outcome fail(std::string note) { return {false, false, {std::move(note)}}; }

long long mw(const sl::Graph& g, const sl::IndexPattern& p) { return sl::maturity_weight(g, p); }

// 1: the two small star tables, every row.
Outcome star_tables() {
    const sl::Graph k13 = sl::make_star(3);
    std::vector<int> p{1, 2, 3, 4};
    int rows = 0;
    do {
        const long long value = mw(k13, sl::IndexPattern(p));
        const int center = p[0];
        const long long want = (center == 1 || center == 4) ? 6 : 4;
        if (value != want)
            return fail("K_{1,3} center index " + std::to_string(center) + ": mw " +
                        std::to_string(value) + ", expected " + std::to_string(want));
        ++rows;
    } while (std::next_permutation(p.begin(), p.end()));
    if (rows != 24) return fail("K_{1,3} table has " + std::to_string(rows) + " rows, expected 24");

    const sl::Graph k12 = sl::make_star(2);
    std::vector<int> q{1, 2, 3};
    rows = 0;
    const long long by_center[] = {0, 3, 2, 3};
    do {
        const long long value = mw(k12, sl::IndexPattern(q));
        if (value != by_center[q[0]])
            return fail("K_{1,2} center index " + std::to_string(q[0]) + ": mw " +
                        std::to_string(value));
        ++rows;
    } while (std::next_permutation(q.begin(), q.end()));
    if (rows != 6) return fail("K_{1,2} table has " + std::to_string(rows) + " rows, expected 6");
    return pass();
}

// 2: complete graphs are pattern-independent and match the double sum.
Outcome complete_constancy() {
    for (int n = 2; n <= 10; ++n) {
        const sl::Graph g = sl::make_complete(n);
        const long long want = sl::complete_mw_formula(n);
        if (n == 4 && want != 10) return fail("double sum at n=4 is " + std::to_string(want));
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const long long got = mw(g, sl::random_pattern(n, seed * 977 + n));
            if (got != want)
                return fail("K_" + std::to_string(n) + " seed " + std::to_string(seed) + ": mw " +
                            std::to_string(got) + " != " + std::to_string(want));
        }
    }
    return pass();
}

// 3: exhaustive path and cycle minima.
Outcome exhaustive_minima() {
    for (int n = 2; n <= 9; ++n) {
        const long long got = sl::brute_force_extrema(sl::make_path(n)).min_value;
        if (got != n - 1)
            return fail("path " + std::to_string(n) + " min " + std::to_string(got));
    }
    for (int n = 4; n <= 9; ++n) {
        const long long got = sl::brute_force_extrema(sl::make_cycle(n)).min_value;
        if (got != 2LL * (n - 1))
            return fail("cycle " + std::to_string(n) + " min " + std::to_string(got));
    }
    return pass();
}

// 4: the verifier flags exactly the documented wrong forms at n = 4 and the matches at n = 3.
Outcome documented_mismatches() {
    const auto find = [](const std::vector<sl::FormulaReport>& rs, const std::string& key) {
        for (const sl::FormulaReport& r : rs)
            if (sl::mismatch_key(r) == key) return r;
        throw sl::format_error("missing report " + key);
    };
    const auto expect = [&](const sl::FormulaReport& r, long long formula, long long oracle,
                            sl::Verdict verdict) {
        return r.formula_value == formula && r.oracle_value && *r.oracle_value == oracle &&
               r.verdict == verdict;
    };
    const std::vector<sl::FormulaReport> paths = sl::verify_family("path", 3, 4);
    const std::vector<sl::FormulaReport> cycles = sl::verify_family("cycle", 3, 4);
    const std::vector<sl::FormulaReport> bip = sl::verify_family("complete_bipartite", 2, 2);
    if (!expect(find(paths, "path/4/max"), 5, 7, sl::Verdict::mismatch))
        return fail("path/4/max should be formula 5 vs oracle 7");
    if (!expect(find(paths, "path/3/max"), 3, 3, sl::Verdict::match))
        return fail("path/3/max should match at 3");
    if (!expect(find(cycles, "cycle/4/max"), 6, 8, sl::Verdict::mismatch))
        return fail("cycle/4/max should be formula 6 vs oracle 8");
    if (!expect(find(cycles, "cycle/3/max"), 4, 4, sl::Verdict::match))
        return fail("cycle/3/max should match at 4");
    if (!expect(find(bip, "complete_bipartite/2,2/min"), 8, 6, sl::Verdict::mismatch))
        return fail("complete_bipartite/2,2/min should be formula 8 vs oracle 6");
    return pass();
}

// 5: the zigzag construction attains the exhaustive maxima; its ends stay consecutive.
Outcome mmaw_constructions() {
    for (int n = 3; n <= 9; ++n) {
        const long long path_max = sl::brute_force_extrema(sl::make_path(n)).max_value;
        if (mw(sl::make_path(n), sl::mmaw_path_pattern(n)) != path_max)
            return fail("path " + std::to_string(n) + ": construction misses max " +
                        std::to_string(path_max));
        const long long cycle_max = sl::brute_force_extrema(sl::make_cycle(n)).max_value;
        if (mw(sl::make_cycle(n), sl::mmaw_cycle_pattern(n)) != cycle_max)
            return fail("cycle " + std::to_string(n) + ": construction misses max " +
                        std::to_string(cycle_max));
    }
    for (int n = 4; n <= 12; ++n) {
        const std::vector<int> seq = sl::mmaw_sequence(n);
        if (std::abs(seq.front() - seq.back()) != 1)
            return fail("sequence ends at n=" + std::to_string(n) + " are " +
                        std::to_string(seq.front()) + " and " + std::to_string(seq.back()));
    }
    return pass();
}

// 6: complement sum identity on random pairs; full argmin/argmax duality up to order 5.
Outcome complement_identity() {
    std::uint64_t state = 20260822;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(sl::detail::splitmix64_below(state, 9));
        const std::uint64_t all = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const int m = static_cast<int>(sl::detail::splitmix64_below(state, all + 1));
        const sl::Graph g = sl::make_random(n, m, sl::detail::splitmix64(state));
        const sl::IndexPattern p = sl::random_pattern(n, sl::detail::splitmix64(state));
        if (mw(g, p) + mw(sl::complement(g), p) != sl::complete_mw_formula(n))
            return fail("sum identity broke at trial " + std::to_string(trial));
    }
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pool;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) pool.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ULL << pool.size()); ++mask) {
            std::vector<std::pair<int, int>> es;
            for (std::size_t b = 0; b < pool.size(); ++b)
                if (mask >> b & 1) es.push_back(pool[b]);
            const sl::DualityReport rep = sl::complement_duality(sl::Graph(n, es));
            if (!rep.sum_identity_holds)
                return fail("sum identity broke on an order-" + std::to_string(n) + " graph");
            if (!rep.witness_duality_holds)
                return fail("witness duality broke on an order-" + std::to_string(n) + " graph");
        }
    }
    return pass();
}

// 7: sinks and sources exist per component; complete graphs have exactly one; reversal swaps
// the two sets; shifting a pattern by padding preserves arc weights.
Outcome structural_invariants() {
    std::uint64_t state = 7;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(sl::detail::splitmix64_below(state, 12));
        const std::uint64_t all = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const sl::Graph g =
            sl::make_random(n, static_cast<int>(sl::detail::splitmix64_below(state, all + 1)),
                            sl::detail::splitmix64(state));
        const sl::IndexPattern p = sl::random_pattern(n, sl::detail::splitmix64(state));
        const sl::SproutGraph s = sl::sprout(g, p);

        const std::vector<int> comp = g.component_ids();
        const int components = g.component_count();
        std::vector<bool> has_adult(static_cast<std::size_t>(components), false);
        std::vector<bool> has_initiator(static_cast<std::size_t>(components), false);
        for (int v : sl::adult_vertices(s)) has_adult[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = true;
        for (int v : sl::initiator_vertices(s)) has_initiator[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = true;
        for (int c = 0; c < components; ++c)
            if (!has_adult[static_cast<std::size_t>(c)] || !has_initiator[static_cast<std::size_t>(c)])
                return fail("component without a sink or source at trial " + std::to_string(trial));

        const sl::SproutGraph reversed = sl::sprout(g, p.reversed());
        if (sl::adult_vertices(s) != sl::initiator_vertices(reversed) ||
            sl::initiator_vertices(s) != sl::adult_vertices(reversed))
            return fail("reversal did not swap sinks and sources at trial " + std::to_string(trial));

        const int pad = 1 + static_cast<int>(sl::detail::splitmix64_below(state, 4));
        const sl::Graph shifted = sl::disjoint_union(sl::Graph(pad), g);
        const sl::IndexPattern shifted_pattern =
            sl::combine_patterns(sl::IndexPattern::identity(pad), p);
        std::vector<int> before, after;
        const sl::SproutGraph shifted_sprout = sl::sprout(shifted, shifted_pattern);
        for (const sl::Arc& a : s.arcs()) before.push_back(a.weight);
        for (const sl::Arc& a : shifted_sprout.arcs()) after.push_back(a.weight);
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        if (before != after)
            return fail("padding changed the weight multiset at trial " + std::to_string(trial));
    }
    for (int n = 2; n <= 8; ++n) {
        const sl::SproutGraph s =
            sl::sprout(sl::make_complete(n), sl::random_pattern(n, 1000 + static_cast<std::uint64_t>(n)));
        if (sl::adult_vertices(s).size() != 1 || sl::initiator_vertices(s).size() != 1)
            return fail("K_" + std::to_string(n) + " does not have exactly one sink and source");
    }
    return pass();
}

// 8: the leaf-stripping pattern leaves exactly one sink (or source) on random trees.
Outcome leaf_lob() {
    std::uint64_t state = 11;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(sl::detail::splitmix64_below(state, 12));
        const sl::Graph tree = sl::make_random_tree(n, sl::detail::splitmix64(state));
        const sl::SproutGraph adult =
            sl::sprout(tree, sl::leaf_lob_pattern(tree, sl::LobMode::unique_adult));
        if (sl::adult_vertices(adult).size() != 1)
            return fail("unique_adult gave " + std::to_string(sl::adult_vertices(adult).size()) +
                        " sinks on an order-" + std::to_string(n) + " tree");
        const sl::SproutGraph initiator =
            sl::sprout(tree, sl::leaf_lob_pattern(tree, sl::LobMode::unique_initiator));
        if (sl::initiator_vertices(initiator).size() != 1)
            return fail("unique_initiator gave " +
                        std::to_string(sl::initiator_vertices(initiator).size()) + " sources");
    }
    return pass();
}

// 9: level-1 spanning directed path iff hamilton path, all connected graphs through order 6.
Outcome hamilton_biconditional() {
    for (int order = 1; order <= 6; ++order) {
        const sl::HamiltonReport rep = sl::hunt_hamilton_t1(order);
        if (!rep.violations.empty())
            return fail("order " + std::to_string(order) + ": " +
                        std::to_string(rep.violations.size()) + " violations");
    }
    return pass();
}

// 10: the q-edge global minimum is q, attained exactly by path shapes, q through 6.
Outcome zane_sweep() {
    for (int q = 1; q <= 6; ++q) {
        const sl::ZaneReport rep = sl::hunt_zane(q);
        if (rep.global_min != q)
            return fail("q=" + std::to_string(q) + ": global min " +
                        std::to_string(rep.global_min));
        if (!rep.non_path_attainers.empty())
            return fail("q=" + std::to_string(q) + ": " +
                        std::to_string(rep.non_path_attainers.size()) + " non-path attainers");
        if (!rep.path_non_attainers.empty())
            return fail("q=" + std::to_string(q) + ": a path shape missed the minimum");
    }
    return pass();
}

// 11: the edge-joint composition formula, both orientations, 200 random instances.
Outcome edge_joint_formula() {
    std::uint64_t state = 13;
    for (int trial = 0; trial < 200; ++trial) {
        const int gn = 2 + static_cast<int>(sl::detail::splitmix64_below(state, 7));
        const int hn = 2 + static_cast<int>(sl::detail::splitmix64_below(state, 7));
        const std::uint64_t gall = static_cast<std::uint64_t>(gn) * (gn - 1) / 2;
        const std::uint64_t hall = static_cast<std::uint64_t>(hn) * (hn - 1) / 2;
        const sl::Graph g =
            sl::make_random(gn, static_cast<int>(sl::detail::splitmix64_below(state, gall + 1)),
                            sl::detail::splitmix64(state));
        const sl::Graph h =
            sl::make_random(hn, static_cast<int>(sl::detail::splitmix64_below(state, hall + 1)),
                            sl::detail::splitmix64(state));
        const int v = 1 + static_cast<int>(sl::detail::splitmix64_below(state, static_cast<std::uint64_t>(gn)));
        const int u = 1 + static_cast<int>(sl::detail::splitmix64_below(state, static_cast<std::uint64_t>(hn)));
        const sl::IndexPattern pg = sl::random_pattern(gn, sl::detail::splitmix64(state));
        const sl::IndexPattern ph = sl::random_pattern(hn, sl::detail::splitmix64(state));
        const long long forward = sl::edge_joint_mw_formula(g, pg, h, ph, v, u);
        if (forward != mw(sl::edge_joint(g, h, v, u), sl::combine_patterns(pg, ph)))
            return fail("forward orientation broke at trial " + std::to_string(trial));
        const long long mirrored = sl::edge_joint_mw_formula_mirrored(g, pg, h, ph, v, u);
        if (mirrored != mw(sl::edge_joint(h, g, u, v), sl::combine_patterns(ph, pg)))
            return fail("mirrored orientation broke at trial " + std::to_string(trial));
    }
    return pass();
}

// 12: wheel and ladder minimum closed forms across the stated ranges. The ladder form is wrong
// at n = 5; this criterion is expected to fail with exactly that discrepancy.
Outcome wheels_and_ladders() {
    Outcome out;
    out.pass = true;
    const auto record = [&](const std::string& name, long long formula, long long oracle,
                            bool expected_mismatch) {
        if (formula == oracle && !expected_mismatch) return;
        out.pass = false;
        out.documented_failure =
            expected_mismatch && formula != oracle;  // any other shape is a real regression
        out.notes.push_back(name + ": formula " + std::to_string(formula) + ", exhaustive " +
                            std::to_string(oracle) +
                            (expected_mismatch ? " (documented discrepancy, see data/expected_mismatches.json)"
                                               : ""));
    };
    for (int rim = 4; rim <= 6; ++rim) {
        const long long oracle = sl::brute_force_extrema(sl::make_wheel(rim)).min_value;
        record("wheel rim " + std::to_string(rim), sl::wheel_min_formula(rim), oracle, false);
        if (!out.pass && !out.documented_failure) return out;
    }
    for (int n = 3; n <= 5; ++n) {
        const long long oracle = sl::brute_force_extrema(sl::make_ladder(n)).min_value;
        record("ladder n=" + std::to_string(n), sl::ladder_min_formula(n), oracle, n == 5);
        if (!out.pass && !out.documented_failure) return out;
    }
    // The documented failure must carry the exact shipped numbers.
    if (out.documented_failure) {
        const bool exact = out.notes.size() == 1 &&
                           out.notes[0].find("ladder n=5: formula 23, exhaustive 19") == 0;
        if (!exact) out.documented_failure = false;
    }
    return out;
}

// 13: brute-force wall-clock budget at orders 10 and 11, cross-checked against the bounded solver.
Outcome performance() {
    const unsigned jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    const auto timed = [&](int n, double budget_seconds) -> std::string {
        const sl::Graph g = sl::make_path(n);
        const auto start = std::chrono::steady_clock::now();
        const sl::ExtremaResult r = sl::brute_force_extrema(g, {.jobs = jobs});
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.min_value != n - 1)
            return "path " + std::to_string(n) + " min " + std::to_string(r.min_value);
        if (r.min_value != sl::branch_and_bound_min(g).value)
            return "path " + std::to_string(n) + ": solvers disagree";
        if (mw(g, r.max_pattern) != r.max_value)
            return "path " + std::to_string(n) + ": max witness does not evaluate to the max";
        if (seconds >= budget_seconds)
            return "path " + std::to_string(n) + " took " + std::to_string(seconds) + "s (budget " +
                   std::to_string(budget_seconds) + "s, jobs " + std::to_string(jobs) + ")";
        return "";
    };
    if (std::string err = timed(10, 10.0); !err.empty()) return fail(std::move(err));
    if (std::string err = timed(11, 120.0); !err.empty()) return fail(std::move(err));
    return pass();
}

// 14: byte-identical CLI output across worker counts and repeated runs.
Outcome determinism() {
    const testsupport::TempFile p4("4 3\n1 2\n2 3\n3 4\n");
    const testsupport::TempFile c5("5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
    const std::vector<std::string> commands = {
        "gen path 7",
        "gen wheel 5 --format json",
        "gen random 8 11 --seed 5",
        "sprout " + p4.path() + " --pattern 2,4,1,3",
        "sprout " + c5.path() + " --pattern 1,3,5,2,4 --emit json",
        "sprout " + p4.path() + " --pattern 1,2,3,4 --t 1",
        "timeline " + c5.path() + " --pattern 1,3,5,2,4",
        "timeline " + p4.path() + " --pattern 2,4,1,3 --format csv",
        "solve " + c5.path(),
        "solve " + c5.path() + " --format json",
        "solve " + p4.path() + " --method bnb --objective min",
        "verify path --from 2 --to 7",
        "verify star --from 1 --to 5 --format csv",
        "verify complete_bipartite --from 2 --to 3 --format json",
        "hunt pattern-conjecture --graph " + p4.path() + " --format json",
        "hunt pattern-conjecture --all-connected 4 --format json",
        "hunt zane --q 3 --format json",
        "hunt hamilton-t1 --n 4 --format json",
    };
    for (const std::string& cmd : commands) {
        const testsupport::CliResult one = testsupport::run_cli(cmd + " --jobs 1");
        const testsupport::CliResult eight = testsupport::run_cli(cmd + " --jobs 8");
        const testsupport::CliResult again = testsupport::run_cli(cmd + " --jobs 8");
        if (one.output != eight.output)
            return fail("workers changed bytes of: " + cmd);
        if (eight.output != again.output)
            return fail("repeat run changed bytes of: " + cmd);
        if (one.exit_code != eight.exit_code)
            return fail("workers changed exit code of: " + cmd);
    }
    return pass();
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    bool expect_pass;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "star tables reproduce every center-index row", star_tables, true},
        {2, "complete graphs are pattern-independent at the double-sum value", complete_constancy, true},
        {3, "exhaustive path and cycle minima", exhaustive_minima, true},
        {4, "verifier flags exactly the documented wrong closed forms", documented_mismatches, true},
        {5, "zigzag constructions attain the exhaustive maxima", mmaw_constructions, true},
        {6, "complement sum identity and witness duality", complement_identity, true},
        {7, "sink/source structure, reversal, and padding invariants", structural_invariants, true},
        {8, "leaf-stripping patterns give a unique sink or source on trees", leaf_lob, true},
        {9, "hamilton path iff level-1 spanning pattern, orders 1..6", hamilton_biconditional, true},
        {10, "q-edge minimum equals q and belongs to path shapes, q 1..6", zane_sweep, true},
        {11, "edge-joint composition formula, both orientations", edge_joint_formula, true},
        {12, "wheel and ladder minimum closed forms across the stated ranges", wheels_and_ladders, false},
        {13, "brute-force wall-clock budget at orders 10 and 11", performance, true},
        {14, "byte-identical CLI output across worker counts", determinism, true},
    };

    int passed = 0, failed = 0, documented = 0;
    bool expected_state = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = fail(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %02d %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", c.id, c.name, seconds);
        for (const std::string& note : out.notes) std::printf("       %s\n", note.c_str());
        out.pass ? ++passed : ++failed;
        if (!out.pass && out.documented_failure) ++documented;
        const bool as_expected = c.expect_pass ? out.pass : (!out.pass && out.documented_failure);
        if (!as_expected) expected_state = false;
    }
    std::printf("acceptance: %d passed, %d failed (%d documented) -> %s\n", passed, failed,
                documented, expected_state ? "expected state" : "UNEXPECTED STATE");
    return expected_state ? 0 : 1;
}
