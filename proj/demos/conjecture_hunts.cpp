// The three hunting harnesses on small inputs: what each one sweeps and what a violation
// or witness looks like.
//
//   cmake --build build --target demo_conjecture_hunts && ./build/demo_conjecture_hunts

#include <cstdio>

#include "sproutlab/sproutlab.hpp"

namespace sl = sproutlab;

int main() {
    // Does timeline containment force the weight order? On P4 it does not: one pattern pair
    // has a strictly smaller timeline but a strictly larger mw.
    const sl::PatternConjectureReport p4 = sl::hunt_pattern_conjecture(sl::make_path(4));
    std::printf("P4: patterns %llu, timeline groups %llu, violations %zu\n", p4.patterns_checked,
                p4.timeline_groups, p4.violations.size());
    for (const sl::CounterexampleRecord& v : p4.violations)
        std::printf("  %s (mw %lld) inside %s (mw %lld)\n", sl::format_pattern(v.pattern_a).c_str(),
                    v.mw_a, sl::format_pattern(v.pattern_b).c_str(), v.mw_b);

    // The same check across every connected graph of orders 2..4.
    const sl::PatternConjectureSweep sweep = sl::hunt_pattern_conjecture_sweep(4);
    std::printf("orders 2..4: graphs %llu, violating %llu, equal-timeline witnesses %zu\n",
                sweep.graphs_checked, sweep.graphs_violating, sweep.witness_reports.size());

    // Among all connected graphs with q edges, which attain the global minimum mw? Only the
    // path shapes do, and the minimum is q itself.
    for (int q = 1; q <= 4; ++q) {
        const sl::ZaneReport z = sl::hunt_zane(q);
        std::printf("q=%d: graphs %llu, global min %lld, attained by %llu (all path-shaped: %s)\n",
                    q, z.connected_count, z.global_min, z.attaining_count,
                    z.non_path_attainers.empty() && z.path_non_attainers.empty() ? "yes" : "NO");
    }

    // A level-1 snapshot that is a spanning directed path exists iff the base graph has a
    // hamilton path; checked over every connected graph of each order.
    for (int n = 1; n <= 5; ++n) {
        const sl::HamiltonReport h = sl::hunt_hamilton_t1(n);
        std::printf("order %d: connected graphs %llu, with a hamilton path %llu, violations %zu\n",
                    n, h.connected_count, h.with_hamilton_path, h.violations.size());
    }
    return 0;
}
