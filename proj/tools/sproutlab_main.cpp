#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sproutlab/sproutlab.hpp"

#ifndef SPROUTLAB_DATA_DIR
#define SPROUTLAB_DATA_DIR "data"
#endif

namespace {

namespace sl = sproutlab;
using sl::ordered_json;

struct Common {
    std::string out;
    std::string format;
    int cap = -1;  // -1: fall back to SPROUTLAB_CAP, then the per-command default
    bool force_large = false;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, Common& c, const char* default_format,
                const std::vector<std::string>& formats, const char* format_names = "--format") {
    c.format = default_format;
    cmd->add_option(format_names, c.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "write to this file instead of stdout");
    cmd->add_option("--cap", c.cap, "largest order accepted for exhaustive work");
    cmd->add_flag("--force-large", c.force_large, "run past the caps");
    cmd->add_option("--jobs", c.jobs, "worker threads; never changes the output");
}

int env_cap() {
    const char* raw = std::getenv("SPROUTLAB_CAP");
    if (!raw || !*raw) return -1;
    const std::string text(raw);
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw sl::format_error("SPROUTLAB_CAP must be an integer, got '" + text + "'");
    }
}

sl::SolveOptions make_options(const Common& c, int default_cap) {
    sl::SolveOptions o;
    const int env = env_cap();
    o.cap = c.cap >= 0 ? c.cap : (env >= 0 ? env : default_cap);
    o.force_large = c.force_large;
    o.jobs = c.jobs;
    return o;
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw sl::format_error("cannot open output file: " + c.out);
    f << text;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string brace_set(const std::vector<int>& levels) { return "{" + join(levels) + "}"; }

// --- gen ---

struct GenArgs {
    Common common;
    std::string family;
    std::vector<int> params;
    std::uint64_t seed = 1;
};

void run_gen(const GenArgs& a) {
    sl::Graph g = [&] {
        if (a.family == "random") {
            if (a.params.size() != 2)
                throw sl::family_parameter_error("family 'random' expects 2 parameter(s)");
            return sl::make_random(a.params[0], a.params[1], a.seed);
        }
        return sl::make_family(a.family, a.params);
    }();
    if (a.common.format == "json")
        emit(a.common, dump_json(sl::graph_to_json(g)));
    else
        emit(a.common, sl::to_edge_list(g));
}

// --- sprout / export ---

struct SproutArgs {
    Common common;
    std::string graph_path;
    std::string pattern;
    int t = 0;
    bool has_t = false;
};

void run_sprout(const SproutArgs& a) {
    const sl::Graph g = sl::load_graph(a.graph_path);
    const sl::SproutGraph s = sl::sprout(g, sl::parse_pattern(a.pattern));
    const std::optional<int> t = a.has_t ? std::optional<int>(a.t) : std::nullopt;
    if (t) (void)sl::snapshot(s, *t);  // validates t >= 0
    if (a.common.format == "json")
        emit(a.common, dump_json(sl::sprout_to_json(s, t)));
    else
        emit(a.common, sl::to_dot(s, t));
}

// --- timeline ---

void run_timeline(const SproutArgs& a) {
    const sl::Graph g = sl::load_graph(a.graph_path);
    const sl::SproutGraph s = sl::sprout(g, sl::parse_pattern(a.pattern));
    const ordered_json j = sl::timeline_to_json(s);
    const std::vector<int> levels = j["levels"].get<std::vector<int>>();
    const std::vector<long long> counts = j["counts"].get<std::vector<long long>>();
    if (a.common.format == "json") {
        emit(a.common, dump_json(j));
    } else if (a.common.format == "csv") {
        std::string out = "level,count\n";
        for (std::size_t i = 0; i < levels.size(); ++i)
            out += std::to_string(levels[i]) + "," + std::to_string(counts[i]) + "\n";
        emit(a.common, out);
    } else {
        emit(a.common, "levels " + join(levels) + " with counts " + join(counts) + "\n");
    }
}

// --- solve ---

struct SolveArgs {
    Common common;
    std::string graph_path;
    std::string objective = "both";
    std::string method = "brute";
};

void run_solve(const SolveArgs& a) {
    const sl::Graph g = sl::load_graph(a.graph_path);
    if (a.method == "bnb") {
        if (a.objective != "min")
            throw sl::format_error("method bnb solves only --objective min");
        const sl::BoundedSearchResult r =
            sl::branch_and_bound_min(g, make_options(a.common, sl::kBranchBoundCapDefault));
        if (a.common.format == "json") {
            emit(a.common, dump_json(ordered_json{{"method", "bnb"},
                                                  {"min", r.value},
                                                  {"min_pattern", sl::pattern_to_json(r.pattern)},
                                                  {"explored", r.explored}}));
        } else {
            emit(a.common, "min " + std::to_string(r.value) + " @ " + sl::format_pattern(r.pattern) +
                               "\nexplored " + std::to_string(r.explored) + "\n");
        }
        return;
    }
    const sl::ExtremaResult r =
        sl::brute_force_extrema(g, make_options(a.common, sl::kBruteForceCapDefault));
    if (a.common.format == "json") {
        ordered_json j{{"method", "brute"}};
        if (a.objective != "max") {
            j["min"] = r.min_value;
            j["min_pattern"] = sl::pattern_to_json(r.min_pattern);
        }
        if (a.objective != "min") {
            j["max"] = r.max_value;
            j["max_pattern"] = sl::pattern_to_json(r.max_pattern);
        }
        j["explored"] = r.explored;
        emit(a.common, dump_json(j));
        return;
    }
    std::string line;
    if (a.objective != "max")
        line += "min " + std::to_string(r.min_value) + " @ " + sl::format_pattern(r.min_pattern);
    if (a.objective == "both") line += ", ";
    if (a.objective != "min")
        line += "max " + std::to_string(r.max_value) + " @ " + sl::format_pattern(r.max_pattern);
    emit(a.common, line + "\nexplored " + std::to_string(r.explored) + "\n");
}

// --- verify ---

struct VerifyArgs {
    Common common;
    std::string family;
    int from = 0;
    int to = 0;
    std::string allowlist_path;
    bool allowlist_given = false;
};

std::string verify_text(const std::string& family, const std::vector<sl::FormulaReport>& reports,
                        std::size_t allowed, const std::vector<std::string>& unexpected,
                        std::size_t unchecked) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"family", "params", "quantity", "formula", "oracle", "verdict", "reference"});
    for (const sl::FormulaReport& r : reports)
        rows.push_back({r.family, join(r.params), r.quantity, std::to_string(r.formula_value),
                        r.oracle_value ? std::to_string(*r.oracle_value) : "-",
                        std::string(sl::verdict_name(r.verdict)), r.reference});
    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size()) out += std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out += "\n";
    }
    const std::size_t mismatches = allowed + unexpected.size();
    out += "mismatches " + std::to_string(mismatches) + " (allowed " + std::to_string(allowed) +
           ", unexpected " + std::to_string(unexpected.size()) + ")\n";
    for (const std::string& key : unexpected) out += "unexpected: " + key + "\n";
    if (unchecked) out += "unchecked " + std::to_string(unchecked) + " (past the oracle cap)\n";
    (void)family;
    return out;
}

int run_verify(const VerifyArgs& a) {
    const std::vector<sl::FormulaReport> reports = sl::verify_family(
        a.family, a.from, a.to, make_options(a.common, sl::kBruteForceCapDefault));

    sl::MismatchAllowlist allow;
    if (a.allowlist_given) {
        allow = sl::load_allowlist(a.allowlist_path);
    } else if (std::ifstream probe(a.allowlist_path); probe) {
        allow = sl::load_allowlist(a.allowlist_path);
    }

    std::vector<std::string> mismatch_keys, unexpected;
    std::size_t allowed = 0, unchecked = 0;
    for (const sl::FormulaReport& r : reports) {
        if (r.verdict == sl::Verdict::unchecked) ++unchecked;
        if (r.verdict != sl::Verdict::mismatch) continue;
        const std::string key = sl::mismatch_key(r);
        mismatch_keys.push_back(key);
        if (allow.keys.count(key))
            ++allowed;
        else
            unexpected.push_back(key);
    }

    if (a.common.format == "json") {
        ordered_json rs = ordered_json::array();
        for (const sl::FormulaReport& r : reports) rs.push_back(sl::formula_report_to_json(r));
        emit(a.common, dump_json(ordered_json{{"family", a.family},
                                              {"from", a.from},
                                              {"to", a.to},
                                              {"reports", std::move(rs)},
                                              {"mismatches", mismatch_keys},
                                              {"unexpected", unexpected}}));
    } else if (a.common.format == "csv") {
        std::string out = "family,params,quantity,formula,oracle,verdict\n";
        for (const sl::FormulaReport& r : reports)
            out += r.family + "," + join(r.params, ";") + "," + r.quantity + "," +
                   std::to_string(r.formula_value) + "," +
                   (r.oracle_value ? std::to_string(*r.oracle_value) : "") + "," +
                   std::string(sl::verdict_name(r.verdict)) + "\n";
        emit(a.common, out);
    } else {
        emit(a.common, verify_text(a.family, reports, allowed, unexpected, unchecked));
    }
    return unexpected.empty() ? 0 : 1;
}

// --- hunt ---

struct HuntPatternArgs {
    Common common;
    std::string graph_path;
    int all_connected = 0;
    bool sweep = false;
};

int run_hunt_pattern(const HuntPatternArgs& a) {
    if (a.sweep) {
        const sl::PatternConjectureSweep s = sl::hunt_pattern_conjecture_sweep(
            a.all_connected, make_options(a.common, sl::kBruteForceCapDefault));
        if (a.common.format == "json") {
            emit(a.common, sl::sweep_to_json_text(s));
        } else {
            emit(a.common,
                 "orders 2.." + std::to_string(s.max_order) + ": graphs " +
                     std::to_string(s.graphs_checked) + ", violating " +
                     std::to_string(s.graphs_violating) + ", violations " +
                     std::to_string(s.violations.size()) + ", equal-timeline witnesses " +
                     std::to_string(s.graphs_with_equal_timeline_witness) + "\n");
        }
        return s.violations.empty() ? 0 : 1;
    }
    const sl::Graph g = sl::load_graph(a.graph_path);
    const sl::PatternConjectureReport r =
        sl::hunt_pattern_conjecture(g, make_options(a.common, sl::kBruteForceCapDefault));
    if (a.common.format == "json") {
        emit(a.common, dump_json(sl::pattern_conjecture_report_to_json(r)));
    } else {
        std::string out = "graph n=" + std::to_string(g.order()) + " m=" +
                          std::to_string(g.edge_count()) + "\npatterns " +
                          std::to_string(r.patterns_checked) + ", timeline groups " +
                          std::to_string(r.timeline_groups) + ", violations " +
                          std::to_string(r.violations.size()) + "\n";
        for (const sl::CounterexampleRecord& v : r.violations)
            out += "violation: max " + std::to_string(v.mw_a) + " @ " +
                   sl::format_pattern(v.pattern_a) + " timeline " + brace_set(v.timeline_a.levels) +
                   " vs min " + std::to_string(v.mw_b) + " @ " + sl::format_pattern(v.pattern_b) +
                   " timeline " + brace_set(v.timeline_b.levels) + "\n";
        if (r.equal_timeline_distinct_mw) {
            const sl::EqualTimelineWitness& w = *r.equal_timeline_distinct_mw;
            out += "equal-timeline witness: " + std::to_string(w.mw_a) + " @ " +
                   sl::format_pattern(w.pattern_a) + " and " + std::to_string(w.mw_b) + " @ " +
                   sl::format_pattern(w.pattern_b) + " timeline " + brace_set(w.timeline.levels) +
                   "\n";
        }
        emit(a.common, out);
    }
    return r.violations.empty() ? 0 : 1;
}

struct HuntScalarArgs {
    Common common;
    int value = 0;
};

int run_hunt_zane(const HuntScalarArgs& a) {
    const sl::ZaneReport r = sl::hunt_zane(a.value, make_options(a.common, sl::kBruteForceCapDefault));
    if (a.common.format == "json") {
        emit(a.common, dump_json(sl::zane_report_to_json(r)));
    } else {
        emit(a.common, "q " + std::to_string(r.q) + ": graphs " + std::to_string(r.connected_count) +
                           ", global min " + std::to_string(r.global_min) + ", attained by " +
                           std::to_string(r.attaining_count) + " (path-shaped " +
                           std::to_string(r.path_shaped_count) + "), non-path attainers " +
                           std::to_string(r.non_path_attainers.size()) + ", path non-attainers " +
                           std::to_string(r.path_non_attainers.size()) + "\n");
    }
    const bool clean =
        r.non_path_attainers.empty() && r.path_non_attainers.empty() && r.global_min == r.q;
    return clean ? 0 : 1;
}

int run_hunt_hamilton(const HuntScalarArgs& a) {
    const sl::HamiltonReport r =
        sl::hunt_hamilton_t1(a.value, make_options(a.common, sl::kBruteForceCapDefault));
    if (a.common.format == "json") {
        emit(a.common, dump_json(sl::hamilton_report_to_json(r)));
    } else {
        emit(a.common, "order " + std::to_string(r.order) + ": graphs " +
                           std::to_string(r.connected_count) + ", with hamilton path " +
                           std::to_string(r.with_hamilton_path) + ", violations " +
                           std::to_string(r.violations.size()) + "\n");
    }
    return r.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sprout graph laboratory: generation, exact solvers, formula checks, hunts"};
    app.require_subcommand(1);
    int rc = 0;

    GenArgs gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a family graph");
    cmd_gen->add_option("family", gen.family, "path|cycle|complete|star|complete_bipartite|wheel|ladder|ladder_full|random")
        ->required();
    cmd_gen->add_option("params", gen.params, "family parameters");
    cmd_gen->add_option("--seed", gen.seed, "seed for family 'random'")->capture_default_str();
    add_common(cmd_gen, gen.common, "text", {"text", "json"});
    cmd_gen->callback([&] { run_gen(gen); });

    SproutArgs spr;
    CLI::App* cmd_sprout = app.add_subcommand("sprout", "orient a graph under a pattern");
    cmd_sprout->add_option("graph", spr.graph_path, "edge-list or JSON graph file")->required();
    cmd_sprout->add_option("--pattern", spr.pattern, "comma-separated index assignment")->required();
    CLI::Option* sprout_t = cmd_sprout->add_option("--t", spr.t, "emit the snapshot at this level");
    add_common(cmd_sprout, spr.common, "dot", {"dot", "json"}, "--emit,--format");
    cmd_sprout->callback([&] {
        spr.has_t = sprout_t->count() > 0;
        run_sprout(spr);
    });

    SproutArgs exp;
    CLI::App* cmd_export = app.add_subcommand("export", "write a sprout rendering to a file");
    cmd_export->add_option("graph", exp.graph_path, "edge-list or JSON graph file")->required();
    cmd_export->add_option("--pattern", exp.pattern, "comma-separated index assignment")->required();
    CLI::Option* export_t = cmd_export->add_option("--t", exp.t, "emit the snapshot at this level");
    add_common(cmd_export, exp.common, "dot", {"dot", "json"});
    cmd_export->get_option("--out")->required();
    cmd_export->callback([&] {
        exp.has_t = export_t->count() > 0;
        run_sprout(exp);
    });

    SproutArgs tl;
    CLI::App* cmd_timeline = app.add_subcommand("timeline", "levels and per-level arc counts");
    cmd_timeline->add_option("graph", tl.graph_path, "edge-list or JSON graph file")->required();
    cmd_timeline->add_option("--pattern", tl.pattern, "comma-separated index assignment")->required();
    add_common(cmd_timeline, tl.common, "text", {"text", "json", "csv"});
    cmd_timeline->callback([&] { run_timeline(tl); });

    SolveArgs solve;
    CLI::App* cmd_solve = app.add_subcommand("solve", "exact minimum / maximum maturity weight");
    cmd_solve->add_option("graph", solve.graph_path, "edge-list or JSON graph file")->required();
    cmd_solve->add_option("--objective", solve.objective, "min|max|both")
        ->check(CLI::IsMember({"min", "max", "both"}))
        ->capture_default_str();
    cmd_solve->add_option("--method", solve.method, "brute|bnb")
        ->check(CLI::IsMember({"brute", "bnb"}))
        ->capture_default_str();
    add_common(cmd_solve, solve.common, "text", {"text", "json"});
    cmd_solve->callback([&] { run_solve(solve); });

    VerifyArgs verify;
    verify.allowlist_path = std::string(SPROUTLAB_DATA_DIR) + "/expected_mismatches.json";
    CLI::App* cmd_verify = app.add_subcommand("verify", "closed forms against the exhaustive oracle");
    cmd_verify->add_option("family", verify.family,
                           "path|cycle|complete|star|complete_bipartite|wheel|ladder")
        ->required();
    cmd_verify->add_option("--from", verify.from, "first parameter value")->required();
    cmd_verify->add_option("--to", verify.to, "last parameter value")->required();
    CLI::Option* allow_opt =
        cmd_verify->add_option("--allowlist", verify.allowlist_path, "expected-mismatch JSON file")
            ->capture_default_str();
    add_common(cmd_verify, verify.common, "text", {"text", "json", "csv"});
    cmd_verify->callback([&] {
        verify.allowlist_given = allow_opt->count() > 0;
        rc = run_verify(verify);
    });

    CLI::App* cmd_hunt = app.add_subcommand("hunt", "conjecture harnesses");
    cmd_hunt->require_subcommand(1);

    HuntPatternArgs hp;
    CLI::App* hunt_pattern = cmd_hunt->add_subcommand(
        "pattern-conjecture", "timeline containment versus weight order");
    CLI::Option* hp_graph = hunt_pattern->add_option("--graph", hp.graph_path, "single graph file");
    CLI::Option* hp_all =
        hunt_pattern->add_option("--all-connected", hp.all_connected, "sweep orders 2..N");
    hp_graph->excludes(hp_all);
    hp_all->excludes(hp_graph);
    add_common(hunt_pattern, hp.common, "text", {"text", "json"});
    hunt_pattern->callback([&] {
        if (hp_graph->count() == 0 && hp_all->count() == 0)
            throw sl::format_error("hunt pattern-conjecture needs --graph or --all-connected");
        hp.sweep = hp_all->count() > 0;
        rc = run_hunt_pattern(hp);
    });

    HuntScalarArgs hz;
    CLI::App* hunt_zane = cmd_hunt->add_subcommand("zane", "q-edge minimum attained only by paths");
    hunt_zane->add_option("--q", hz.value, "edge count")->required();
    add_common(hunt_zane, hz.common, "text", {"text", "json"});
    hunt_zane->callback([&] { rc = run_hunt_zane(hz); });

    HuntScalarArgs hh;
    CLI::App* hunt_hamilton =
        cmd_hunt->add_subcommand("hamilton-t1", "level-1 spanning path versus hamilton path");
    hunt_hamilton->add_option("--n", hh.value, "graph order")->required();
    add_common(hunt_hamilton, hh.common, "text", {"text", "json"});
    hunt_hamilton->callback([&] { rc = run_hunt_hamilton(hh); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
