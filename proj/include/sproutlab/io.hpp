#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sproutlab/conjectures.hpp"
#include "sproutlab/formulas.hpp"
#include "sproutlab/graph.hpp"
#include "sproutlab/pattern.hpp"
#include "sproutlab/solvers.hpp"
#include "sproutlab/sprout.hpp"

namespace sproutlab {

using ordered_json = nlohmann::ordered_json;

// --- graph text format: line 1 "n m", then m lines "u v" ---

inline Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw format_error("edge list: expected header \"n m\"");
    if (m < 0) throw format_error("edge list: negative edge count");
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw format_error("edge list: expected " + std::to_string(m) + " edges, got " +
                               std::to_string(i));
        es.emplace_back(u, v);
    }
    return Graph(n, es);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

// --- graph JSON format: {"n": order, "edges": [[u, v], ...]} ---

inline ordered_json graph_to_json(const Graph& g) {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return ordered_json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw format_error("graph JSON: expected object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw format_error("graph JSON: \"n\" must be an integer");
    if (!j["edges"].is_array()) throw format_error("graph JSON: \"edges\" must be an array");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw format_error("graph JSON: each edge must be a 2-element integer array");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j["n"].get<int>(), es);
}

// Accepts either format; JSON iff the first non-space byte is '{'.
inline Graph parse_graph(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw format_error("empty graph input");
    if (text[pos] == '{') {
        ordered_json j = ordered_json::parse(text, nullptr, false);
        if (j.is_discarded()) throw format_error("graph JSON: parse failure");
        return graph_from_json(j);
    }
    std::istringstream in(text);
    return read_edge_list(in);
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

// --- pattern text format: comma-separated assignment, position d = index of vertex d ---

inline IndexPattern parse_pattern(const std::string& text) {
    std::vector<int> assignment;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw format_error("pattern: bad entry '" + token + "'");
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
        if (used != token.size()) throw format_error("pattern: bad entry '" + token + "'");
        assignment.push_back(value);
    }
    if (assignment.empty()) throw format_error("pattern: empty");
    return IndexPattern(std::move(assignment));
}

inline std::string format_pattern(const IndexPattern& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.assignment().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.assignment()[i]);
    }
    out += ']';
    return out;
}

inline ordered_json pattern_to_json(const IndexPattern& p) {
    return ordered_json(p.assignment());
}

// --- DOT export: node label "v<index>", vertex label as tooltip; arcs carry weight twice ---

inline void write_dot(std::ostream& out, const SproutGraph& s, std::optional<int> t = std::nullopt) {
    out << "digraph sprout {\n";
    if (t)
        out << "  label=\"t=" << *t << "\";\n";
    else
        out << "  label=\"mw=" << s.maturity_weight() << "\";\n";
    const IndexPattern& p = s.pattern();
    for (int v = 1; v <= s.base().order(); ++v)
        out << "  " << v << " [label=\"v" << p.index_of(v) << "\" tooltip=\"" << v << "\"];\n";
    for (const Arc& a : s.arcs()) {
        if (t && a.weight > *t) continue;
        out << "  " << a.tail << " -> " << a.head << " [weight=" << a.weight << " label=\""
            << a.weight << "\"];\n";
    }
    out << "}\n";
}

inline std::string to_dot(const SproutGraph& s, std::optional<int> t = std::nullopt) {
    std::ostringstream out;
    write_dot(out, s, t);
    return out.str();
}

// --- sprout / snapshot JSON ---

inline ordered_json arc_to_json(const Arc& a) {
    return ordered_json{{"tail", a.tail}, {"head", a.head}, {"weight", a.weight}};
}

inline ordered_json sprout_to_json(const SproutGraph& s, std::optional<int> t = std::nullopt) {
    ordered_json arcs = ordered_json::array();
    for (const Arc& a : s.arcs())
        if (!t || a.weight <= *t) arcs.push_back(arc_to_json(a));
    ordered_json j{{"n", s.base().order()},
                   {"pattern", pattern_to_json(s.pattern())},
                   {"arcs", std::move(arcs)}};
    if (t)
        j["t"] = *t;
    else {
        j["mw"] = s.maturity_weight();
        j["maturity"] = s.maturity();
    }
    return j;
}

inline ordered_json timeline_to_json(const SproutGraph& s) {
    const Timeline tl = timeline(s);
    std::vector<long long> counts(tl.levels.size(), 0);
    for (const Arc& a : s.arcs())
        for (std::size_t i = 0; i < tl.levels.size(); ++i)
            if (tl.levels[i] == a.weight) ++counts[i];
    return ordered_json{{"levels", tl.levels}, {"counts", counts}, {"maturity", tl.maturity}};
}

// --- report JSON ---

inline ordered_json formula_report_to_json(const FormulaReport& r) {
    ordered_json j{{"family", r.family}, {"params", r.params}, {"quantity", r.quantity},
                   {"formula", r.formula_value}};
    if (r.oracle_value)
        j["oracle"] = *r.oracle_value;
    else
        j["oracle"] = nullptr;
    j["verdict"] = std::string(verdict_name(r.verdict));
    j["reference"] = r.reference;
    return j;
}

inline ordered_json extrema_to_json(const ExtremaResult& r, std::string_view method) {
    return ordered_json{{"method", std::string(method)},
                        {"min", r.min_value},
                        {"min_pattern", pattern_to_json(r.min_pattern)},
                        {"max", r.max_value},
                        {"max_pattern", pattern_to_json(r.max_pattern)},
                        {"explored", r.explored}};
}

inline ordered_json counterexample_to_json(const CounterexampleRecord& r) {
    return ordered_json{{"graph", graph_to_json(r.graph)},
                        {"pattern_a", pattern_to_json(r.pattern_a)},
                        {"pattern_b", pattern_to_json(r.pattern_b)},
                        {"timeline_a", r.timeline_a.levels},
                        {"timeline_b", r.timeline_b.levels},
                        {"mw_a", r.mw_a},
                        {"mw_b", r.mw_b},
                        {"claim", r.claim}};
}

inline ordered_json equal_timeline_to_json(const Graph& g, const EqualTimelineWitness& w) {
    return ordered_json{{"graph", graph_to_json(g)},
                        {"pattern_a", pattern_to_json(w.pattern_a)},
                        {"pattern_b", pattern_to_json(w.pattern_b)},
                        {"timeline", w.timeline.levels},
                        {"mw_a", w.mw_a},
                        {"mw_b", w.mw_b}};
}

inline ordered_json pattern_conjecture_report_to_json(const PatternConjectureReport& r) {
    ordered_json violations = ordered_json::array();
    for (const CounterexampleRecord& v : r.violations) violations.push_back(counterexample_to_json(v));
    ordered_json j{{"graph", graph_to_json(r.graph)},
                   {"patterns_checked", r.patterns_checked},
                   {"timeline_groups", r.timeline_groups},
                   {"violations", std::move(violations)}};
    if (r.equal_timeline_distinct_mw)
        j["equal_timeline_distinct_mw"] = equal_timeline_to_json(r.graph, *r.equal_timeline_distinct_mw);
    else
        j["equal_timeline_distinct_mw"] = nullptr;
    return j;
}

inline ordered_json zane_report_to_json(const ZaneReport& r) {
    auto violation_array = [](const std::vector<ZaneViolation>& vs) {
        ordered_json a = ordered_json::array();
        for (const ZaneViolation& v : vs)
            a.push_back(ordered_json{{"graph", graph_to_json(v.graph)},
                                     {"min_mw", v.min_mw},
                                     {"path_shaped", v.path_shaped}});
        return a;
    };
    return ordered_json{{"q", r.q},
                        {"connected_count", r.connected_count},
                        {"global_min", r.global_min},
                        {"attaining_count", r.attaining_count},
                        {"path_shaped_count", r.path_shaped_count},
                        {"non_path_attainers", violation_array(r.non_path_attainers)},
                        {"path_non_attainers", violation_array(r.path_non_attainers)}};
}

inline ordered_json hamilton_report_to_json(const HamiltonReport& r) {
    ordered_json violations = ordered_json::array();
    for (const HamiltonViolation& v : r.violations)
        violations.push_back(ordered_json{{"graph", graph_to_json(v.graph)},
                                          {"has_hamilton_path", v.has_hamilton_path},
                                          {"has_t1_spanning_pattern", v.has_t1_spanning_pattern}});
    return ordered_json{{"order", r.order},
                        {"connected_count", r.connected_count},
                        {"with_hamilton_path", r.with_hamilton_path},
                        {"violations", std::move(violations)}};
}

// Sweep findings rendered with one compact record per line inside the arrays, so the committed
// artifact diffs line by line.
inline std::string sweep_to_json_text(const PatternConjectureSweep& s) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"max_order\": " << s.max_order << ",\n";
    out << "  \"graphs_checked\": " << s.graphs_checked << ",\n";
    out << "  \"graphs_violating\": " << s.graphs_violating << ",\n";
    out << "  \"graphs_with_equal_timeline_witness\": " << s.graphs_with_equal_timeline_witness
        << ",\n";
    out << "  \"violations\": [";
    for (std::size_t i = 0; i < s.violations.size(); ++i)
        out << (i ? "," : "") << "\n    " << counterexample_to_json(s.violations[i]).dump();
    out << (s.violations.empty() ? "" : "\n  ") << "],\n";
    out << "  \"equal_timeline_witnesses\": [";
    for (std::size_t i = 0; i < s.witness_reports.size(); ++i) {
        const PatternConjectureReport& r = s.witness_reports[i];
        out << (i ? "," : "") << "\n    "
            << equal_timeline_to_json(r.graph, *r.equal_timeline_distinct_mw).dump();
    }
    out << (s.witness_reports.empty() ? "" : "\n  ") << "]\n";
    out << "}\n";
    return out.str();
}

// --- expected-mismatch allowlist: {"allowed": [{"family", "params", "quantity", "note"}, ...]} ---

struct AllowlistEntry {
    std::string family;
    std::vector<int> params;
    std::string quantity;
    std::string note;
};

struct MismatchAllowlist {
    std::vector<AllowlistEntry> entries;
    std::set<std::string> keys;  // same shape as mismatch_key()
};

inline MismatchAllowlist parse_allowlist(const ordered_json& j) {
    if (!j.is_object() || !j.contains("allowed") || !j["allowed"].is_array())
        throw format_error("allowlist JSON: expected object with \"allowed\" array");
    MismatchAllowlist list;
    for (const auto& e : j["allowed"]) {
        AllowlistEntry entry;
        entry.family = e.at("family").get<std::string>();
        entry.params = e.at("params").get<std::vector<int>>();
        entry.quantity = e.at("quantity").get<std::string>();
        if (e.contains("note")) entry.note = e["note"].get<std::string>();
        std::string key = entry.family + "/";
        for (std::size_t i = 0; i < entry.params.size(); ++i) {
            if (i) key += ',';
            key += std::to_string(entry.params[i]);
        }
        key += "/" + entry.quantity;
        list.keys.insert(key);
        list.entries.push_back(std::move(entry));
    }
    return list;
}

inline MismatchAllowlist load_allowlist(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open allowlist file: " + path);
    ordered_json j = ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) throw format_error("allowlist JSON: parse failure");
    return parse_allowlist(j);
}

}  // namespace sproutlab
