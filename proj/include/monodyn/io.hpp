#ifndef MONODYN_IO_HPP
#define MONODYN_IO_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "monodyn/bounds.hpp"
#include "monodyn/constructions.hpp"
#include "monodyn/engine.hpp"
#include "monodyn/graph.hpp"
#include "monodyn/solver.hpp"
#include "monodyn/thresholds.hpp"

namespace monodyn {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Edge-list text format: first line "n m", then m lines "u v", 0-based ids.
// ---------------------------------------------------------------------------

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) fail(errc::parse_error, "line 1: missing header \"n m\"");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0)
        fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected \"n m\"");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line())
            fail(errc::parse_error,
                 "line " + std::to_string(lineno + 1) + ": expected " + std::to_string(m) +
                     " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v))
            fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected \"u v\"");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const Error& e) {
        fail(errc::parse_error, std::string("invalid edge list: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// JSON forms; every artifact carries a top-level "format" field.
// ---------------------------------------------------------------------------

inline json to_json(const Graph& g) {
    json j;
    j["format"] = "graph/1";
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) {
        const GridLabels& lb = g.labels();
        json coords = json::array();
        for (const auto& c : lb.coord_of) coords.push_back({c.row, c.col});
        j["grid"] = {{"rows", lb.rows}, {"cols", lb.cols}, {"coords", std::move(coords)}};
    }
    return j;
}

inline Graph graph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
        std::optional<GridLabels> labels;
        if (j.contains("grid")) {
            GridLabels lb;
            lb.rows = j["grid"].at("rows").get<int>();
            lb.cols = j["grid"].at("cols").get<int>();
            for (const auto& c : j["grid"].at("coords"))
                lb.coord_of.push_back(GridCoord{c.at(0).get<int>(), c.at(1).get<int>()});
            labels = std::move(lb);
        }
        return Graph::from_edges(n, edges, std::move(labels));
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("graph JSON: ") + e.what());
    }
}

inline json to_json(const ThresholdAssignment& tau) {
    json j;
    j["format"] = "thresholds/1";
    if (tau.is_constant())
        j["constant"] = tau.values().front();
    else
        j["values"] = tau.values();
    return j;
}

/// Structural parse: accepts {"constant": t} or {"values": [...]}. Validity
/// against a graph's degrees is a separate concern (ThresholdAssignment::valid_for).
inline ThresholdAssignment thresholds_from_json(const json& j, int vertex_count) {
    try {
        if (j.contains("constant"))
            return ThresholdAssignment::uniform(vertex_count, j["constant"].get<int>());
        if (j.contains("values")) {
            auto values = j["values"].get<std::vector<int>>();
            if (static_cast<int>(values.size()) != vertex_count)
                fail(errc::parse_error, "thresholds JSON: expected " +
                                            std::to_string(vertex_count) + " values, got " +
                                            std::to_string(values.size()));
            return ThresholdAssignment::from_values_unchecked(std::move(values));
        }
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("thresholds JSON: ") + e.what());
    }
    fail(errc::parse_error, "thresholds JSON: expected key \"constant\" or \"values\"");
}

inline json to_json(const VertexSet& s) {
    json j;
    j["format"] = "vertex-set/1";
    j["members"] = s.ids();
    return j;
}

inline VertexSet vertex_set_from_json(const json& j, const Graph& g) {
    try {
        return VertexSet::from_ids(g, j.at("members").get<std::vector<Vertex>>());
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("vertex-set JSON: ") + e.what());
    }
}

inline json to_json(const ActivationTrace& trace) {
    json layers = json::array();
    for (const auto& layer : trace.layers) layers.push_back(layer.ids());
    json j;
    j["format"] = "trace/1";
    j["layers"] = std::move(layers);
    j["complete"] = trace.complete;
    return j;
}

inline ActivationTrace trace_from_json(const json& j) {
    try {
        ActivationTrace t;
        for (const auto& layer : j.at("layers"))
            t.layers.push_back(
                VertexSet::from_sorted_unchecked(layer.get<std::vector<Vertex>>()));
        std::vector<Vertex> all;
        for (const auto& layer : t.layers)
            all.insert(all.end(), layer.ids().begin(), layer.ids().end());
        std::sort(all.begin(), all.end());
        t.activated = VertexSet::from_sorted_unchecked(std::move(all));
        t.complete = j.at("complete").get<bool>();
        return t;
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("trace JSON: ") + e.what());
    }
}

inline json to_json(const Rational& r) { return json{{"num", r.num}, {"den", r.den}}; }

inline Rational rational_from_json(const json& j) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

inline json to_json(const SolveResult& r) {
    json j;
    j["format"] = "solve/1";
    j["status"] = (r.status == SolveStatus::solved) ? "solved" : "inconclusive";
    if (r.status == SolveStatus::solved) {
        j["optimum"] = r.optimum;
        j["witness"] = r.witness.ids();
    }
    j["explored"] = r.explored;
    j["elapsed_ms"] = r.elapsed.count();
    j["lower_bound"] = r.lower_bound;
    if (r.upper_bound) j["upper_bound"] = *r.upper_bound;
    return j;
}

inline SolveResult solve_result_from_json(const json& j) {
    try {
        SolveResult r;
        r.status = (j.at("status").get<std::string>() == "solved") ? SolveStatus::solved
                                                                   : SolveStatus::inconclusive;
        if (j.contains("optimum")) r.optimum = j["optimum"].get<int>();
        if (j.contains("witness"))
            r.witness = VertexSet::from_sorted_unchecked(j["witness"].get<std::vector<Vertex>>());
        r.explored = j.at("explored").get<std::uint64_t>();
        r.elapsed = std::chrono::duration<double, std::milli>(j.at("elapsed_ms").get<double>());
        r.lower_bound = j.at("lower_bound").get<int>();
        if (j.contains("upper_bound")) r.upper_bound = j["upper_bound"].get<int>();
        return r;
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("solve JSON: ") + e.what());
    }
}

inline json to_json(const BoundReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    json j;
    j["format"] = "bound/1";
    j["name"] = r.name;
    j["direction"] = to_string(r.direction);
    j["parameters"] = std::move(params);
    j["applicable"] = r.applicable;
    if (!r.applicable) {
        j["reason"] = r.reason;
        return j;
    }
    j["exact"] = to_json(r.exact);
    j["certificate"] = r.certificate;
    if (!r.hypotheses.empty()) j["hypotheses"] = r.hypotheses;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline BoundReport bound_report_from_json(const json& j) {
    try {
        BoundReport r;
        r.name = j.at("name").get<std::string>();
        const std::string dir = j.at("direction").get<std::string>();
        r.direction = dir == "lower"   ? BoundDirection::lower
                      : dir == "upper" ? BoundDirection::upper
                                       : BoundDirection::exact;
        for (const auto& [k, v] : j.at("parameters").items())
            r.parameters.emplace_back(k, v.get<std::int64_t>());
        r.applicable = j.at("applicable").get<bool>();
        if (!r.applicable) {
            r.reason = j.value("reason", "");
            return r;
        }
        r.exact = rational_from_json(j.at("exact"));
        r.certificate = j.at("certificate").get<std::int64_t>();
        if (j.contains("hypotheses")) r.hypotheses = j["hypotheses"].get<std::vector<std::string>>();
        r.note = j.value("note", "");
        return r;
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("bound JSON: ") + e.what());
    }
}

inline json to_json(const Construction& c) {
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    json j;
    j["format"] = "construction/1";
    j["family"] = c.theorem_tag;
    j["kind"] = to_string(c.kind);
    j["parameters"] = std::move(params);
    j["claimed_size"] = c.claimed_size;
    j["threshold"] = to_json(c.threshold);
    j["graph"] = to_json(c.graph);
    j["set"] = to_json(c.set);
    return j;
}

inline Construction construction_from_json(const json& j) {
    try {
        Construction c;
        c.theorem_tag = j.at("family").get<std::string>();
        c.kind = j.at("kind").get<std::string>() == "monopoly" ? SetKind::monopoly
                                                               : SetKind::dynamo;
        for (const auto& [k, v] : j.at("parameters").items())
            c.params.emplace_back(k, v.get<std::int64_t>());
        c.claimed_size = j.at("claimed_size").get<std::int64_t>();
        c.graph = graph_from_json(j.at("graph"));
        c.threshold = thresholds_from_json(j.at("threshold"), c.graph.vertex_count());
        c.set = vertex_set_from_json(j.at("set"), c.graph);
        return c;
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("construction JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// ASCII grid rendering in the layout of the paper's figures
// ---------------------------------------------------------------------------

/// rows x cols character grid, '*' for set members, '.' otherwise.
inline std::string render_grid(const Graph& g, const VertexSet& s) {
    const GridLabels& lb = g.labels();
    std::string out;
    out.reserve(static_cast<std::size_t>(lb.rows) * (static_cast<std::size_t>(lb.cols) + 1));
    for (int r = 1; r <= lb.rows; ++r) {
        for (int c = 1; c <= lb.cols; ++c)
            out += s.contains(vertex_at(g, GridCoord{r, c})) ? '*' : '.';
        out += '\n';
    }
    return out;
}

/// One cumulative snapshot per round.
inline std::string render_trace_grids(const Graph& g, const ActivationTrace& trace) {
    std::ostringstream out;
    std::vector<Vertex> acc;
    for (std::size_t i = 0; i < trace.layers.size(); ++i) {
        acc.insert(acc.end(), trace.layers[i].ids().begin(), trace.layers[i].ids().end());
        std::sort(acc.begin(), acc.end());
        out << "round " << i << " (" << acc.size() << " active)\n"
            << render_grid(g, VertexSet::from_sorted_unchecked(acc));
    }
    return out.str();
}

} // namespace monodyn

#endif
