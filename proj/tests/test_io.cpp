#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "monodyn/checks.hpp"
#include "monodyn/io.hpp"

using namespace monodyn;

TEST_CASE("edge list round trip") {
    const Graph g = cartesian_product(cycle(3), complete(3));
    const Graph back = graph_from_edge_list(to_edge_list(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(back.neighbors(v) == g.neighbors(v));
}

TEST_CASE("edge list parse errors carry line numbers") {
    CHECK_THROWS_MATCHES(graph_from_edge_list(""), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("line 1")));
    CHECK_THROWS_MATCHES(graph_from_edge_list("3 2\n0 1\n"), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("line 3")));
    CHECK_THROWS_MATCHES(graph_from_edge_list("3 1\n0 x\n"), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("line 2")));
    CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 5\n"), Error); // bad edge
}

TEST_CASE("JSON round trips reproduce equal values") {
    std::mt19937_64 rng(41);
    const Graph plain = checks::random_connected_graph(rng, 8, 5);
    CHECK(graph_from_json(to_json(plain)) == plain);

    const Graph labeled = cartesian_product(cycle(4), complete(3));
    CHECK(graph_from_json(to_json(labeled)) == labeled);

    const auto tau_const = constant_threshold(labeled, 2);
    CHECK(thresholds_from_json(to_json(tau_const), labeled.vertex_count()) == tau_const);
    const auto tau_mixed = checks::random_thresholds(rng, plain, 1);
    CHECK(thresholds_from_json(to_json(tau_mixed), plain.vertex_count()) == tau_mixed);

    const VertexSet s = checks::random_subset(rng, labeled, 5);
    CHECK(vertex_set_from_json(to_json(s), labeled) == s);

    const ActivationTrace trace = activate(labeled, tau_const, s);
    CHECK(trace_from_json(to_json(trace)) == trace);

    // result artifacts: emit -> parse -> emit must be stable
    const SolveResult solved = min_dynamo(labeled, tau_const);
    CHECK(to_json(solve_result_from_json(to_json(solved))) == to_json(solved));

    const BoundReport bound = biregular_line_lb(3, 3, 3, 3, 4);
    CHECK(to_json(bound_report_from_json(to_json(bound))) == to_json(bound));
    const BoundReport na = small_m_exact(3, 9, 5); // not applicable
    CHECK(to_json(bound_report_from_json(to_json(na))) == to_json(na));

    const Construction con = dyn_complete_complete(3, 4, 3);
    CHECK(to_json(construction_from_json(to_json(con))) == to_json(con));
}

TEST_CASE("grid rendering") {
    const Graph g = cartesian_product(cycle(3), complete(4));
    CHECK(render_grid(g, VertexSet()) == "....\n....\n....\n");
    std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    CHECK(render_grid(g, VertexSet::from_ids(g, all)) == "****\n****\n****\n");
    CHECK_THROWS_AS(render_grid(cycle(4), VertexSet()), Error); // unlabeled

    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 10; ++rep) {
        const VertexSet s = checks::random_subset(rng, g, static_cast<int>(rng() % 13));
        const std::string grid = render_grid(g, s);
        CHECK(std::count(grid.begin(), grid.end(), '*') == s.size());
    }
}

TEST_CASE("figure layouts render exactly") {
    const Construction fig2up = dyn_cycle_complete_t(8, 10, 5);
    CHECK(render_grid(fig2up.graph, fig2up.set) == "***.......\n"
                                                   ".......***\n"
                                                   "***.......\n"
                                                   ".......***\n"
                                                   "***.......\n"
                                                   ".......***\n"
                                                   "***.......\n"
                                                   ".......***\n");

    const Construction fig1up = mon_cycle_complete(7, 9, 6);
    CHECK(render_grid(fig1up.graph, fig1up.set) == "*****....\n"
                                                   ".....****\n"
                                                   "*****....\n"
                                                   ".....****\n"
                                                   "*****....\n"
                                                   ".....****\n"
                                                   "*****....\n");
}

TEST_CASE("trace snapshots accumulate") {
    const Graph g = cartesian_product(complete(3), complete(3));
    const VertexSet seed = VertexSet::from_ids(
        g, {vertex_at(g, {1, 1}), vertex_at(g, {2, 2}), vertex_at(g, {3, 3})});
    const ActivationTrace t = activate(g, constant_threshold(g, 2), seed);
    const std::string s = render_trace_grids(g, t);
    CHECK(s.find("round 0 (3 active)") != std::string::npos);
    CHECK(s.find("round 1 (9 active)") != std::string::npos);
}
