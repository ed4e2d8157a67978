#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "monodyn/checks.hpp"
#include "monodyn/graph.hpp"

using namespace monodyn;

namespace {

// Full-scan check of the simplicity and symmetry invariants.
bool simple_and_symmetric(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
        for (Vertex w : nb) {
            if (w == v) return false;
            if (!g.has_edge(w, v)) return false;
        }
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Backtracking isomorphism search, feasible for ~10 vertices. Test-side
// oracle, independent of any library canonicalization.
bool isomorphic_exhaustive(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    std::vector<int> map(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || a.degree(v) != b.degree(w)) continue;
            bool fits = true;
            for (int u = 0; u < v && fits; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[static_cast<std::size_t>(u)], w))
                    fits = false;
            if (!fits) continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (place(v + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return place(0);
}

} // namespace

TEST_CASE("cycle generator") {
    const Graph c3 = cycle(3);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(isomorphic_exhaustive(c3, complete(3))); // C_3 = K_3

    const Graph c4 = cycle(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(is_bipartite(c4));

    const Graph c5 = cycle(5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.is_connected());
    CHECK_FALSE(is_bipartite(c5)); // odd girth

    CHECK_THROWS_AS(cycle(2), Error);
}

TEST_CASE("complete generator") {
    CHECK(complete(1).vertex_count() == 1);
    CHECK(complete(1).edge_count() == 0);
    CHECK(complete(2).edge_count() == 1);
    const Graph k4 = complete(4);
    CHECK(k4.edge_count() == 6);
    for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK_THROWS_AS(complete(0), Error);
}

TEST_CASE("star generator") {
    const Graph s1 = star(1);
    CHECK(s1.vertex_count() == 2);
    CHECK(s1.edge_count() == 1);
    const Graph s3 = star(3);
    CHECK(s3.degree(0) == 3); // vertex 0 is the center
    for (Vertex leaf = 1; leaf <= 3; ++leaf) CHECK(s3.degree(leaf) == 1);
    const Graph s5 = star(5);
    CHECK(s5.vertex_count() == 6);
    CHECK(s5.edge_count() == 5);
    CHECK_THROWS_AS(star(0), Error);
}

TEST_CASE("complete bipartite generator") {
    CHECK(isomorphic_exhaustive(complete_bipartite(1, 4), star(4)));
    CHECK(isomorphic_exhaustive(complete_bipartite(2, 2), cycle(4)));
    const Graph k33 = complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    for (Vertex v = 0; v < 6; ++v) CHECK(k33.degree(v) == 3);
    const Graph k25 = complete_bipartite(2, 5);
    for (Vertex v = 0; v < 2; ++v) CHECK(k25.degree(v) == 5);
    for (Vertex v = 2; v < 7; ++v) CHECK(k25.degree(v) == 2);
}

TEST_CASE("cartesian product structure") {
    CHECK(isomorphic_exhaustive(cartesian_product(complete(2), complete(2)), cycle(4)));

    const Graph p = cartesian_product(cycle(3), complete(3));
    CHECK(p.vertex_count() == 9);
    CHECK(p.edge_count() == 18);
    for (Vertex v = 0; v < 9; ++v) CHECK(p.degree(v) == 4);

    const Graph torus = cartesian_product(cycle(4), cycle(4));
    CHECK(torus.vertex_count() == 16);
    for (Vertex v = 0; v < 16; ++v) CHECK(torus.degree(v) == 4);
}

TEST_CASE("cartesian product laws on random factors") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = checks::random_connected_graph(rng, 3 + static_cast<int>(rng() % 5), 2);
        const Graph h = checks::random_connected_graph(rng, 3 + static_cast<int>(rng() % 5), 2);
        const Graph p = cartesian_product(g, h);
        REQUIRE(simple_and_symmetric(p));
        CHECK(p.edge_count() == static_cast<std::size_t>(g.vertex_count()) * h.edge_count() +
                                    static_cast<std::size_t>(h.vertex_count()) * g.edge_count());
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = 0; v < h.vertex_count(); ++v) {
                const Vertex id = vertex_at(p, GridCoord{u + 1, v + 1});
                CHECK(p.degree(id) == g.degree(u) + h.degree(v));
            }
    }
}

TEST_CASE("grid labels and the v_ij round trip") {
    const Graph p = cartesian_product(cycle(3), complete(3));
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) {
            const GridCoord rc{r, c};
            CHECK(coord_of(p, vertex_at(p, rc)) == rc);
        }

    // (1,1) on C3 [] K3 neighbors exactly (1,2), (1,3), (2,1), (3,1)
    const Vertex v11 = vertex_at(p, GridCoord{1, 1});
    std::vector<GridCoord> got;
    for (Vertex w : p.neighbors(v11)) got.push_back(coord_of(p, w));
    auto has = [&](int r, int c) {
        return std::any_of(got.begin(), got.end(),
                           [&](GridCoord x) { return x == GridCoord{r, c}; });
    };
    CHECK(got.size() == 4);
    CHECK(has(1, 2));
    CHECK(has(1, 3));
    CHECK(has(2, 1));
    CHECK(has(3, 1));

    CHECK_THROWS_AS(vertex_at(p, GridCoord{0, 1}), Error);
    CHECK_THROWS_AS(vertex_at(p, GridCoord{1, 4}), Error);
    CHECK_THROWS_AS(coord_of(cycle(4), 0), Error); // unlabeled
}

TEST_CASE("line graph") {
    CHECK(isomorphic_exhaustive(line_graph(cycle(5)), cycle(5)));
    CHECK(isomorphic_exhaustive(line_graph(star(3)), complete(3)));
    CHECK_THROWS_AS(line_graph(complete(1)), Error); // edgeless

    // |V(L(g))| = |E(g)|; for k-regular g, L(g) is (2k-2)-regular
    for (int k : {3, 4}) {
        const Graph g = complete(k + 1);
        const Graph lg = line_graph(g);
        CHECK(lg.vertex_count() == static_cast<int>(g.edge_count()));
        for (Vertex v = 0; v < lg.vertex_count(); ++v) CHECK(lg.degree(v) == 2 * k - 2);
    }
}

TEST_CASE("L(K_{n,n}) matches K_n [] K_n") {
    for (int n = 2; n <= 5; ++n) {
        const Graph lg = line_graph(complete_bipartite(n, n));
        const Graph pg = cartesian_product(complete(n), complete(n));
        CHECK(lg.vertex_count() == pg.vertex_count());
        CHECK(lg.edge_count() == pg.edge_count());
        CHECK(lg.degree_sequence() == pg.degree_sequence());
        if (n <= 3) CHECK(isomorphic_exhaustive(lg, pg));
    }
}

TEST_CASE("from_edges rejects malformed input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), Error);         // self-loop
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error); // duplicate
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);         // out of range
    CHECK_THROWS_AS(cartesian_product(Graph(), cycle(3)), Error);   // empty operand
}

TEST_CASE("generated graphs satisfy the base invariants") {
    CHECK(simple_and_symmetric(cycle(7)));
    CHECK(simple_and_symmetric(complete(6)));
    CHECK(simple_and_symmetric(star(5)));
    CHECK(simple_and_symmetric(complete_bipartite(3, 4)));
    CHECK(simple_and_symmetric(line_graph(complete_bipartite(3, 4))));
    CHECK(simple_and_symmetric(cartesian_product(star(3), cycle(5))));
}
