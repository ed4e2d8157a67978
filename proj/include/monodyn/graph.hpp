#ifndef MONODYN_GRAPH_HPP
#define MONODYN_GRAPH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodyn/error.hpp"

namespace monodyn {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// 1-based grid position of a vertex in a product graph: row = first factor,
/// column = second factor.
struct GridCoord {
    int row = 0;
    int col = 0;

    friend bool operator==(const GridCoord& a, const GridCoord& b) {
        return a.row == b.row && a.col == b.col;
    }
    friend bool operator!=(const GridCoord& a, const GridCoord& b) { return !(a == b); }
};

/// Grid labeling of a product graph: a bijection vertex id <-> (row, col).
struct GridLabels {
    int rows = 0;
    int cols = 0;
    std::vector<GridCoord> coord_of;        // indexed by vertex id
    std::vector<Vertex> vertex_at_rowmajor; // indexed by (row-1)*cols + (col-1)

    friend bool operator==(const GridLabels& a, const GridLabels& b) {
        return a.rows == b.rows && a.cols == b.cols && a.coord_of == b.coord_of;
    }
};

/// Immutable simple undirected graph. Neighbor lists are sorted; adjacency is
/// symmetric and loop-free by construction. Safe to share across threads.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int vertex_count, const std::vector<Edge>& edges,
                            std::optional<GridLabels> labels = std::nullopt) {
        if (vertex_count < 0) fail(errc::invalid_parameter, "vertex count must be non-negative");
        std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(vertex_count));
        for (const auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                fail(errc::invalid_parameter,
                     "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v)
                fail(errc::invalid_parameter, "self-loop at vertex " + std::to_string(u));
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : adj) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                fail(errc::invalid_parameter, "duplicate edge");
        }
        return Graph(vertex_count, std::move(adj), std::move(labels));
    }

    int vertex_count() const { return n_; }

    std::size_t edge_count() const {
        std::size_t deg_sum = 0;
        for (const auto& nb : adj_) deg_sum += nb.size();
        return deg_sum / 2;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = degree(0);
        for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& nb = neighbors(u);
        check_vertex(v);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> ds(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) ds[static_cast<std::size_t>(v)] = degree(v);
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : adj_[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == n_;
    }

    bool has_labels() const { return labels_.has_value(); }

    const GridLabels& labels() const {
        if (!labels_) fail(errc::invalid_parameter, "graph carries no grid labels");
        return *labels_;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
    }

private:
    Graph(int n, std::vector<std::vector<Vertex>> adj, std::optional<GridLabels> labels)
        : n_(n), adj_(std::move(adj)), labels_(std::move(labels)) {
        if (labels_) validate_labels();
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            fail(errc::invalid_parameter, "vertex " + std::to_string(v) + " out of range");
    }

    void validate_labels() {
        const GridLabels& lb = *labels_;
        if (lb.rows < 1 || lb.cols < 1 || lb.rows * lb.cols != n_)
            fail(errc::invalid_parameter, "grid labels do not cover the vertex set");
        if (static_cast<int>(lb.coord_of.size()) != n_)
            fail(errc::invalid_parameter, "grid label list has wrong length");
        std::vector<Vertex> at(static_cast<std::size_t>(n_), -1);
        for (Vertex v = 0; v < n_; ++v) {
            const GridCoord c = lb.coord_of[static_cast<std::size_t>(v)];
            if (c.row < 1 || c.row > lb.rows || c.col < 1 || c.col > lb.cols)
                fail(errc::invalid_parameter, "grid coordinate out of range");
            auto& slot = at[static_cast<std::size_t>((c.row - 1) * lb.cols + (c.col - 1))];
            if (slot != -1) fail(errc::invalid_parameter, "grid labels are not a bijection");
            slot = v;
        }
        labels_->vertex_at_rowmajor = std::move(at);
    }

    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::optional<GridLabels> labels_;
};

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Graph cycle(int n) {
    if (n < 3) fail(errc::invalid_parameter, "cycle requires n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph complete(int n) {
    if (n < 1) fail(errc::invalid_parameter, "complete requires n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// Star K_{1,n}: vertex 0 is the center, 1..n are leaves.
inline Graph star(int n) {
    if (n < 1) fail(errc::invalid_parameter, "star requires n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int leaf = 1; leaf <= n; ++leaf) edges.emplace_back(0, leaf);
    return Graph::from_edges(n + 1, edges);
}

/// Complete bipartite K_{m,n}: part one is 0..m-1, part two is m..m+n-1.
inline Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) fail(errc::invalid_parameter, "complete_bipartite requires m, n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    return Graph::from_edges(m + n, edges);
}

/// Cartesian product g [] h. Vertex (u,v) gets id u*|V(h)|+v and grid label
/// (u+1, v+1): rows are indexed by the first factor, columns by the second.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng == 0 || nh == 0) fail(errc::invalid_parameter, "cartesian product of empty graph");
    const auto id = [nh](Vertex u, Vertex v) { return u * nh + v; };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(ng) * h.edge_count() +
                  static_cast<std::size_t>(nh) * g.edge_count());
    for (Vertex u = 0; u < ng; ++u)
        for (Vertex v = 0; v < nh; ++v) {
            for (Vertex w : h.neighbors(v))
                if (v < w) edges.emplace_back(id(u, v), id(u, w));
            for (Vertex w : g.neighbors(u))
                if (u < w) edges.emplace_back(id(u, v), id(w, v));
        }
    GridLabels labels;
    labels.rows = ng;
    labels.cols = nh;
    labels.coord_of.resize(static_cast<std::size_t>(ng) * static_cast<std::size_t>(nh));
    for (Vertex u = 0; u < ng; ++u)
        for (Vertex v = 0; v < nh; ++v)
            labels.coord_of[static_cast<std::size_t>(id(u, v))] = GridCoord{u + 1, v + 1};
    return Graph::from_edges(ng * nh, edges, std::move(labels));
}

/// Line graph L(g): one vertex per edge of g, ordered lexicographically by
/// endpoint pair; two vertices adjacent iff the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    const std::vector<Edge> ge = g.edges(); // already lexicographic
    if (ge.empty()) fail(errc::invalid_parameter, "line graph of an edgeless graph");
    const int m = static_cast<int>(ge.size());
    // Bucket edge indices by endpoint; edges in one bucket are pairwise adjacent.
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count()));
    for (int e = 0; e < m; ++e) {
        incident[static_cast<std::size_t>(ge[static_cast<std::size_t>(e)].first)].push_back(e);
        incident[static_cast<std::size_t>(ge[static_cast<std::size_t>(e)].second)].push_back(e);
    }
    std::vector<Edge> edges;
    for (const auto& bucket : incident)
        for (std::size_t i = 0; i < bucket.size(); ++i)
            for (std::size_t j = i + 1; j < bucket.size(); ++j)
                edges.emplace_back(bucket[i], bucket[j]);
    return Graph::from_edges(m, edges);
}

// ---------------------------------------------------------------------------
// Grid labeling access (the paper's v_ij notation)
// ---------------------------------------------------------------------------

inline Vertex vertex_at(const Graph& g, GridCoord coord) {
    const GridLabels& lb = g.labels();
    if (coord.row < 1 || coord.row > lb.rows || coord.col < 1 || coord.col > lb.cols)
        fail(errc::invalid_parameter, "grid coordinate (" + std::to_string(coord.row) + "," +
                                          std::to_string(coord.col) + ") out of range");
    return lb.vertex_at_rowmajor[static_cast<std::size_t>((coord.row - 1) * lb.cols +
                                                          (coord.col - 1))];
}

inline GridCoord coord_of(const Graph& g, Vertex v) {
    const GridLabels& lb = g.labels();
    if (v < 0 || v >= g.vertex_count())
        fail(errc::invalid_parameter, "vertex " + std::to_string(v) + " out of range");
    return lb.coord_of[static_cast<std::size_t>(v)];
}

} // namespace monodyn

#endif
