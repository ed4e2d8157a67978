#ifndef MONODYN_ENGINE_HPP
#define MONODYN_ENGINE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "monodyn/error.hpp"
#include "monodyn/graph.hpp"
#include "monodyn/thresholds.hpp"

namespace monodyn {

/// A set of vertex ids within a host graph's range; stored sorted and unique.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet from_ids(const Graph& g, std::vector<Vertex> ids) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (Vertex v : ids)
            if (v < 0 || v >= g.vertex_count())
                fail(errc::invalid_parameter, "vertex " + std::to_string(v) + " out of range");
        VertexSet s;
        s.ids_ = std::move(ids);
        return s;
    }

    /// Trusted path for ids already known to be in range.
    static VertexSet from_sorted_unchecked(std::vector<Vertex> ids) {
        VertexSet s;
        s.ids_ = std::move(ids);
        return s;
    }

    const std::vector<Vertex>& ids() const { return ids_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

    std::vector<char> mask(int vertex_count) const {
        std::vector<char> m(static_cast<std::size_t>(vertex_count), 0);
        for (Vertex v : ids_) m[static_cast<std::size_t>(v)] = 1;
        return m;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.ids_ == b.ids_; }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

private:
    std::vector<Vertex> ids_;
};

/// Layer partition D_0, D_1, ..., D_k of the activation process.
struct ActivationTrace {
    std::vector<VertexSet> layers; // layers[0] is the seed
    VertexSet activated;           // union of all layers
    bool complete = false;         // activated == V(g)

    friend bool operator==(const ActivationTrace& a, const ActivationTrace& b) {
        return a.layers == b.layers && a.activated == b.activated && a.complete == b.complete;
    }
};

namespace detail {

inline void check_inputs(const Graph& g, const ThresholdAssignment& tau, const VertexSet& s) {
    if (tau.size() != g.vertex_count())
        fail(errc::invalid_parameter, "threshold assignment size does not match graph");
    for (Vertex v : s.ids())
        if (v >= g.vertex_count())
            fail(errc::invalid_parameter, "seed vertex " + std::to_string(v) + " out of range");
}

} // namespace detail

/// Run the spread process from `seed` under synchronous rounds: D_{i+1} is the
/// set of all inactive vertices with at least tau(v) active neighbors. The
/// fixed point is schedule-independent; the layers realize the synchronous
/// schedule.
inline ActivationTrace activate(const Graph& g, const ThresholdAssignment& tau,
                                const VertexSet& seed) {
    detail::check_inputs(g, tau, seed);
    const int n = g.vertex_count();
    std::vector<char> active = seed.mask(n);
    std::vector<int> active_neighbors(static_cast<std::size_t>(n), 0);
    for (Vertex v : seed.ids())
        for (Vertex w : g.neighbors(v)) ++active_neighbors[static_cast<std::size_t>(w)];

    ActivationTrace trace;
    trace.layers.push_back(seed);
    int active_count = seed.size();

    std::vector<Vertex> frontier = seed.ids();
    while (true) {
        std::vector<Vertex> next;
        for (Vertex v = 0; v < n; ++v)
            if (!active[static_cast<std::size_t>(v)] &&
                active_neighbors[static_cast<std::size_t>(v)] >= tau(v))
                next.push_back(v);
        if (next.empty()) break;
        for (Vertex v : next) {
            active[static_cast<std::size_t>(v)] = 1;
            ++active_count;
        }
        for (Vertex v : next)
            for (Vertex w : g.neighbors(v)) ++active_neighbors[static_cast<std::size_t>(w)];
        trace.layers.push_back(VertexSet::from_sorted_unchecked(std::move(next)));
    }

    std::vector<Vertex> all;
    all.reserve(static_cast<std::size_t>(active_count));
    for (Vertex v = 0; v < n; ++v)
        if (active[static_cast<std::size_t>(v)]) all.push_back(v);
    trace.activated = VertexSet::from_sorted_unchecked(std::move(all));
    trace.complete = (active_count == n);
    return trace;
}

/// Outcome of a monopoly check; `witness` is the lexicographically smallest
/// vertex violating the threshold condition when the check fails.
struct MonopolyCheck {
    bool holds = false;
    std::optional<Vertex> witness;
};

/// True iff every vertex outside m has at least tau(v) neighbors inside m.
inline MonopolyCheck is_static_monopoly(const Graph& g, const ThresholdAssignment& tau,
                                        const VertexSet& m) {
    detail::check_inputs(g, tau, m);
    const std::vector<char> in = m.mask(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        int hits = 0;
        for (Vertex w : g.neighbors(v))
            if (in[static_cast<std::size_t>(w)]) ++hits;
        if (hits < tau(v)) return MonopolyCheck{false, v};
    }
    return MonopolyCheck{true, std::nullopt};
}

/// True iff iterative activation from d reaches the whole vertex set.
inline bool is_dynamic_monopoly(const Graph& g, const ThresholdAssignment& tau,
                                const VertexSet& d) {
    return activate(g, tau, d).complete;
}

/// Re-verify a trace layer by layer: layers disjoint, every vertex in D_{i+1}
/// meets its threshold against D_0 u ... u D_i, and the final state is maximal.
inline bool verify_trace(const Graph& g, const ThresholdAssignment& tau,
                         const ActivationTrace& trace) {
    if (trace.layers.empty()) return false;
    const int n = g.vertex_count();
    std::vector<char> active(static_cast<std::size_t>(n), 0);
    std::vector<int> active_neighbors(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (std::size_t i = 0; i < trace.layers.size(); ++i) {
        const VertexSet& layer = trace.layers[i];
        if (i > 0 && layer.empty()) return false;
        for (Vertex v : layer.ids()) {
            if (v < 0 || v >= n) return false;
            if (active[static_cast<std::size_t>(v)]) return false; // not disjoint
            if (i > 0 && active_neighbors[static_cast<std::size_t>(v)] < tau(v)) return false;
        }
        for (Vertex v : layer.ids()) {
            active[static_cast<std::size_t>(v)] = 1;
            ++count;
            for (Vertex w : g.neighbors(v)) ++active_neighbors[static_cast<std::size_t>(w)];
        }
    }
    // Maximality: no inactive vertex meets its threshold.
    for (Vertex v = 0; v < n; ++v)
        if (!active[static_cast<std::size_t>(v)] &&
            active_neighbors[static_cast<std::size_t>(v)] >= tau(v))
            return false;
    if (trace.activated.size() != count) return false;
    for (Vertex v : trace.activated.ids())
        if (!active[static_cast<std::size_t>(v)]) return false;
    return trace.complete == (count == n);
}

} // namespace monodyn

#endif
