#ifndef MONODYN_THRESHOLDS_HPP
#define MONODYN_THRESHOLDS_HPP

#include <string>
#include <vector>

#include "monodyn/error.hpp"
#include "monodyn/graph.hpp"

namespace monodyn {

/// Per-vertex positive integer thresholds. The named constructors below
/// enforce the validity condition 1 <= tau(v) <= deg(v); `uniform` skips the
/// degree check for families whose thresholds deliberately exceed some
/// degrees (such vertices can never be activated and must be seeded).
class ThresholdAssignment {
public:
    ThresholdAssignment() = default;

    static ThresholdAssignment uniform(int vertex_count, int t) {
        if (vertex_count < 0) fail(errc::invalid_parameter, "negative vertex count");
        if (t < 1) fail(errc::invalid_parameter, "threshold must be at least 1");
        return ThresholdAssignment(std::vector<int>(static_cast<std::size_t>(vertex_count), t));
    }

    /// Structural constructor: enforces tau >= 1 but not the degree bound.
    static ThresholdAssignment from_values_unchecked(std::vector<int> values) {
        return ThresholdAssignment(std::move(values));
    }

    int operator()(Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }

    bool is_constant() const {
        for (int t : values_)
            if (t != values_.front()) return false;
        return !values_.empty();
    }

    bool valid_for(const Graph& g) const {
        if (size() != g.vertex_count()) return false;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if ((*this)(v) < 1 || (*this)(v) > g.degree(v)) return false;
        return true;
    }

    friend bool operator==(const ThresholdAssignment& a, const ThresholdAssignment& b) {
        return a.values_ == b.values_;
    }

private:
    explicit ThresholdAssignment(std::vector<int> values) : values_(std::move(values)) {
        for (int t : values_)
            if (t < 1) fail(errc::invalid_parameter, "threshold must be at least 1");
    }

    friend ThresholdAssignment explicit_thresholds(const Graph&, const std::vector<int>&);

    std::vector<int> values_;
};

/// tau(v) = t for every vertex; requires t <= min degree.
inline ThresholdAssignment constant_threshold(const Graph& g, int t) {
    if (t < 1) fail(errc::invalid_parameter, "threshold must be at least 1");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < t)
            fail(errc::threshold_exceeds_degree,
                 "t=" + std::to_string(t) + " exceeds degree " + std::to_string(g.degree(v)) +
                     " of vertex " + std::to_string(v));
    return ThresholdAssignment::uniform(g.vertex_count(), t);
}

inline ThresholdAssignment explicit_thresholds(const Graph& g, const std::vector<int>& values) {
    if (static_cast<int>(values.size()) != g.vertex_count())
        fail(errc::invalid_parameter, "expected " + std::to_string(g.vertex_count()) +
                                          " thresholds, got " + std::to_string(values.size()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int t = values[static_cast<std::size_t>(v)];
        if (t < 1 || t > g.degree(v))
            fail(errc::threshold_exceeds_degree,
                 "tau(" + std::to_string(v) + ")=" + std::to_string(t) +
                     " outside [1, deg=" + std::to_string(g.degree(v)) + "]");
    }
    return ThresholdAssignment(values);
}

/// tau(v) = deg(v)/2. Defined only when every degree is even (and >= 2);
/// there is no stated rounding rule for odd degrees.
inline ThresholdAssignment simple_majority(const Graph& g) {
    std::vector<int> values(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d % 2 != 0 || d == 0)
            fail(errc::unsupported_majority,
                 "simple majority d/2 is not a positive integer at vertex " + std::to_string(v) +
                     " (degree " + std::to_string(d) + ")");
        values[static_cast<std::size_t>(v)] = d / 2;
    }
    return explicit_thresholds(g, values);
}

/// tau(v) = (deg(v)+1)/2. Defined only when every degree is odd.
inline ThresholdAssignment strict_majority(const Graph& g) {
    std::vector<int> values(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d % 2 != 1)
            fail(errc::unsupported_majority,
                 "strict majority (d+1)/2 is not an integer at vertex " + std::to_string(v) +
                     " (degree " + std::to_string(d) + ")");
        values[static_cast<std::size_t>(v)] = (d + 1) / 2;
    }
    return explicit_thresholds(g, values);
}

} // namespace monodyn

#endif
