#ifndef MONODYN_BOUNDS_HPP
#define MONODYN_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monodyn/error.hpp"
#include "monodyn/rational.hpp"

namespace monodyn {

enum class BoundDirection { lower, upper, exact };

inline const char* to_string(BoundDirection d) {
    switch (d) {
        case BoundDirection::lower: return "lower";
        case BoundDirection::upper: return "upper";
        case BoundDirection::exact: return "exact";
    }
    return "unknown";
}

/// A closed-form bound value with its applicability. `exact` is the value as
/// stated; `certificate` is the integer-strengthened form (ceiling for lower
/// bounds, floor for upper bounds) that solver pruning consumes, valid
/// because the bounded quantity is an integer.
struct BoundReport {
    std::string name;
    BoundDirection direction = BoundDirection::lower;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    bool applicable = false;
    std::string reason; // why not, when applicable is false
    Rational exact;
    std::int64_t certificate = 0;
    std::vector<std::string> hypotheses; // assumed, not checked here
    std::string note;
};

namespace detail {

inline BoundReport make_bound(std::string name, BoundDirection dir,
                              std::vector<std::pair<std::string, std::int64_t>> params,
                              Rational value) {
    BoundReport r;
    r.name = std::move(name);
    r.direction = dir;
    r.parameters = std::move(params);
    r.applicable = true;
    r.exact = value;
    r.certificate = (dir == BoundDirection::upper) ? value.floor() : value.ceil();
    return r;
}

inline BoundReport not_applicable(std::string name, BoundDirection dir,
                                  std::vector<std::pair<std::string, std::int64_t>> params,
                                  std::string reason) {
    BoundReport r;
    r.name = std::move(name);
    r.direction = dir;
    r.parameters = std::move(params);
    r.applicable = false;
    r.reason = "unsupported-regime: " + std::move(reason);
    return r;
}

} // namespace detail

/// mo(L(G)) >= n(k-1)/4 for a k-regular graph G on n vertices under simple
/// majority. Integral whenever k is odd (then n and k-1 are both even).
inline BoundReport line_graph_majority_lb(int n, int k) {
    std::vector<std::pair<std::string, std::int64_t>> params{{"n", n}, {"k", k}};
    if (n < 1 || k < 1) fail(errc::invalid_parameter, "line_graph_majority_lb requires n, k >= 1");
    if ((static_cast<std::int64_t>(n) * k) % 2 != 0)
        fail(errc::invalid_parameter, "no k-regular graph on n vertices exists: nk is odd");
    if (k > n - 1)
        fail(errc::invalid_parameter, "no k-regular graph on n vertices exists: k > n-1");
    return detail::make_bound("line-graph-majority-lb", BoundDirection::lower, params,
                              Rational(static_cast<std::int64_t>(n) * (k - 1), 4));
}

/// Upper bound on dyn_t(G [] C_n) from d = dyn_t(G).
inline BoundReport dyn_product_cycle_ub(int d, int n, int t) {
    std::vector<std::pair<std::string, std::int64_t>> params{{"d", d}, {"n", n}, {"t", t}};
    if (d < 1 || n < 3) fail(errc::invalid_parameter, "requires d >= 1 and n >= 3");
    if (t < 2)
        return detail::not_applicable("dyn-product-cycle-ub", BoundDirection::upper, params,
                                      "requires t >= 2");
    std::int64_t value = 0;
    if (t == 2)
        value = static_cast<std::int64_t>(n) + d - 2;
    else if (t == 3)
        value = static_cast<std::int64_t>(n) * d - (n + d) + 2;
    else
        value = static_cast<std::int64_t>(d) + static_cast<std::int64_t>(n - 2) * (d - 1) + d - 2;
    auto r = detail::make_bound("dyn-product-cycle-ub", BoundDirection::upper, params, value);
    r.hypotheses = {"G connected", "t <= min degree of G", "d = dyn_t(G)"};
    return r;
}

/// Upper bound dyn_t(G [] K_n) <= td - ((t^2-3t)/2 + d) from d = dyn_t(G).
inline BoundReport dyn_product_complete_ub(int d, int t) {
    std::vector<std::pair<std::string, std::int64_t>> params{{"d", d}, {"t", t}};
    if (d < 1) fail(errc::invalid_parameter, "requires d >= 1");
    if (t < 2)
        return detail::not_applicable("dyn-product-complete-ub", BoundDirection::upper, params,
                                      "requires t >= 2");
    if (d < t - 1)
        return detail::not_applicable("dyn-product-complete-ub", BoundDirection::upper, params,
                                      "telescoping needs d >= t-1");
    const std::int64_t value = static_cast<std::int64_t>(t) * d -
                               (static_cast<std::int64_t>(t) * t - 3 * t) / 2 - d;
    auto r = detail::make_bound("dyn-product-complete-ub", BoundDirection::upper, params, value);
    r.hypotheses = {"G connected", "d = dyn_t(G)"};
    return r;
}

/// dyn_t(G [] H) <= dyn_t(G) dyn_t(H), as cited from Adams et al.
inline BoundReport dyn_product_naive_ub(int dg, int dh) {
    std::vector<std::pair<std::string, std::int64_t>> params{{"dg", dg}, {"dh", dh}};
    if (dg < 1 || dh < 1) fail(errc::invalid_parameter, "requires dg, dh >= 1");
    auto r = detail::make_bound("dyn-product-naive-ub", BoundDirection::upper, params,
                                Rational(static_cast<std::int64_t>(dg) * dh));
    r.hypotheses = {"constant threshold t on both factors"};
    return r;
}

/// dyn_t(G [] H) <= dg dh - dh/2 when dg <= dh and some minimum dynamo of H
/// induces no isolated vertex. The half can be fractional; the certificate is
/// the floor.
inline BoundReport dyn_product_improved_ub(int dg, int dh) {
    std::vector<std::pair<std::string, std::int64_t>> params{{"dg", dg}, {"dh", dh}};
    if (dg < 1 || dh < 1) fail(errc::invalid_parameter, "requires dg, dh >= 1");
    if (dg > dh)
        return detail::not_applicable("dyn-product-improved-ub", BoundDirection::upper, params,
                                      "requires dyn_t(G) <= dyn_t(H)");
    auto r = detail::make_bound("dyn-product-improved-ub", BoundDirection::upper, params,
                                Rational(static_cast<std::int64_t>(dg) * dh) - Rational(dh, 2));
    r.hypotheses = {"constant threshold t >= 3",
                    "some minimum dynamo D_H of H has no isolated vertex in H[D_H] "
                    "(unverified hypothesis)"};
    return r;
}

/// dyn_t(G [] H) <= dg dh - dh when H[D_H] is a star on dh vertices; clamped
/// to 1, since any dynamo of a nonempty graph has at least one vertex.
inline BoundReport dyn_product_star_corollary_ub(int dg, int dh) {
    std::vector<std::pair<std::string, std::int64_t>> params{{"dg", dg}, {"dh", dh}};
    if (dg < 1 || dh < 1) fail(errc::invalid_parameter, "requires dg, dh >= 1");
    const std::int64_t raw = static_cast<std::int64_t>(dg) * dh - dh;
    auto r = detail::make_bound("dyn-product-star-corollary-ub", BoundDirection::upper, params,
                                Rational(raw < 1 ? 1 : raw));
    r.hypotheses = {"constant threshold t >= 3",
                    "H[D_H] isomorphic to K_{1, dyn_t(H)-1} (unverified hypothesis)"};
    if (raw < 1) r.note = "raw value " + std::to_string(raw) + " clamped to 1";
    return r;
}

/// dyn_t(G [] H) <= gt - (t^2 - 3t + 2g)/2 when H[D_H] is complete, with
/// g = dyn_t(G).
inline BoundReport dyn_product_clique_corollary_ub(int g, int t) {
    std::vector<std::pair<std::string, std::int64_t>> params{{"g", g}, {"t", t}};
    if (g < 1) fail(errc::invalid_parameter, "requires g >= 1");
    if (t < 3)
        return detail::not_applicable("dyn-product-clique-corollary-ub", BoundDirection::upper,
                                      params, "requires t >= 3");
    if (g < t - 1)
        return detail::not_applicable("dyn-product-clique-corollary-ub", BoundDirection::upper,
                                      params, "telescoping needs g >= t-1");
    const std::int64_t value = static_cast<std::int64_t>(g) * t -
                               (static_cast<std::int64_t>(t) * t - 3 * t + 2 * g) / 2;
    auto r = detail::make_bound("dyn-product-clique-corollary-ub", BoundDirection::upper, params,
                                value);
    r.hypotheses = {"dyn_t(G) <= dyn_t(H)",
                    "H[D_H] isomorphic to K_{dyn_t(H)} (unverified hypothesis)"};
    return r;
}

/// Lower bound on edge dynamos of an r-regular bipartite graph on n vertices,
/// i.e. on dyn_t(L(G)): (n(2t-2r+2) + (2r-t)^2 - 4r + 2t)/4 + eps, where
/// eps = 1/4 iff n-2r+t+1 is even.
inline BoundReport regular_bipartite_line_lb(int n, int r, int t) {
    std::vector<std::pair<std::string, std::int64_t>> params{{"n", n}, {"r", r}, {"t", t}};
    if (n < 1 || r < 1 || t < 1)
        fail(errc::invalid_parameter, "requires n, r, t >= 1");
    if ((static_cast<std::int64_t>(n) * r) % 2 != 0)
        fail(errc::invalid_parameter, "no r-regular graph on n vertices exists: nr is odd");
    if (t > 2 * r - 2)
        return detail::not_applicable("regular-bipartite-line-lb", BoundDirection::lower, params,
                                      "requires t <= 2r-2");
    const std::int64_t core = static_cast<std::int64_t>(n) * (2 * t - 2 * r + 2) +
                              static_cast<std::int64_t>(2 * r - t) * (2 * r - t) - 4 * r + 2 * t;
    const bool eps = ((n - 2 * r + t + 1) % 2 == 0);
    Rational value = Rational(core, 4) + (eps ? Rational(1, 4) : Rational(0));
    auto rep = detail::make_bound("regular-bipartite-line-lb", BoundDirection::lower, params,
                                  value);
    rep.hypotheses = {"G is an r-regular bipartite graph on n vertices",
                      "t is the minimum edge threshold"};
    return rep;
}

/// Biregular generalization: with |V1| = m of degree r1 and |V2| = n of
/// degree r2, any edge dynamo of size k satisfies
/// k >= (m r1 + n r2)/2 - mn + ((m+n+1+t-r1-r2)/2)^2 - phi.
/// The theorem's display line reads "m r1 + n r1"; the proof body and the
/// K_m [] K_n corollary require m r1 + n r2, which is what is computed here.
inline BoundReport biregular_line_lb(int m, int n, int r1, int r2, int t) {
    std::vector<std::pair<std::string, std::int64_t>> params{
        {"m", m}, {"n", n}, {"r1", r1}, {"r2", r2}, {"t", t}};
    if (m < 1 || n < 1 || r1 < 1 || r2 < 1 || t < 1)
        fail(errc::invalid_parameter, "requires positive parameters");
    if (static_cast<std::int64_t>(m) * r1 != static_cast<std::int64_t>(n) * r2)
        fail(errc::invalid_parameter, "bipartite degree sum requires m*r1 == n*r2");
    if (t > r1 + r2 - 2)
        return detail::not_applicable("biregular-line-lb", BoundDirection::lower, params,
                                      "requires t <= r1+r2-2");
    const std::int64_t q = static_cast<std::int64_t>(m) + n + 1 + t - r1 - r2;
    const bool phi_quarter = (q % 2 != 0); // phi = 1/4 for odd q, else 0
    Rational value = Rational(static_cast<std::int64_t>(m) * r1 + static_cast<std::int64_t>(n) * r2, 2) -
                     Rational(static_cast<std::int64_t>(m) * n) + Rational(q, 2) * Rational(q, 2) -
                     (phi_quarter ? Rational(1, 4) : Rational(0));
    auto rep = detail::make_bound("biregular-line-lb", BoundDirection::lower, params, value);
    rep.hypotheses = {"G biregular bipartite with part sizes m, n and degrees r1, r2"};
    rep.note = "leading term follows the proof body (m*r1 + n*r2)/2; the theorem's display "
               "line prints m*r1 + n*r1, an apparent typo";
    return rep;
}

/// Exact value dyn_t(K_m [] K_n) = m(t-m+1) in the thin regime m < t/2,
/// n > t-m+1, reported as matching lower and upper bounds.
inline BoundReport small_m_exact(int m, int n, int t) {
    std::vector<std::pair<std::string, std::int64_t>> params{{"m", m}, {"n", n}, {"t", t}};
    if (m < 1 || n < 1 || t < 1) fail(errc::invalid_parameter, "requires m, n, t >= 1");
    if (!(2 * m < t))
        return detail::not_applicable("small-m-exact", BoundDirection::exact, params,
                                      "requires m < t/2");
    if (!(n > t - m + 1))
        return detail::not_applicable("small-m-exact", BoundDirection::exact, params,
                                      "requires n > t-m+1");
    if (t > m + n - 2)
        return detail::not_applicable("small-m-exact", BoundDirection::exact, params,
                                      "requires t <= m+n-2");
    return detail::make_bound("small-m-exact", BoundDirection::exact, params,
                              Rational(static_cast<std::int64_t>(m) * (t - m + 1)));
}

} // namespace monodyn

#endif
