#ifndef MONODYN_CHECKS_HPP
#define MONODYN_CHECKS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monodyn/bounds.hpp"
#include "monodyn/constructions.hpp"
#include "monodyn/engine.hpp"
#include "monodyn/graph.hpp"
#include "monodyn/io.hpp"
#include "monodyn/solver.hpp"
#include "monodyn/thresholds.hpp"

namespace monodyn::checks {

inline constexpr std::uint64_t default_seed = 20250801;

struct CheckOptions {
    std::uint64_t seed = default_seed;
    int threads = 1;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline CheckResult ok(std::string name, std::string detail = "") {
    return CheckResult{std::move(name), true, std::move(detail)};
}

inline CheckResult bad(std::string name, std::string detail) {
    return CheckResult{std::move(name), false, std::move(detail)};
}

template <typename F>
inline void instance(std::vector<CheckResult>& out, const std::string& name, F&& body) {
    try {
        out.push_back(body());
    } catch (const Error& e) {
        out.push_back(bad(name, e.what()));
    }
}

} // namespace detail

/// Connected random graph: a random attachment tree plus `extra_edges`
/// random chords, then patched up to the requested minimum degree.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, int extra_edges,
                                    int min_degree = 1) {
    std::set<Edge> have;
    auto add = [&](Vertex u, Vertex v) {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        return have.insert({u, v}).second;
    };
    for (Vertex v = 1; v < n; ++v)
        add(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v);
    for (int i = 0; i < extra_edges; ++i)
        add(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)),
            static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : have) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    for (Vertex v = 0; v < n; ++v)
        while (deg[static_cast<std::size_t>(v)] < min_degree) {
            Vertex w = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
            if (add(v, w)) {
                ++deg[static_cast<std::size_t>(v)];
                ++deg[static_cast<std::size_t>(w)];
            }
        }
    return Graph::from_edges(n, std::vector<Edge>(have.begin(), have.end()));
}

inline ThresholdAssignment random_thresholds(std::mt19937_64& rng, const Graph& g, int lo) {
    std::vector<int> values(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        values[static_cast<std::size_t>(v)] =
            lo + static_cast<int>(rng() % static_cast<std::uint64_t>(d - lo + 1));
    }
    return explicit_thresholds(g, values);
}

inline VertexSet random_subset(std::mt19937_64& rng, const Graph& g, int size) {
    std::vector<Vertex> pool(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) pool[static_cast<std::size_t>(v)] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size));
    return VertexSet::from_ids(g, std::move(pool));
}

/// Sequential activation under a random processing order; the fixed point
/// must match the synchronous engine.
inline VertexSet async_fixed_point(std::mt19937_64& rng, const Graph& g,
                                   const ThresholdAssignment& tau, const VertexSet& seed) {
    const int n = g.vertex_count();
    std::vector<char> active = seed.mask(n);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    bool changed = true;
    while (changed) {
        changed = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (Vertex v : order) {
            if (active[static_cast<std::size_t>(v)]) continue;
            int hits = 0;
            for (Vertex w : g.neighbors(v))
                if (active[static_cast<std::size_t>(w)]) ++hits;
            if (hits >= tau(v)) {
                active[static_cast<std::size_t>(v)] = 1;
                changed = true;
            }
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (active[static_cast<std::size_t>(v)]) out.push_back(v);
    return VertexSet::from_sorted_unchecked(std::move(out));
}

namespace detail {

inline std::string tag(const std::string& family,
                       std::initializer_list<std::pair<const char*, int>> params) {
    std::ostringstream s;
    s << family << '(';
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) s << ',';
        s << k << '=' << v;
        first = false;
    }
    s << ')';
    return s.str();
}

inline CheckResult check_construction(const Construction& c) {
    std::ostringstream name;
    name << c.theorem_tag << '(';
    for (std::size_t i = 0; i < c.params.size(); ++i)
        name << (i ? "," : "") << c.params[i].first << '=' << c.params[i].second;
    name << ')';
    // Constructors self-verify; re-assert the contract explicitly here.
    bool verified = c.kind == SetKind::monopoly
                        ? is_static_monopoly(c.graph, c.threshold, c.set).holds
                        : is_dynamic_monopoly(c.graph, c.threshold, c.set);
    if (!verified) return bad(name.str(), "engine verification failed");
    if (c.set.size() != c.claimed_size)
        return bad(name.str(), "size " + std::to_string(c.set.size()) + " != claimed " +
                                   std::to_string(c.claimed_size));
    return ok(name.str(), "size=" + std::to_string(c.set.size()));
}

} // namespace detail

// ---------------------------------------------------------------------------
// 1. Construction validity sweep (instances up to 900 vertices, m, n <= 30)
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> construction_sweep(const CheckOptions& = {}) {
    using namespace detail;
    std::vector<CheckResult> out;

    for (int n = 3; n <= 30; ++n)
        instance(out, tag("mon2-torus", {{"n", n}}),
                 [&] { return check_construction(mon2_torus(n)); });

    auto dedup = [](std::vector<int> v, int lo, int hi) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::vector<int> keep;
        for (int x : v)
            if (x >= lo && x <= hi) keep.push_back(x);
        return keep;
    };

    const std::vector<int> ms{4, 5, 12, 13};
    for (int t : {3, 4, 5, 6, 8, 10, 14, 17}) {
        for (int n : dedup({t - 1, (3 * t - 5) / 2, 2 * t - 4}, std::max(1, t - 1),
                           std::min(30, 2 * t - 4)))
            for (int m : ms) {
                if (m * n > 900) continue;
                if (m % 2 == 1 && 2 * n < 3 * (t - 2)) continue; // infeasible odd-m corner
                instance(out, tag("mon-cycle-complete", {{"m", m}, {"n", n}, {"t", t}}),
                         [&] { return check_construction(mon_cycle_complete(m, n, t)); });
            }
        for (int n : dedup({2 * t - 3, 2 * t - 2, 2 * t - 1, 2 * t}, std::max(1, t - 1), 30))
            for (int m : ms) {
                if (m * n > 900) continue;
                instance(out, tag("mon-cycle-complete", {{"m", m}, {"n", n}, {"t", t}}),
                         [&] { return check_construction(mon_cycle_complete(m, n, t)); });
            }
        for (int n : dedup({2 * t + 1, 2 * t + 4, 30}, 2 * t + 1, 30))
            for (int m : ms) {
                if (m * n > 900) continue;
                instance(out, tag("mon-cycle-complete", {{"m", m}, {"n", n}, {"t", t}}),
                         [&] { return check_construction(mon_cycle_complete(m, n, t)); });
            }
    }

    for (int n = 2; n <= 30; ++n)
        instance(out, tag("mon-diag", {{"n", n}}),
                 [&] { return check_construction(mon_diag(n)); });

    for (int t = 2; t <= 30; t += 2)
        for (int k = 2; k * t / 2 <= 30; ++k) {
            instance(out, tag("mon-block-diag", {{"k", k}, {"t", t}}),
                     [&] { return check_construction(mon_block_diag(k, t)); });
            instance(out, tag("mon-block-complement", {{"k", k}, {"t", t}}),
                     [&] { return check_construction(mon_block_complement(k, t)); });
        }

    for (int n = 3; n <= 29; n += 2)
        instance(out, tag("mon-circulant", {{"n", n}}),
                 [&] { return check_construction(mon_circulant(n)); });

    for (int n = 3; n <= 30; ++n) {
        instance(out, tag("dyn-cycle-complete-t2", {{"n", n}}),
                 [&] { return check_construction(dyn_cycle_complete_t2(n)); });
        instance(out, tag("dyn-cycle-complete-t3", {{"n", n}}),
                 [&] { return check_construction(dyn_cycle_complete_t3(n)); });
    }

    for (int t : {4, 5, 6, 8, 10, 16})
        for (int n : dedup({t - 1, t + 2, 2 * t, 30}, t - 1, 30))
            for (int m : ms) {
                if (m * n > 900) continue;
                instance(out, tag("dyn-cycle-complete-t", {{"m", m}, {"n", n}, {"t", t}}),
                         [&] { return check_construction(dyn_cycle_complete_t(m, n, t)); });
            }

    for (int n = 3; n <= 20; ++n)
        for (int t : dedup({3, (n + 3) / 2, n}, 3, n))
            instance(out, tag("dyn-star-star", {{"n", n}, {"t", t}}),
                     [&] { return check_construction(dyn_star_star(n, t)); });

    const std::vector<std::pair<int, int>> rects{{2, 2},   {3, 3},  {3, 5},   {5, 3},
                                                 {4, 7},   {10, 10}, {13, 17}, {30, 30},
                                                 {2, 30},  {30, 2},  {17, 23}};
    for (auto [m, n] : rects)
        for (int t : dedup({1, 2, 3, std::min(m, n), std::min(m, n) + 2, m + n - 2}, 1,
                           m + n - 2)) {
            if (m < (t + 1) / 2 || n < (t + 1) / 2) continue;
            instance(out, tag("dyn-complete-complete", {{"m", m}, {"n", n}, {"t", t}}),
                     [&] { return check_construction(dyn_complete_complete(m, n, t)); });
        }

    for (int m = 1; m <= 4; ++m)
        for (int t : {2 * m + 1, 2 * m + 2, 2 * m + 5})
            for (int n : dedup({t - m + 2, t - m + 6, 30}, t - m + 2, 30)) {
                if (t > m + n - 2) continue;
                instance(out, tag("dyn-complete-complete-small-m",
                                  {{"m", m}, {"n", n}, {"t", t}}),
                         [&] { return check_construction(dyn_complete_complete_small_m(m, n, t)); });
            }

    return out;
}

// ---------------------------------------------------------------------------
// 2. Figure reproduction
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> figures(const CheckOptions& = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    struct FigureCase {
        const char* name;
        int want;
        Construction (*make)();
    };
    const FigureCase cases[] = {
        {"figure1-up mon6(C7xK9)", 32, [] { return mon_cycle_complete(7, 9, 6); }},
        {"figure1-down mon7(C8xK8)", 40, [] { return mon_cycle_complete(8, 8, 7); }},
        {"figure2-up dyn5(C8xK10)", 24, [] { return dyn_cycle_complete_t(8, 10, 5); }},
        {"figure2-down dyn5(C9xK8)", 27, [] { return dyn_cycle_complete_t(9, 8, 5); }},
    };
    for (const auto& fc : cases)
        instance(out, fc.name, [&] {
            const Construction c = fc.make();
            if (c.set.size() != fc.want)
                return bad(fc.name, "size " + std::to_string(c.set.size()) + " != " +
                                        std::to_string(fc.want));
            const std::string grid = render_grid(c.graph, c.set);
            const auto stars = std::count(grid.begin(), grid.end(), '*');
            if (stars != fc.want)
                return bad(fc.name, "grid has " + std::to_string(stars) + " stars");
            return ok(fc.name, "size and star count " + std::to_string(fc.want));
        });
    return out;
}

// ---------------------------------------------------------------------------
// 3. Exactness vs brute-force oracle at desk scale
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> exactness_oracle(const CheckOptions& opt = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    SolveBudget budget;
    budget.threads = opt.threads;

    struct ExactCase {
        const char* name;
        SetKind kind;
        Graph graph;
        int t;
        int want;
    };
    const ExactCase cases[] = {
        {"mon2(C3xC3)=3", SetKind::monopoly, cartesian_product(cycle(3), cycle(3)), 2, 3},
        {"mon2(K2xK2)=2", SetKind::monopoly, cartesian_product(complete(2), complete(2)), 2, 2},
        {"mon2(K3xK3)=3", SetKind::monopoly, cartesian_product(complete(3), complete(3)), 2, 3},
        {"dyn2(C3xK3)=2", SetKind::dynamo, cartesian_product(cycle(3), complete(3)), 2, 2},
        {"dyn2(C4xK4)=3", SetKind::dynamo, cartesian_product(cycle(4), complete(4)), 2, 3},
        {"dyn2(C5xK5)=3", SetKind::dynamo, cartesian_product(cycle(5), complete(5)), 2, 3},
        {"dyn3(C3xK3)=4", SetKind::dynamo, cartesian_product(cycle(3), complete(3)), 3, 4},
        {"dyn4(C3xK3)=6", SetKind::dynamo, cartesian_product(cycle(3), complete(3)), 4, 6},
        {"dyn2(K3xK3)=2", SetKind::dynamo, cartesian_product(complete(3), complete(3)), 2, 2},
        {"dyn3(K3xK3)=4", SetKind::dynamo, cartesian_product(complete(3), complete(3)), 3, 4},
        {"dyn4(K3xK3)=6", SetKind::dynamo, cartesian_product(complete(3), complete(3)), 4, 6},
        {"dyn5(K2xK5)=8", SetKind::dynamo, cartesian_product(complete(2), complete(5)), 5, 8},
    };
    for (const auto& ec : cases)
        instance(out, ec.name, [&] {
            const ThresholdAssignment tau = constant_threshold(ec.graph, ec.t);
            const SolveResult r = ec.kind == SetKind::monopoly
                                      ? min_monopoly(ec.graph, tau, budget)
                                      : min_dynamo(ec.graph, tau, budget);
            if (r.status != SolveStatus::solved) return bad(ec.name, "solver inconclusive");
            if (r.optimum != ec.want)
                return bad(ec.name, "optimum " + std::to_string(r.optimum) + " != " +
                                        std::to_string(ec.want));
            return ok(ec.name, "optimum=" + std::to_string(r.optimum) + " explored=" +
                                   std::to_string(r.explored));
        });
    return out;
}

// ---------------------------------------------------------------------------
// 4. Sandwich suite on seeded-random graphs
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> sandwich(const CheckOptions& opt = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed);
    SolveBudget budget;
    budget.threads = opt.threads;

    int cycle_products = 0, complete_products = 0, naive_checks = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = 6 + static_cast<int>(rng() % 7); // 6..12
        // cycle through sparser and denser graphs so all of t = 1, 2, 3
        // stay valid somewhere in the sample
        const Graph g = random_connected_graph(rng, n, n / 2 + i % 4, 1 + i % 3);
        for (int t = 1; t <= 3; ++t) {
            if (t > g.min_degree()) continue; // constant threshold must be valid
            const std::string name =
                "sandwich(G" + std::to_string(i) + ",n=" + std::to_string(n) +
                ",t=" + std::to_string(t) + ")";
            instance(out, name, [&]() -> CheckResult {
                const ThresholdAssignment tau = constant_threshold(g, t);
                const SolveResult base = min_dynamo(g, tau, budget);
                if (base.status != SolveStatus::solved) return bad(name, "base solve failed");
                const int d = base.optimum;
                std::ostringstream detail;
                detail << "dyn=" << d;

                if (g.vertex_count() * 2 <= 16) {
                    const Graph p = cartesian_product(g, complete(2));
                    const ThresholdAssignment ptau = constant_threshold(p, t);
                    const SolveResult pr = min_dynamo(p, ptau, budget);
                    if (pr.status != SolveStatus::solved) return bad(name, "product solve failed");
                    if (t >= 2) {
                        const BoundReport ub = dyn_product_complete_ub(d, t);
                        if (ub.applicable) {
                            ++complete_products;
                            detail << " K2:opt=" << pr.optimum << "<=" << ub.certificate;
                            if (pr.optimum > ub.certificate)
                                return bad(name, "complete-ub violated: " +
                                                     std::to_string(pr.optimum) + " > " +
                                                     std::to_string(ub.certificate));
                        }
                    } else {
                        // dyn_1(K_2) = 1; the naive product bound applies
                        const BoundReport ub = dyn_product_naive_ub(d, 1);
                        ++naive_checks;
                        detail << " K2:opt=" << pr.optimum << "<=" << ub.certificate;
                        if (pr.optimum > ub.certificate)
                            return bad(name, "naive-ub violated");
                    }
                }
                if (t >= 2)
                    for (int cn = 3; cn <= 4; ++cn)
                        if (g.vertex_count() * cn <= 16) { // vacuous for 6..12-vertex bases
                            ++cycle_products;
                            const Graph p = cartesian_product(g, cycle(cn));
                            const SolveResult pr =
                                min_dynamo(p, constant_threshold(p, t), budget);
                            const BoundReport ub = dyn_product_cycle_ub(d, cn, t);
                            if (pr.status == SolveStatus::solved && ub.applicable &&
                                pr.optimum > ub.certificate)
                                return bad(name, "cycle-ub violated");
                        }
                return ok(name, detail.str());
            });
        }
    }
    out.push_back(ok("sandwich coverage",
                     "complete-ub instances=" + std::to_string(complete_products) +
                         " naive-ub instances=" + std::to_string(naive_checks) +
                         " cycle-ub instances=" + std::to_string(cycle_products) +
                         " (cycle products exceed 16 vertices for 6..12-vertex bases)"));
    return out;
}

// ---------------------------------------------------------------------------
// 5. Threshold-decrement lemma on optimal dynamos
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> decrement_lemma(const CheckOptions& opt = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    SolveBudget budget;
    budget.threads = opt.threads;

    for (int i = 0; i < 30; ++i) {
        const int n = 6 + static_cast<int>(rng() % 7); // 6..12
        const Graph g = random_connected_graph(rng, n, n / 2 + 2, /*min_degree=*/2);
        const ThresholdAssignment tau = random_thresholds(rng, g, /*lo=*/2);
        const std::string name = "lemma(G" + std::to_string(i) + ",n=" + std::to_string(n) + ")";
        instance(out, name, [&]() -> CheckResult {
            const SolveResult r = min_dynamo(g, tau, budget);
            if (r.status != SolveStatus::solved) return bad(name, "solve failed");
            std::vector<int> lowered = tau.values();
            for (int& t : lowered) --t; // min tau >= 2, so this stays >= 1
            const ThresholdAssignment tau1 = explicit_thresholds(g, lowered);
            for (Vertex v : r.witness.ids()) {
                std::vector<Vertex> rest;
                for (Vertex u : r.witness.ids())
                    if (u != v) rest.push_back(u);
                if (!is_dynamic_monopoly(g, tau1, VertexSet::from_ids(g, rest)))
                    return bad(name, "D \\ {" + std::to_string(v) +
                                         "} is not a dynamo under tau-1");
            }
            const SolveResult r1 = min_dynamo(g, tau1, budget);
            if (r1.status != SolveStatus::solved) return bad(name, "lowered solve failed");
            if (r1.optimum > r.optimum - 1)
                return bad(name, "dyn_{tau-1} = " + std::to_string(r1.optimum) + " > " +
                                     std::to_string(r.optimum) + " - 1");
            return ok(name, "dyn=" + std::to_string(r.optimum) +
                                " dyn_lowered=" + std::to_string(r1.optimum));
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// 6. Line-graph identities: L(K_{n,n}) vs K_n [] K_n
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> line_graph_identities(const CheckOptions& opt = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    SolveBudget budget;
    budget.threads = opt.threads;

    for (int n = 2; n <= 5; ++n) {
        const std::string name = "L(K_{n,n})~KnxKn counts (n=" + std::to_string(n) + ")";
        instance(out, name, [&]() -> CheckResult {
            const Graph lg = line_graph(complete_bipartite(n, n));
            const Graph pg = cartesian_product(complete(n), complete(n));
            if (lg.vertex_count() != pg.vertex_count()) return bad(name, "vertex counts differ");
            if (lg.edge_count() != pg.edge_count()) return bad(name, "edge counts differ");
            if (lg.degree_sequence() != pg.degree_sequence())
                return bad(name, "degree sequences differ");
            return ok(name, std::to_string(lg.vertex_count()) + " vertices, " +
                                std::to_string(lg.edge_count()) + " edges");
        });
    }

    instance(out, "mon under simple majority agrees (n=3)", [&]() -> CheckResult {
        const std::string name = "mon under simple majority agrees (n=3)";
        const Graph lg = line_graph(complete_bipartite(3, 3));
        const Graph pg = cartesian_product(complete(3), complete(3));
        const SolveResult a = min_monopoly(lg, simple_majority(lg), budget);
        const SolveResult b = min_monopoly(pg, simple_majority(pg), budget);
        if (a.status != SolveStatus::solved || b.status != SolveStatus::solved)
            return bad(name, "solve failed");
        if (a.optimum != b.optimum)
            return bad(name, std::to_string(a.optimum) + " != " + std::to_string(b.optimum));
        const BoundReport lb = line_graph_majority_lb(6, 3);
        if (lb.certificate != 3)
            return bad(name, "lb(6,3) = " + lb.exact.str() + ", expected 3");
        if (a.optimum < lb.certificate) return bad(name, "optimum below lower bound");
        if (a.optimum != 3) return bad(name, "optimum " + std::to_string(a.optimum) + " != 3");
        return ok(name, "both optima 3, bound 3 tight");
    });
    return out;
}

// ---------------------------------------------------------------------------
// 7. Bound-formula regression
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> bound_regression(const CheckOptions& opt = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    SolveBudget budget;
    budget.threads = opt.threads;

    instance(out, "biregular lb at K3xK3, t=4", [&]() -> CheckResult {
        const std::string name = "biregular lb at K3xK3, t=4";
        const BoundReport r = biregular_line_lb(3, 3, 3, 3, 4);
        if (!r.applicable) return bad(name, r.reason);
        if (r.exact != Rational(6)) return bad(name, "value " + r.exact.str() + " != 6");
        const std::int64_t staircase = (4 / 2) * (4 / 2 + 1);
        if (r.certificate != staircase) return bad(name, "does not match staircase formula");
        return ok(name, "value 6 matches (t/2)(t/2+1)");
    });

    instance(out, "regular bipartite lb (n=6,r=3,t=2)", [&]() -> CheckResult {
        const std::string name = "regular bipartite lb (n=6,r=3,t=2)";
        const BoundReport r = regular_bipartite_line_lb(6, 3, 2);
        if (!r.applicable) return bad(name, r.reason);
        if (r.exact != Rational(2)) return bad(name, "value " + r.exact.str() + " != 2");
        const Graph lg = line_graph(complete_bipartite(3, 3));
        const SolveResult s = min_dynamo(lg, constant_threshold(lg, 2), budget);
        if (s.status != SolveStatus::solved) return bad(name, "solve failed");
        if (s.optimum < r.certificate)
            return bad(name, "dyn2(L(K_{3,3})) = " + std::to_string(s.optimum) + " below bound");
        return ok(name, "bound 2 <= optimum " + std::to_string(s.optimum));
    });
    return out;
}

// ---------------------------------------------------------------------------
// 8. Engine properties: schedule independence and seed monotonicity
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> engine_properties(const CheckOptions& opt = {}) {
    using namespace detail;
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed ^ 0xda3e39cb94b95bdbULL);

    for (int i = 0; i < 100; ++i) {
        const int n = 4 + static_cast<int>(rng() % 9); // 4..12
        const Graph g = random_connected_graph(rng, n, n / 2);
        const ThresholdAssignment tau = random_thresholds(rng, g, 1);
        const VertexSet seed = random_subset(rng, g, static_cast<int>(rng() % (n + 1)));
        const std::string name =
            "triple#" + std::to_string(i) + "(n=" + std::to_string(n) +
            ",seed=" + std::to_string(seed.size()) + ")";
        instance(out, name, [&]() -> CheckResult {
            const ActivationTrace trace = activate(g, tau, seed);
            if (!verify_trace(g, tau, trace)) return bad(name, "trace failed replay");
            const VertexSet async = async_fixed_point(rng, g, tau, seed);
            if (!(async == trace.activated))
                return bad(name, "async fixed point differs from synchronous rounds");
            // Monotonicity: growing the seed never shrinks the activated set.
            std::vector<Vertex> bigger = seed.ids();
            const VertexSet extra = random_subset(rng, g, static_cast<int>(rng() % (n + 1)));
            bigger.insert(bigger.end(), extra.ids().begin(), extra.ids().end());
            const ActivationTrace sup = activate(g, tau, VertexSet::from_ids(g, bigger));
            for (Vertex v : trace.activated.ids())
                if (!sup.activated.contains(v))
                    return bad(name, "superset seed lost vertex " + std::to_string(v));
            return ok(name, "activated=" + std::to_string(trace.activated.size()));
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& bundle_names() {
    static const std::vector<std::string> names{
        "construction-sweep", "figures",       "exactness-oracle",     "sandwich",
        "decrement-lemma",    "line-graph-identities", "bound-regression", "engine-properties"};
    return names;
}

inline std::vector<CheckResult> run_bundle(const std::string& name, const CheckOptions& opt = {}) {
    if (name == "construction-sweep") return construction_sweep(opt);
    if (name == "figures") return figures(opt);
    if (name == "exactness-oracle") return exactness_oracle(opt);
    if (name == "sandwich") return sandwich(opt);
    if (name == "decrement-lemma") return decrement_lemma(opt);
    if (name == "line-graph-identities") return line_graph_identities(opt);
    if (name == "bound-regression") return bound_regression(opt);
    if (name == "engine-properties") return engine_properties(opt);
    fail(errc::invalid_parameter, "unknown bundle \"" + name + "\"");
}

} // namespace monodyn::checks

#endif
