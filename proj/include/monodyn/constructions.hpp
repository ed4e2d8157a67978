#ifndef MONODYN_CONSTRUCTIONS_HPP
#define MONODYN_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monodyn/engine.hpp"
#include "monodyn/graph.hpp"
#include "monodyn/thresholds.hpp"

namespace monodyn {

enum class SetKind { monopoly, dynamo };

inline const char* to_string(SetKind k) {
    return k == SetKind::monopoly ? "monopoly" : "dynamo";
}

/// An explicit vertex-set construction on a product-graph instance, together
/// with the closed-form size it is claimed to have. Every constructor runs the
/// matching engine verifier before returning; a construction that fails
/// verification is a build error, not a silent result.
struct Construction {
    Graph graph;
    ThresholdAssignment threshold;
    VertexSet set;
    std::int64_t claimed_size = 0;
    SetKind kind = SetKind::monopoly;
    std::string theorem_tag;
    std::vector<std::pair<std::string, std::int64_t>> params;
};

namespace detail {

inline VertexSet grid_set(const Graph& g, const std::vector<std::pair<int, int>>& cells) {
    std::vector<Vertex> ids;
    ids.reserve(cells.size());
    for (auto [r, c] : cells) ids.push_back(vertex_at(g, GridCoord{r, c}));
    return VertexSet::from_ids(g, std::move(ids));
}

inline Construction checked(Construction c) {
    if (c.set.size() != c.claimed_size)
        fail(errc::construction_failed,
             c.theorem_tag + ": set has " + std::to_string(c.set.size()) +
                 " vertices, claimed " + std::to_string(c.claimed_size));
    bool ok = false;
    if (c.kind == SetKind::monopoly)
        ok = is_static_monopoly(c.graph, c.threshold, c.set).holds;
    else
        ok = is_dynamic_monopoly(c.graph, c.threshold, c.set);
    if (!ok)
        fail(errc::construction_failed,
             c.theorem_tag + ": constructed set failed engine verification");
    return c;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Monopolies
// ---------------------------------------------------------------------------

/// 2-monopoly of the torus C_n [] C_n built from anti-diagonal stripes
/// i+j = const (mod 3); for n not divisible by 3 the wrap seam is patched
/// with extra vertices in the last row and column.
inline Construction mon2_torus(int n) {
    if (n < 3) fail(errc::invalid_parameter, "mon2_torus requires n >= 3");
    Construction c;
    c.theorem_tag = "mon2-torus";
    c.kind = SetKind::monopoly;
    c.params = {{"n", n}};
    c.graph = cartesian_product(cycle(n), cycle(n));
    c.threshold = constant_threshold(c.graph, 2);

    std::vector<std::pair<int, int>> cells;
    const int r = n % 3;
    if (r == 0) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if ((i + j) % 3 == 1) cells.emplace_back(i, j);
        c.claimed_size = static_cast<std::int64_t>(n) * n / 3;
    } else if (r == 1) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if ((i + j) % 3 == 1) cells.emplace_back(i, j);
        for (int i = 1; i <= n - 3; i += 3) cells.emplace_back(i, n);
        for (int j = 1; j <= n - 3; j += 3) cells.emplace_back(n, j);
        c.claimed_size = static_cast<std::int64_t>(n - 1) * (n + 3) / 3;
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if ((i + j) % 3 == 0) cells.emplace_back(i, j);
        for (int i = 3; i <= n - 2; i += 3) cells.emplace_back(i, n);
        for (int j = 3; j <= n - 2; j += 3) cells.emplace_back(n, j);
        c.claimed_size = static_cast<std::int64_t>(n + 1) * (n + 1) / 3 - 1;
    }
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// t-monopoly of C_m [] K_n: alternating left/right row blocks. Regimes:
///   (a) t-1 <= n <= 2(t-2): blocks of t-2; for odd m the last row holds
///       2(n-t+2) vertices, which is only feasible when 2n >= 3(t-2);
///   (b) 2(t-2)+1 <= n <= 2t: complementary blocks of ceil(n/2)/floor(n/2),
///       odd m closing with t-1 vertices in the last row;
///   (c) n > 2t: t vertices per row.
inline Construction mon_cycle_complete(int m, int n, int t) {
    if (m < 3) fail(errc::invalid_parameter, "mon_cycle_complete requires m >= 3");
    if (n < 1 || t < 1) fail(errc::invalid_parameter, "mon_cycle_complete requires n, t >= 1");
    if (n < t - 1)
        fail(errc::unsupported_regime,
             "n < t-1 lies below every regime (nearest: regime (a) with n >= t-1)");

    Construction c;
    c.theorem_tag = "mon-cycle-complete";
    c.kind = SetKind::monopoly;
    c.params = {{"m", m}, {"n", n}, {"t", t}};

    std::vector<std::pair<int, int>> cells;
    auto row_block = [&cells](int row, int lo, int hi) {
        for (int j = lo; j <= hi; ++j) cells.emplace_back(row, j);
    };

    if (t - 1 <= n && n <= 2 * (t - 2)) { // regime (a)
        if (m % 2 == 0) {
            for (int i = 1; i <= m; ++i)
                if (i % 2 == 1)
                    row_block(i, 1, t - 2);
                else
                    row_block(i, n - t + 3, n);
            c.claimed_size = static_cast<std::int64_t>(m) * (t - 2);
        } else {
            if (2 * n < 3 * (t - 2))
                fail(errc::unsupported_regime,
                     "regime (a) with odd m needs 2n >= 3(t-2): the claimed size "
                     "(m-3)(t-2)+2n falls below the per-row lower bound m(t-2)");
            for (int i = 1; i <= m - 1; ++i)
                if (i % 2 == 1)
                    row_block(i, 1, t - 2);
                else
                    row_block(i, n - t + 3, n);
            row_block(m, 1, n - t + 2);
            row_block(m, t - 1, n);
            c.claimed_size = static_cast<std::int64_t>(m - 3) * (t - 2) + 2 * n;
        }
    } else if (2 * (t - 2) + 1 <= n && n <= 2 * t) { // regime (b)
        const int a = (n + 1) / 2;
        for (int i = 1; i <= (m % 2 == 0 ? m : m - 1); ++i)
            if (i % 2 == 1)
                row_block(i, 1, a);
            else
                row_block(i, a + 1, n);
        if (m % 2 == 0) {
            c.claimed_size = static_cast<std::int64_t>(m) * n / 2;
        } else {
            if (a == t - 1)
                row_block(m, 1, t - 1);
            else
                row_block(m, n - t + 2, n);
            c.claimed_size = static_cast<std::int64_t>(m - 1) * n / 2 + t - 1;
        }
    } else if (n > 2 * t) { // regime (c)
        for (int i = 1; i <= m; ++i) row_block(i, 1, t);
        c.claimed_size = static_cast<std::int64_t>(m) * t;
    } else {
        fail(errc::unsupported_regime, "parameters fall in no regime (nearest: regime (b) "
                                       "with 2(t-2)+1 <= n <= 2t)");
    }

    c.graph = cartesian_product(cycle(m), complete(n));
    c.threshold = constant_threshold(c.graph, t);
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// The main diagonal of K_n [] K_n: a 2-monopoly of size n.
inline Construction mon_diag(int n) {
    if (n < 2) fail(errc::invalid_parameter, "mon_diag requires n >= 2");
    Construction c;
    c.theorem_tag = "mon-diag";
    c.kind = SetKind::monopoly;
    c.params = {{"n", n}};
    c.graph = cartesian_product(complete(n), complete(n));
    c.threshold = constant_threshold(c.graph, 2);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i) cells.emplace_back(i, i);
    c.claimed_size = n;
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// All k blocks of size t/2 x t/2 on the main diagonal of K_n [] K_n with
/// n = k t/2: a t-monopoly of size k t^2/4. k = 1 makes t exceed the degree
/// 2n-2 and is rejected by the threshold constructor.
inline Construction mon_block_diag(int k, int t) {
    if (k < 1) fail(errc::invalid_parameter, "mon_block_diag requires k >= 1");
    if (t < 2 || t % 2 != 0)
        fail(errc::invalid_parameter, "mon_block_diag requires even t >= 2");
    const int half = t / 2;
    const int n = k * half;
    Construction c;
    c.theorem_tag = "mon-block-diag";
    c.kind = SetKind::monopoly;
    c.params = {{"k", k}, {"t", t}};
    c.graph = cartesian_product(complete(n), complete(n));
    c.threshold = constant_threshold(c.graph, t);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if ((i - 1) / half == (j - 1) / half) cells.emplace_back(i, j);
    c.claimed_size = static_cast<std::int64_t>(k) * t * t / 4;
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// Complement of the diagonal blocks: a (2n-t)-monopoly of size k(k-1)t^2/4.
inline Construction mon_block_complement(int k, int t) {
    if (k < 1) fail(errc::invalid_parameter, "mon_block_complement requires k >= 1");
    if (t < 2 || t % 2 != 0)
        fail(errc::invalid_parameter, "mon_block_complement requires even t >= 2");
    const int half = t / 2;
    const int n = k * half;
    Construction c;
    c.theorem_tag = "mon-block-complement";
    c.kind = SetKind::monopoly;
    c.params = {{"k", k}, {"t", t}};
    c.graph = cartesian_product(complete(n), complete(n));
    c.threshold = constant_threshold(c.graph, 2 * n - t);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if ((i - 1) / half != (j - 1) / half) cells.emplace_back(i, j);
    c.claimed_size = static_cast<std::int64_t>(k) * (k - 1) * t * t / 4;
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// Circulant pattern on K_n [] K_n for odd n: row i holds the (n-1)/2 columns
/// following i cyclically. An (n-1)-monopoly of size n(n-1)/2, matching the
/// line-graph lower bound.
inline Construction mon_circulant(int n) {
    if (n < 3 || n % 2 == 0)
        fail(errc::invalid_parameter, "mon_circulant requires odd n >= 3");
    Construction c;
    c.theorem_tag = "mon-circulant";
    c.kind = SetKind::monopoly;
    c.params = {{"n", n}};
    c.graph = cartesian_product(complete(n), complete(n));
    c.threshold = constant_threshold(c.graph, n - 1);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i)
        for (int d = 1; d <= (n - 1) / 2; ++d) cells.emplace_back(i, (i - 1 + d) % n + 1);
    c.claimed_size = static_cast<std::int64_t>(n) * (n - 1) / 2;
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

// ---------------------------------------------------------------------------
// Dynamic monopolies
// ---------------------------------------------------------------------------

/// 2-dynamo of C_n [] K_n of size floor(n/2 + 1): the odd diagonal, with the
/// corner v_nn added for even n.
inline Construction dyn_cycle_complete_t2(int n) {
    if (n < 3) fail(errc::invalid_parameter, "dyn_cycle_complete_t2 requires n >= 3");
    Construction c;
    c.theorem_tag = "dyn-cycle-complete-t2";
    c.kind = SetKind::dynamo;
    c.params = {{"n", n}};
    c.graph = cartesian_product(cycle(n), complete(n));
    c.threshold = constant_threshold(c.graph, 2);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; i += 2) cells.emplace_back(i, i);
    if (n % 2 == 0) cells.emplace_back(n, n);
    c.claimed_size = n / 2 + 1;
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// 3-dynamo of C_n [] K_n of size n+1: the full diagonal plus v_{2n}.
inline Construction dyn_cycle_complete_t3(int n) {
    if (n < 3) fail(errc::invalid_parameter, "dyn_cycle_complete_t3 requires n >= 3");
    Construction c;
    c.theorem_tag = "dyn-cycle-complete-t3";
    c.kind = SetKind::dynamo;
    c.params = {{"n", n}};
    c.graph = cartesian_product(cycle(n), complete(n));
    c.threshold = constant_threshold(c.graph, 3);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i) cells.emplace_back(i, i);
    cells.emplace_back(2, n);
    c.claimed_size = n + 1;
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// t-dynamo of C_m [] K_n of size m(t-2) for t >= 4, n >= t-1: alternating
/// left/right blocks of t-2 per row; for odd m the last row is split into
/// ceil((t-2)/2) left plus floor((t-2)/2) right vertices.
inline Construction dyn_cycle_complete_t(int m, int n, int t) {
    if (m < 3) fail(errc::invalid_parameter, "dyn_cycle_complete_t requires m >= 3");
    if (t < 4)
        fail(errc::unsupported_regime,
             "t must be at least 4 (thresholds 2 and 3 have their own families)");
    if (n < t - 1) fail(errc::unsupported_regime, "requires n >= t-1");
    Construction c;
    c.theorem_tag = "dyn-cycle-complete-t";
    c.kind = SetKind::dynamo;
    c.params = {{"m", m}, {"n", n}, {"t", t}};
    c.graph = cartesian_product(cycle(m), complete(n));
    c.threshold = constant_threshold(c.graph, t);
    std::vector<std::pair<int, int>> cells;
    auto row_block = [&cells](int row, int lo, int hi) {
        for (int j = lo; j <= hi; ++j) cells.emplace_back(row, j);
    };
    const int b = t - 2;
    const int last_odd = (m % 2 == 0) ? m : m - 2;
    for (int i = 1; i <= last_odd; i += 2) row_block(i, 1, b);
    for (int i = 2; i <= m; i += 2) row_block(i, n - b + 1, n);
    if (m % 2 == 1) {
        row_block(m, 1, (b + 1) / 2);
        row_block(m, n - b / 2 + 1, n);
    }
    c.claimed_size = static_cast<std::int64_t>(m) * b;
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// t-dynamo of K_{1,n} [] K_{1,n} for 3 <= t <= n: all n^2 leaf-leaf vertices.
/// Their degree is 2 < t, so they can never be activated and every t-dynamo
/// must contain them; the threshold assignment is built without the degree
/// check for that reason.
inline Construction dyn_star_star(int n, int t) {
    if (n < 3) fail(errc::invalid_parameter, "dyn_star_star requires n >= 3");
    if (t < 3 || t > n)
        fail(errc::unsupported_regime, "requires 3 <= t <= n");
    Construction c;
    c.theorem_tag = "dyn-star-star";
    c.kind = SetKind::dynamo;
    c.params = {{"n", n}, {"t", t}};
    c.graph = cartesian_product(star(n), star(n));
    c.threshold = ThresholdAssignment::uniform(c.graph.vertex_count(), t);
    std::vector<std::pair<int, int>> cells;
    for (int i = 2; i <= n + 1; ++i) // grid row/col 1 is the star center
        for (int j = 2; j <= n + 1; ++j) cells.emplace_back(i, j);
    c.claimed_size = static_cast<std::int64_t>(n) * n;
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// Staircase t-dynamo of K_m [] K_n of size ceil(t/2)^2 (odd t) or
/// (t/2)(t/2+1) (even t): one descending arm against the last column and one
/// against the last row. Requires m, n >= ceil(t/2) for the arms to fit.
inline Construction dyn_complete_complete(int m, int n, int t) {
    if (m < 1 || n < 1 || t < 1)
        fail(errc::invalid_parameter, "dyn_complete_complete requires m, n, t >= 1");
    if (t > m + n - 2) fail(errc::unsupported_regime, "requires t <= m+n-2");
    const int s = t / 2;
    const int need = (t + 1) / 2;
    if (m < need || n < need)
        fail(errc::unsupported_regime,
             "staircase arms need m, n >= ceil(t/2); for m < t/2 use the small-m family");
    Construction c;
    c.theorem_tag = "dyn-complete-complete";
    c.kind = SetKind::dynamo;
    c.params = {{"m", m}, {"n", n}, {"t", t}};
    c.graph = cartesian_product(complete(m), complete(n));
    c.threshold = constant_threshold(c.graph, t);
    std::vector<std::pair<int, int>> cells;
    if (t % 2 == 1) {
        for (int i = 1; i <= s + 1; ++i)
            for (int j = n - s + i - 1; j <= n; ++j) cells.emplace_back(i, j);
        for (int j = 1; j <= s; ++j)
            for (int i = m - s + j; i <= m; ++i) cells.emplace_back(i, j);
        c.claimed_size = static_cast<std::int64_t>(s + 1) * (s + 1);
    } else {
        for (int i = 1; i <= s; ++i)
            for (int j = n - s + i; j <= n; ++j) cells.emplace_back(i, j);
        for (int j = 1; j <= s; ++j)
            for (int i = m - s + j; i <= m; ++i) cells.emplace_back(i, j);
        c.claimed_size = static_cast<std::int64_t>(s) * (s + 1);
    }
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

/// t-dynamo of K_m [] K_n of size m(t-m+1) in the thin regime m < t/2,
/// n > t-m+1: descending bottom picks in the first m-1 columns plus
/// descending right-side picks per row.
inline Construction dyn_complete_complete_small_m(int m, int n, int t) {
    if (m < 1 || n < 1 || t < 1)
        fail(errc::invalid_parameter, "dyn_complete_complete_small_m requires m, n, t >= 1");
    if (!(2 * m < t)) fail(errc::unsupported_regime, "requires m < t/2");
    if (!(n > t - m + 1)) fail(errc::unsupported_regime, "requires n > t-m+1");
    if (t > m + n - 2) fail(errc::unsupported_regime, "requires t <= m+n-2");
    Construction c;
    c.theorem_tag = "dyn-complete-complete-small-m";
    c.kind = SetKind::dynamo;
    c.params = {{"m", m}, {"n", n}, {"t", t}};
    c.graph = cartesian_product(complete(m), complete(n));
    c.threshold = constant_threshold(c.graph, t);
    std::vector<std::pair<int, int>> cells;
    for (int j = 1; j <= m - 1; ++j) // m-j bottom vertices of column j
        for (int i = j + 1; i <= m; ++i) cells.emplace_back(i, j);
    for (int i = 1; i <= m - 1; ++i) // t-m+2-i right-side vertices of row i
        for (int j = n - t + m - 1 + i; j <= n; ++j) cells.emplace_back(i, j);
    for (int j = n - t + 2 * m - 1; j <= n; ++j) cells.emplace_back(m, j);
    c.claimed_size = static_cast<std::int64_t>(m) * (t - m + 1);
    c.set = detail::grid_set(c.graph, cells);
    return detail::checked(std::move(c));
}

} // namespace monodyn

#endif
