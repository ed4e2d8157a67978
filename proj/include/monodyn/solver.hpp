#ifndef MONODYN_SOLVER_HPP
#define MONODYN_SOLVER_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "monodyn/engine.hpp"
#include "monodyn/graph.hpp"
#include "monodyn/thresholds.hpp"

namespace monodyn {

/// Caps on the exhaustive search. The search is exponential; exceeding a cap
/// yields an inconclusive result instead of running forever.
struct SolveBudget {
    std::uint64_t max_candidates = std::numeric_limits<std::uint64_t>::max();
    std::chrono::milliseconds max_time{std::chrono::milliseconds::max()};
    int threads = 1;
};

enum class SolveStatus { solved, inconclusive };

struct SolveResult {
    SolveStatus status = SolveStatus::inconclusive;
    int optimum = -1;    // meaningful when solved
    VertexSet witness;   // a minimum verifying set when solved
    std::uint64_t explored = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
    int lower_bound = 0; // optimum >= lower_bound is proven either way
    std::optional<int> upper_bound; // size of best verifying set found, if any
};

namespace detail {

struct SolveScratch {
    std::vector<char> mask;
    std::vector<int> cnt;
    std::vector<Vertex> queue;

    explicit SolveScratch(int n)
        : mask(static_cast<std::size_t>(n), 0), cnt(static_cast<std::size_t>(n), 0) {
        queue.reserve(static_cast<std::size_t>(n));
    }
};

/// Queue-based activation; reaches the same fixed point as the synchronous engine.
inline bool dynamo_holds(const Graph& g, const ThresholdAssignment& tau,
                         const std::vector<Vertex>& seed, SolveScratch& ws) {
    const int n = g.vertex_count();
    std::fill(ws.mask.begin(), ws.mask.end(), 0);
    std::fill(ws.cnt.begin(), ws.cnt.end(), 0);
    ws.queue.clear();
    int active = 0;
    for (Vertex v : seed) {
        ws.mask[static_cast<std::size_t>(v)] = 1;
        ++active;
        ws.queue.push_back(v);
    }
    for (std::size_t head = 0; head < ws.queue.size(); ++head) {
        const Vertex u = ws.queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (ws.mask[static_cast<std::size_t>(w)]) continue;
            if (++ws.cnt[static_cast<std::size_t>(w)] >= tau(w)) {
                ws.mask[static_cast<std::size_t>(w)] = 1;
                ++active;
                ws.queue.push_back(w);
            }
        }
    }
    return active == n;
}

inline bool monopoly_holds(const Graph& g, const ThresholdAssignment& tau,
                           const std::vector<Vertex>& members,
                           const std::vector<Vertex>& forced, SolveScratch& ws) {
    std::fill(ws.mask.begin(), ws.mask.end(), 0);
    for (Vertex v : members) ws.mask[static_cast<std::size_t>(v)] = 1;
    // Cheap rejection: a vertex with tau(v) = deg(v) needs all neighbors in M
    // unless it is in M itself.
    for (Vertex f : forced) {
        if (ws.mask[static_cast<std::size_t>(f)]) continue;
        for (Vertex w : g.neighbors(f))
            if (!ws.mask[static_cast<std::size_t>(w)]) return false;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (ws.mask[static_cast<std::size_t>(v)]) continue;
        int hits = 0;
        const auto& nb = g.neighbors(v);
        const int need = tau(v);
        for (Vertex w : nb)
            if (ws.mask[static_cast<std::size_t>(w)] && ++hits >= need) break;
        if (hits < need) return false;
    }
    return true;
}

/// Enumerates k-subsets of {first+1, ..., n-1} prefixed by `first`, in
/// lexicographic order, until `pred` accepts one or the block is exhausted.
/// Returns the accepted subset through `out`.
template <typename Pred, typename Tick>
inline bool scan_block(int n, int k, Vertex first, Pred&& pred, Tick&& tick,
                       std::vector<Vertex>& out) {
    std::vector<Vertex> c(static_cast<std::size_t>(k));
    c[0] = first;
    for (int i = 1; i < k; ++i) c[static_cast<std::size_t>(i)] = first + i;
    if (c.back() >= n) return false;
    while (true) {
        if (!tick()) return false;
        if (pred(c)) {
            out = c;
            return true;
        }
        // advance positions 1..k-1; position 0 is pinned
        int i = k - 1;
        while (i >= 1 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 1) return false;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

template <typename CheckFactory>
inline SolveResult solve_min(const Graph& g, const ThresholdAssignment& tau, int start_k,
                             const SolveBudget& budget, CheckFactory&& make_check) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    SolveResult result;
    if (tau.size() != n) fail(errc::invalid_parameter, "threshold assignment size mismatch");

    if (n == 0) {
        result.status = SolveStatus::solved;
        result.optimum = 0;
        result.elapsed = std::chrono::steady_clock::now() - t0;
        return result;
    }

    std::atomic<std::uint64_t> explored{0};
    std::atomic<bool> out_of_budget{false};
    const auto deadline = (budget.max_time == std::chrono::milliseconds::max())
                              ? std::chrono::steady_clock::time_point::max()
                              : t0 + budget.max_time;

    const int threads = std::max(1, budget.threads);
    start_k = std::max(1, start_k);

    for (int k = start_k; k <= n; ++k) {
        std::atomic<int> best_first{n}; // smallest block index with a hit so far
        std::vector<std::vector<Vertex>> hits(static_cast<std::size_t>(n));
        std::atomic<int> next_block{0};
        const int last_first = n - k;

        auto worker = [&]() {
            auto check = make_check();
            std::uint64_t local = 0;
            auto tick = [&]() -> bool {
                ++local;
                if ((local & 1023u) == 0) {
                    const std::uint64_t total = explored.fetch_add(1024) + 1024;
                    if (total > budget.max_candidates ||
                        std::chrono::steady_clock::now() >= deadline) {
                        out_of_budget.store(true);
                        return false;
                    }
                    local = 0;
                }
                return !out_of_budget.load(std::memory_order_relaxed);
            };
            while (true) {
                const int f = next_block.fetch_add(1);
                if (f > last_first) break;
                if (f > best_first.load()) continue; // a lexicographically smaller hit exists
                // settle the candidate count and the budget at block boundaries
                const std::uint64_t total = explored.fetch_add(local) + local;
                local = 0;
                if (total > budget.max_candidates ||
                    std::chrono::steady_clock::now() >= deadline)
                    out_of_budget.store(true);
                if (out_of_budget.load()) break;
                std::vector<Vertex> found;
                if (scan_block(n, k, f, check, tick, found)) {
                    hits[static_cast<std::size_t>(f)] = std::move(found);
                    int cur = best_first.load();
                    while (f < cur && !best_first.compare_exchange_weak(cur, f)) {
                    }
                }
            }
            explored.fetch_add(local);
        };

        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(threads));
            for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        result.explored = explored.load();
        const int bf = best_first.load();
        if (bf < n) {
            // All levels below k were exhausted, so k is the optimum even if
            // the budget fired part-way through this level.
            result.status = SolveStatus::solved;
            result.optimum = k;
            result.lower_bound = k;
            result.upper_bound = k;
            result.witness =
                VertexSet::from_sorted_unchecked(std::move(hits[static_cast<std::size_t>(bf)]));
            result.elapsed = std::chrono::steady_clock::now() - t0;
            return result;
        }
        if (out_of_budget.load()) {
            // Level k incomplete and hitless: only optimum >= k is proven.
            result.lower_bound = k;
            result.status = SolveStatus::inconclusive;
            result.elapsed = std::chrono::steady_clock::now() - t0;
            return result;
        }
        result.lower_bound = k + 1; // level k fully exhausted without a hit
    }

    // Unreachable for meaningful inputs: the full vertex set always verifies.
    result.status = SolveStatus::inconclusive;
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

} // namespace detail

/// Exact minimum tau-monopoly by cardinality-ascending exhaustive search.
inline SolveResult min_monopoly(const Graph& g, const ThresholdAssignment& tau,
                                const SolveBudget& budget = {}) {
    std::vector<Vertex> forced;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (tau(v) >= g.degree(v)) forced.push_back(v);
    return detail::solve_min(g, tau, 1, budget, [&] {
        return [&g, &tau, &forced,
                ws = detail::SolveScratch(g.vertex_count())](const std::vector<Vertex>& c) mutable {
            return detail::monopoly_holds(g, tau, c, forced, ws);
        };
    });
}

/// Exact minimum tau-dynamic monopoly, optionally starting the cardinality
/// scan at a caller-supplied lower bound (which must not exceed the optimum).
inline SolveResult min_dynamo_lb_pruned(const Graph& g, const ThresholdAssignment& tau, int lb,
                                        const SolveBudget& budget = {}) {
    return detail::solve_min(g, tau, lb, budget, [&] {
        return [&g, &tau,
                ws = detail::SolveScratch(g.vertex_count())](const std::vector<Vertex>& c) mutable {
            return detail::dynamo_holds(g, tau, c, ws);
        };
    });
}

inline SolveResult min_dynamo(const Graph& g, const ThresholdAssignment& tau,
                              const SolveBudget& budget = {}) {
    return min_dynamo_lb_pruned(g, tau, 1, budget);
}

} // namespace monodyn

#endif
