#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "monodyn/checks.hpp"
#include "monodyn/solver.hpp"

using namespace monodyn;

namespace {

// Independent test-side enumerator: checks every k-subset against the engine
// predicates directly, with none of the solver's ordering or pruning.
bool any_subset_verifies(const Graph& g, const ThresholdAssignment& tau, int k, SetKind kind) {
    const int n = g.vertex_count();
    std::vector<Vertex> pick;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(pick.size()) == k) {
            const VertexSet s = VertexSet::from_ids(g, pick);
            return kind == SetKind::monopoly ? is_static_monopoly(g, tau, s).holds
                                             : is_dynamic_monopoly(g, tau, s);
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            if (rec(v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace

TEST_CASE("single vertex dominates K3 at threshold 1") {
    const Graph g = complete(3);
    const SolveResult r = min_monopoly(g, constant_threshold(g, 1));
    REQUIRE(r.status == SolveStatus::solved);
    CHECK(r.optimum == 1);
    CHECK(r.witness.ids() == std::vector<Vertex>{0}); // lexicographically first witness
}

TEST_CASE("witnesses re-verify and are minimal") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 12; ++rep) {
        const int n = 5 + static_cast<int>(rng() % 8); // 5..12
        const Graph g = checks::random_connected_graph(rng, n, n / 2);
        const auto tau = checks::random_thresholds(rng, g, 1);

        const SolveResult mono = min_monopoly(g, tau);
        REQUIRE(mono.status == SolveStatus::solved);
        CHECK(is_static_monopoly(g, tau, mono.witness).holds);
        if (mono.optimum > 1)
            CHECK_FALSE(any_subset_verifies(g, tau, mono.optimum - 1, SetKind::monopoly));

        const SolveResult dyn = min_dynamo(g, tau);
        REQUIRE(dyn.status == SolveStatus::solved);
        CHECK(is_dynamic_monopoly(g, tau, dyn.witness));
        if (dyn.optimum > 1)
            CHECK_FALSE(any_subset_verifies(g, tau, dyn.optimum - 1, SetKind::dynamo));

        CHECK(dyn.optimum <= mono.optimum); // every static monopoly is a dynamo
    }
}

TEST_CASE("pruned search agrees with the plain one") {
    std::mt19937_64 rng(103);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 5 + static_cast<int>(rng() % 8);
        const Graph g = checks::random_connected_graph(rng, n, n / 2);
        const auto tau = checks::random_thresholds(rng, g, 1);
        const SolveResult plain = min_dynamo(g, tau);
        REQUIRE(plain.status == SolveStatus::solved);
        // lb = 1 degenerates to the plain search; lb = optimum is the
        // tightest bound a correct bounds module could hand over.
        const SolveResult lb1 = min_dynamo_lb_pruned(g, tau, 1);
        const SolveResult lbo = min_dynamo_lb_pruned(g, tau, plain.optimum);
        CHECK(lb1.optimum == plain.optimum);
        CHECK(lbo.optimum == plain.optimum);
        CHECK(lb1.witness == plain.witness);
        CHECK(lbo.witness == plain.witness);
        CHECK(lbo.explored <= plain.explored);
    }
}

TEST_CASE("pruning from the even-t staircase bound") {
    // dyn_4(K3 [] K3) = 6 = (t/2)(t/2+1); starting there explores only size-6 subsets
    const Graph g = cartesian_product(complete(3), complete(3));
    const auto tau = constant_threshold(g, 4);
    const SolveResult pruned = min_dynamo_lb_pruned(g, tau, 6);
    const SolveResult plain = min_dynamo(g, tau);
    REQUIRE(pruned.status == SolveStatus::solved);
    CHECK(pruned.optimum == 6);
    CHECK(plain.optimum == 6);
    CHECK(pruned.explored < plain.explored);
}

TEST_CASE("optimum is monotone in the thresholds") {
    std::mt19937_64 rng(107);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 5 + static_cast<int>(rng() % 6);
        const Graph g = checks::random_connected_graph(rng, n, n / 2, /*min_degree=*/2);
        const auto tau_low = constant_threshold(g, 1);
        const auto tau_high = constant_threshold(g, 2);
        CHECK(min_dynamo(g, tau_low).optimum <= min_dynamo(g, tau_high).optimum);
        CHECK(min_monopoly(g, tau_low).optimum <= min_monopoly(g, tau_high).optimum);
    }
}

TEST_CASE("budget exhaustion yields an inconclusive result with bounds") {
    const Graph g = cartesian_product(cycle(5), complete(5));
    const auto tau = constant_threshold(g, 2);
    SolveBudget tiny;
    tiny.max_candidates = 10; // nowhere near C(25, <=2)
    const SolveResult r = min_dynamo(g, tau, tiny);
    CHECK(r.status == SolveStatus::inconclusive);
    CHECK(r.lower_bound >= 1);
    CHECK_FALSE(r.upper_bound.has_value());
    CHECK(r.explored <= 2048 + 10); // budget checked in blocks
}

TEST_CASE("parallel search returns the sequential answer") {
    std::mt19937_64 rng(109);
    for (int rep = 0; rep < 6; ++rep) {
        const int n = 6 + static_cast<int>(rng() % 6);
        const Graph g = checks::random_connected_graph(rng, n, n / 2);
        const auto tau = checks::random_thresholds(rng, g, 1);
        SolveBudget par;
        par.threads = 4;
        const SolveResult a = min_dynamo(g, tau);
        const SolveResult b = min_dynamo(g, tau, par);
        REQUIRE(b.status == SolveStatus::solved);
        CHECK(a.optimum == b.optimum);
        CHECK(a.witness == b.witness);
    }
    const Graph g = cartesian_product(cycle(4), complete(4));
    SolveBudget par;
    par.threads = 3;
    CHECK(min_dynamo(g, constant_threshold(g, 2), par).optimum == 3);
}

TEST_CASE("solver confirms the smallest cycle-complete dynamo") {
    const Graph g = cartesian_product(cycle(3), complete(3));
    CHECK(min_dynamo(g, constant_threshold(g, 2)).optimum == 2);
}
