#include <catch2/catch_amalgamated.hpp>

#include "monodyn/bounds.hpp"
#include "monodyn/constructions.hpp"
#include "monodyn/rational.hpp"
#include "monodyn/solver.hpp"

using namespace monodyn;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, 2).floor() == 1);
    CHECK(Rational(3, 2).ceil() == 2);
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(-3, 2).ceil() == -1);
    CHECK((Rational(1, 2) + Rational(1, 4)) == Rational(3, 4));
    CHECK((Rational(5, 2) * Rational(5, 2)) == Rational(25, 4));
    CHECK(Rational(7).is_integer());
    CHECK(Rational(7, 2).str() == "7/2");
}

TEST_CASE("line graph majority lower bound") {
    const BoundReport a = line_graph_majority_lb(6, 3);
    CHECK(a.applicable);
    CHECK(a.exact == Rational(3)); // n(k-1)/4, integral for odd k
    CHECK(a.certificate == 3);

    const BoundReport b = line_graph_majority_lb(4, 2); // L(C4) = C4, majority 1
    CHECK(b.exact == Rational(1));
    CHECK(b.certificate == 1);
    {
        // L(C4) = C4; its majority-1 monopolies are dominating sets, and the
        // domination number of C4 is 2, safely above the bound.
        const Graph c4 = cycle(4);
        const SolveResult r = min_monopoly(c4, constant_threshold(c4, 1));
        CHECK(r.optimum == 2);
        CHECK(r.optimum >= b.certificate);
    }

    CHECK_THROWS_AS(line_graph_majority_lb(5, 3), Error); // nk odd
    CHECK_THROWS_AS(line_graph_majority_lb(3, 3), Error); // k > n-1
}

TEST_CASE("cycle product upper bound") {
    CHECK(dyn_product_cycle_ub(3, 5, 2).certificate == 6);  // n+d-2
    CHECK(dyn_product_cycle_ub(3, 5, 3).certificate == 9);  // nd-(n+d)+2
    CHECK(dyn_product_cycle_ub(4, 4, 4).certificate == 12); // d+(n-2)(d-1)+d-2
    CHECK_FALSE(dyn_product_cycle_ub(3, 5, 1).applicable);

    // against solver optima on small products
    {
        const Graph k4 = complete(4);
        const int d2 = min_dynamo(k4, constant_threshold(k4, 2)).optimum;
        const Graph p = cartesian_product(k4, cycle(4));
        const SolveResult r = min_dynamo(p, constant_threshold(p, 2));
        REQUIRE(r.status == SolveStatus::solved);
        CHECK(r.optimum <= dyn_product_cycle_ub(d2, 4, 2).certificate);
    }
    {
        const Graph k4 = complete(4);
        const int d3 = min_dynamo(k4, constant_threshold(k4, 3)).optimum;
        const Graph p = cartesian_product(k4, cycle(3));
        const SolveResult r = min_dynamo(p, constant_threshold(p, 3));
        REQUIRE(r.status == SolveStatus::solved);
        CHECK(r.optimum <= dyn_product_cycle_ub(d3, 3, 3).certificate);
    }
    {
        const Graph k5 = complete(5);
        const int d4 = min_dynamo(k5, constant_threshold(k5, 4)).optimum;
        const Graph p = cartesian_product(k5, cycle(3));
        const SolveResult r = min_dynamo(p, constant_threshold(p, 4));
        REQUIRE(r.status == SolveStatus::solved);
        CHECK(r.optimum <= dyn_product_cycle_ub(d4, 3, 4).certificate);
    }
}

TEST_CASE("complete product upper bound") {
    CHECK(dyn_product_complete_ub(4, 3).certificate == 8);
    CHECK(dyn_product_complete_ub(2, 2).certificate == 3); // 4 - (-1) - 2
    CHECK(dyn_product_complete_ub(3, 3).certificate == 6);
    CHECK_FALSE(dyn_product_complete_ub(1, 3).applicable); // d < t-1

    // d = dyn_3(K4) = 3; bound 6 holds against dyn_3(K4 [] K5) = 4
    const Graph k4 = complete(4);
    const int d = min_dynamo(k4, constant_threshold(k4, 3)).optimum;
    CHECK(d == 3);
    const Graph p = cartesian_product(complete(4), complete(5));
    const SolveResult r = min_dynamo(p, constant_threshold(p, 3));
    REQUIRE(r.status == SolveStatus::solved);
    CHECK(r.optimum == 4); // staircase value ceil(3/2)^2
    CHECK(r.optimum <= dyn_product_complete_ub(d, 3).certificate);
}

TEST_CASE("naive and improved product bounds") {
    CHECK(dyn_product_naive_ub(3, 4).certificate == 12);
    CHECK(dyn_product_naive_ub(1, 7).certificate == 7);

    const BoundReport imp = dyn_product_improved_ub(4, 4);
    CHECK(imp.exact == Rational(14));
    const BoundReport frac = dyn_product_improved_ub(2, 3);
    CHECK(frac.exact == Rational(9, 2));
    CHECK(frac.certificate == 4); // floor certificate, dynamo sizes are integers
    CHECK_FALSE(dyn_product_improved_ub(5, 4).applicable); // dg > dh
}

TEST_CASE("star corollary bound and its hypothesis sensitivity") {
    CHECK(dyn_product_star_corollary_ub(3, 4).certificate == 8);
    CHECK(dyn_product_star_corollary_ub(1, 5).certificate == 1); // clamped

    // For K_{1,n} [] K_{1,n} at t in [3, n] the true value is n^2, which
    // exceeds n^2 - n: the star hypothesis cannot hold for the double star
    // (its minimum dynamo, the leaf set, induces no edges at all).
    const Construction ss = dyn_star_star(3, 3);
    CHECK(ss.claimed_size > dyn_product_star_corollary_ub(3, 3).certificate);
}

TEST_CASE("clique corollary bound") {
    CHECK(dyn_product_clique_corollary_ub(4, 3).certificate == 8);
    CHECK(dyn_product_clique_corollary_ub(5, 4).certificate == 13);
    CHECK(dyn_product_clique_corollary_ub(2, 3).certificate == 4); // g = t-1 boundary
    CHECK_FALSE(dyn_product_clique_corollary_ub(2, 4).applicable);
}

TEST_CASE("corollary dominance chain") {
    for (int dg = 1; dg <= 6; ++dg)
        for (int dh = std::max(dg, 2); dh <= 8; ++dh) {
            const auto star_b = dyn_product_star_corollary_ub(dg, dh);
            const auto imp = dyn_product_improved_ub(dg, dh);
            const auto naive = dyn_product_naive_ub(dg, dh);
            REQUIRE(imp.applicable);
            CHECK(star_b.certificate <= imp.certificate);
            CHECK(imp.certificate <= naive.certificate);
        }
}

TEST_CASE("regular bipartite line lower bound") {
    const BoundReport r = regular_bipartite_line_lb(6, 3, 2);
    CHECK(r.applicable);
    CHECK(r.exact == Rational(2)); // eps = 0 (n-2r+t+1 = 3 is odd)

    const BoundReport q = regular_bipartite_line_lb(6, 3, 3);
    CHECK(q.exact == Rational(4)); // 15/4 plus eps = 1/4
    {
        const Graph lg = line_graph(complete_bipartite(3, 3));
        const SolveResult s = min_dynamo(lg, constant_threshold(lg, 3));
        REQUIRE(s.status == SolveStatus::solved);
        CHECK(s.optimum == 4); // bound is tight here
    }

    CHECK_FALSE(regular_bipartite_line_lb(6, 3, 5).applicable); // t > 2r-2
    CHECK_THROWS_AS(regular_bipartite_line_lb(5, 3, 2), Error); // nr odd
}

TEST_CASE("biregular line lower bound") {
    // worked corner: K3 [] K3 at t = 4 must reproduce the staircase value
    const BoundReport r = biregular_line_lb(3, 3, 3, 3, 4);
    CHECK(r.applicable);
    CHECK(r.exact == Rational(6));

    // t = 3 corner: m+n+1+t-r1-r2 = 4 is even, phi = 0, and the bound
    // ((t+1)/2)^2 = 4 is tight against dyn_3(K3 [] K3)
    const BoundReport v = biregular_line_lb(3, 3, 3, 3, 3);
    CHECK(v.exact == Rational(4));

    // complete-bipartite substitution r1 = n, r2 = m reproduces the
    // K_m [] K_n staircase values
    for (int m = 2; m <= 5; ++m)
        for (int n = m; n <= 6; ++n)
            for (int t = 1; t <= m + n - 2; ++t) {
                const BoundReport b = biregular_line_lb(m, n, n, m, t);
                REQUIRE(b.applicable);
                const std::int64_t staircase =
                    (t % 2 == 1) ? static_cast<std::int64_t>((t + 1) / 2) * ((t + 1) / 2)
                                 : static_cast<std::int64_t>(t / 2) * (t / 2 + 1);
                CHECK(b.exact == Rational(staircase));
            }

    CHECK_THROWS_AS(biregular_line_lb(3, 4, 3, 3, 2), Error); // m r1 != n r2
    CHECK_FALSE(biregular_line_lb(3, 3, 3, 3, 5).applicable);
    CHECK(biregular_line_lb(3, 3, 3, 3, 4).note.find("typo") != std::string::npos);
}

TEST_CASE("small-m exact value") {
    CHECK(small_m_exact(2, 5, 5).exact == Rational(8));
    CHECK(small_m_exact(1, 5, 3).exact == Rational(3)); // dyn_3(K5) via K1 [] K5
    CHECK(small_m_exact(2, 5, 5).direction == BoundDirection::exact);
    CHECK_FALSE(small_m_exact(3, 9, 5).applicable);
    CHECK_FALSE(small_m_exact(2, 4, 5).applicable);

    // solver cross-checks
    {
        const Graph p = cartesian_product(complete(2), complete(5));
        CHECK(min_dynamo(p, constant_threshold(p, 5)).optimum == 8);
        const Graph k5 = complete(5);
        CHECK(min_dynamo(k5, constant_threshold(k5, 3)).optimum == 3);
    }
}

TEST_CASE("sandwich on small named instances") {
    // lower <= optimum <= upper wherever both sides apply
    const Graph lg = line_graph(complete_bipartite(3, 3)); // = K3 [] K3
    for (int t = 2; t <= 4; ++t) {
        const SolveResult s = min_dynamo(lg, constant_threshold(lg, t));
        REQUIRE(s.status == SolveStatus::solved);
        const BoundReport lo = biregular_line_lb(3, 3, 3, 3, t);
        REQUIRE(lo.applicable);
        CHECK(lo.certificate <= s.optimum);
        const BoundReport hi = dyn_product_naive_ub(t, t); // dyn_t(K3) <= t on both factors
        CHECK(s.optimum <= hi.certificate);
    }
}
