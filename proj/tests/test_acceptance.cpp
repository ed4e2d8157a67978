// Acceptance suite: one test case per criterion, each printing a single
// pass/fail line. Run via ctest or directly:
//   ./acceptance_tests --reporter console

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "monodyn/checks.hpp"

using namespace monodyn;

namespace {

bool report(int number, const char* title, const std::vector<checks::CheckResult>& results) {
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    std::printf("criterion %d (%s): %s -- %zu/%zu instances\n", number, title,
                failed == 0 ? "PASS" : "FAIL", results.size() - static_cast<std::size_t>(failed),
                results.size());
    for (const auto& r : results)
        if (!r.pass) std::printf("    FAIL %s: %s\n", r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    return failed == 0;
}

} // namespace

TEST_CASE("criterion 1: construction validity sweep") {
    REQUIRE(report(1, "construction validity sweep", checks::construction_sweep()));
}

TEST_CASE("criterion 2: figure reproduction") {
    REQUIRE(report(2, "figure reproduction", checks::figures()));
}

TEST_CASE("criterion 3: exactness vs oracle") {
    REQUIRE(report(3, "exactness vs oracle", checks::exactness_oracle()));
}

TEST_CASE("criterion 4: sandwich property suite") {
    REQUIRE(report(4, "sandwich property suite", checks::sandwich()));
}

TEST_CASE("criterion 5: threshold-decrement lemma") {
    REQUIRE(report(5, "threshold-decrement lemma", checks::decrement_lemma()));
}

TEST_CASE("criterion 6: line-graph identities") {
    REQUIRE(report(6, "line-graph identities", checks::line_graph_identities()));
}

TEST_CASE("criterion 7: bound-formula regression") {
    REQUIRE(report(7, "bound-formula regression", checks::bound_regression()));
}

TEST_CASE("criterion 8: engine properties") {
    REQUIRE(report(8, "engine properties", checks::engine_properties()));
}
