#include "mapcount/bench.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mapcount;

TEST_CASE("timing harness runs trials and reports sane rows") {
    const auto report = run_trials(6, 2);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].edges == 2);
    CHECK(report.rows[1].edges == 4);
    CHECK(report.rows[2].edges == 6);
    CHECK(validate(report));
    CHECK_FALSE(report.machine.empty());

    const auto text = format_text(report);
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("rooted (s)"));
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("machine: "));

    const auto csv = format_csv(report);
    CHECK_THAT(csv, Catch::Matchers::StartsWith("edges,rooted_seconds,unrooted_seconds\n"));
}

TEST_CASE("bench argument validation") {
    CHECK_THROWS_AS(run_trials(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_trials(-1, 1), std::invalid_argument);
}

TEST_CASE("validate flags disordered or negative rows") {
    BenchReport bad;
    bad.rows = {{4, 0.0, 0.0}, {2, 0.0, 0.0}};
    CHECK_FALSE(validate(bad));
    BenchReport neg;
    neg.rows = {{2, -1.0, 0.0}};
    CHECK_FALSE(validate(neg));
    BenchReport shrinking;
    shrinking.rows = {{2, 10.0, 0.0}, {4, 1.0, 0.0}};
    CHECK_FALSE(validate(shrinking));
}
