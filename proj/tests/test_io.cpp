#include "mapcount/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "mapcount/edge_table.hpp"
#include "mapcount/edge_vertex_table.hpp"
#include "mapcount/unrooted.hpp"

using namespace mapcount;

TEST_CASE("edge table CSV export lists the full rectangle") {
    const auto t = build_edge_table(1, 2);
    std::ostringstream os;
    export_table(t, Format::csv, os);
    CHECK(os.str() ==
          "kind,genus,edges,vertices,count\n"
          "rooted-edges,0,0,,1\n"
          "rooted-edges,0,1,,2\n"
          "rooted-edges,0,2,,9\n"
          "rooted-edges,1,0,,0\n"
          "rooted-edges,1,1,,0\n"
          "rooted-edges,1,2,,1\n");
}

TEST_CASE("trivial table exports a single data row") {
    const auto t = build_edge_table(0, 0);
    std::ostringstream os;
    export_table(t, Format::csv, os);
    CHECK(os.str() == "kind,genus,edges,vertices,count\nrooted-edges,0,0,,1\n");
}

TEST_CASE("unrooted export carries cells plus a sum row per block") {
    const auto rooted = reinterpret_as_vertices(build_edge_vertex_table(1, 3));
    const auto u = build_unrooted_table(rooted);
    std::ostringstream os;
    export_table(u, Format::csv, os);
    const std::string expected =
        "kind,genus,edges,vertices,count\n"
        "unrooted,0,0,1,1\n"
        "unrooted,0,0,sum,1\n"
        "unrooted,0,1,1,1\n"
        "unrooted,0,1,2,1\n"
        "unrooted,0,1,sum,2\n"
        "unrooted,0,2,1,1\n"
        "unrooted,0,2,2,2\n"
        "unrooted,0,2,3,1\n"
        "unrooted,0,2,sum,4\n"
        "unrooted,0,3,1,2\n"
        "unrooted,0,3,2,5\n"
        "unrooted,0,3,3,5\n"
        "unrooted,0,3,4,2\n"
        "unrooted,0,3,sum,14\n"
        "unrooted,1,2,1,1\n"
        "unrooted,1,2,sum,1\n"
        "unrooted,1,3,1,3\n"
        "unrooted,1,3,2,3\n"
        "unrooted,1,3,sum,6\n";
    CHECK(os.str() == expected);
}

TEST_CASE("export, parse, export round-trips byte for byte") {
    const auto rooted = reinterpret_as_vertices(build_edge_vertex_table(2, 7));
    const auto u = build_unrooted_table(rooted);
    std::ostringstream first;
    export_table(u, Format::csv, first);
    std::istringstream in(first.str());
    const auto records = parse_csv(in);
    std::ostringstream second;
    write_csv(records, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("JSON export writes counts as strings") {
    const auto t = build_edge_table(0, 1);
    std::ostringstream os;
    export_table(t, Format::json, os);
    auto parsed = nlohmann::json::parse(os.str());
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["kind"] == "rooted-edges");
    CHECK(parsed[0]["count"].is_string());
    CHECK(parsed[0]["count"] == "1");
    CHECK(parsed[1]["count"] == "2");
    CHECK_FALSE(parsed[0].contains("vertices"));
}

TEST_CASE("parse errors carry line numbers") {
    {
        std::istringstream in("genus,edges\n");
        CHECK_THROWS_MATCHES(parse_csv(in), ParseError,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("line 1")));
    }
    {
        std::istringstream in("kind,genus,edges,vertices,count\nunrooted,0,1,1,007\n");
        CHECK_THROWS_MATCHES(parse_csv(in), ParseError,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("line 2")));
    }
    {
        std::istringstream in("kind,genus,edges,vertices,count\nrooted-maps,0,1,,2\n");
        CHECK_THROWS_AS(parse_csv(in), ParseError);
    }
    {
        std::istringstream in("kind,genus,edges,vertices,count\nunrooted,0,1,1\n");
        CHECK_THROWS_AS(parse_csv(in), ParseError);
    }
}

TEST_CASE("fixture verification passes on matching tables") {
    const auto rooted = reinterpret_as_vertices(build_edge_vertex_table(1, 4));
    const auto u = build_unrooted_table(rooted);
    std::ostringstream os;
    export_table(u, Format::csv, os);
    std::istringstream in(os.str());
    const auto records = parse_csv(in);
    const auto report = verify_fixtures(u, records);
    CHECK(report.ok());
    CHECK(report.passed == records.size());
    CHECK(report.failed == 0);
}

TEST_CASE("a single altered digit is flagged with full values") {
    const auto rooted = reinterpret_as_vertices(build_edge_vertex_table(1, 4));
    const auto u = build_unrooted_table(rooted);
    auto records = to_records(u);
    // corrupt exactly one record: u_1(4,1) = 11 -> 12
    bool corrupted = false;
    for (auto& r : records) {
        if (r.genus == 1 && r.edges == 4 && r.vfield == CountRecord::VertexField::number &&
            r.vertices == 1) {
            REQUIRE(r.count == "11");
            r.count = "12";
            corrupted = true;
        }
    }
    REQUIRE(corrupted);
    const auto report = verify_fixtures(u, records);
    CHECK(report.failed == 1);
    CHECK(report.passed == records.size() - 1);
    for (const auto& res : report.results) {
        if (res.status == CheckStatus::pass) continue;
        CHECK(res.status == CheckStatus::value_mismatch);
        CHECK(res.record.genus == 1);
        CHECK(res.record.edges == 4);
        CHECK(res.record.vertices == 1);
        CHECK(res.expected == "12");
        CHECK(res.actual == "11");
        CHECK_THAT(describe(res), Catch::Matchers::ContainsSubstring("expected 12"));
    }
}

TEST_CASE("fixtures outside the table bounds are a coverage error, not a skip") {
    const auto rooted = reinterpret_as_vertices(build_edge_vertex_table(1, 4));
    const auto u = build_unrooted_table(rooted);
    std::vector<CountRecord> records = {
        {TableKind::unrooted, 2, 5, CountRecord::VertexField::number, 1, "53"}};
    const auto report = verify_fixtures(u, records);
    CHECK(report.failed == 1);
    CHECK(report.results[0].status == CheckStatus::out_of_coverage);
}

TEST_CASE("fixture kind must match the table") {
    const auto t = build_edge_table(1, 3);
    std::vector<CountRecord> records = {
        {TableKind::unrooted, 0, 1, CountRecord::VertexField::number, 1, "1"}};
    const auto report = verify_fixtures(t, records);
    CHECK(report.failed == 1);
    CHECK(report.results[0].status == CheckStatus::kind_mismatch);
}

TEST_CASE("shipped fixture file parses and its small block verifies") {
    std::ifstream in(MAPCOUNT_FIXTURE_FILE);
    REQUIRE(in.good());
    const auto records = parse_csv(in);
    CHECK(records.size() == 1125);
    std::vector<CountRecord> small;
    for (const auto& r : records)
        if (r.genus <= 2 && r.edges <= 5) small.push_back(r);
    const auto rooted = reinterpret_as_vertices(build_edge_vertex_table(2, 5));
    const auto u = build_unrooted_table(rooted);
    const auto report = verify_fixtures(u, small);
    CHECK(report.ok());
    CHECK(report.passed == small.size());
}

TEST_CASE("polynomial exports") {
    GenusPolynomial poly{2, {Int(1), Int(-3), Int(0), Int(7), Int(2)}};
    std::ostringstream os;
    write_polynomial_csv(poly, os);
    CHECK(os.str() ==
          "genus,power,coefficient\n"
          "2,0,1\n"
          "2,1,-3\n"
          "2,2,0\n"
          "2,3,7\n"
          "2,4,2\n");
    std::ostringstream js;
    write_polynomial_json(poly, js);
    auto parsed = nlohmann::json::parse(js.str());
    CHECK(parsed["genus"] == 2);
    CHECK(parsed["coefficients"].size() == 5);
    CHECK(parsed["coefficients"][1] == "-3");
}
