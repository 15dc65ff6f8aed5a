#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogfiber/report.hpp"

#include <json.hpp>

using namespace ogfiber;

TEST_CASE("point files parse to registry aligned points") {
    auto P = build_problem(CycleType::parse("1,1,2"));
    const auto p = parse_point_file(P, R"({"x1": 1, "y2": "-3/2", "a11": 4})");
    CHECK(p.values[P.reg->index("x1")] == Rational(1));
    CHECK(p.values[P.reg->index("y2")] == Rational(-3, 2));
    CHECK(p.values[P.reg->index("a11")] == Rational(4));
    CHECK(p.values[P.reg->index("z22")].is_zero());
    CHECK_THROWS_AS(parse_point_file(P, R"({"bogus": 1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point_file(P, R"([1, 2])"), std::invalid_argument);
}

TEST_CASE("point reports carry verdict, certificate and stratum") {
    auto P = std::make_shared<const GITProblem>(build_problem(CycleType::parse("1,1,2")));
    auto G = case_generators(P);
    const auto p = parse_point_file(
        *P, R"({"x1":1,"y1":3,"y2":1,"z11":1,"z21":2,"z22":1,"a21":1,"b21":2})");
    const auto j = nlohmann::json::parse(point_report_json(*P, G, p, 3, 10, 17));
    CHECK(j.at("verdict") == "strictly-semistable");
    CHECK(j.at("surjective") == true);
    REQUIRE(j.contains("destabilizer"));
    CHECK(j.at("destabilizer").at("pairing") == 0);
    REQUIRE(j.contains("stratum"));
    CHECK(j.at("stratum").at("coords").contains("u0"));
}

TEST_CASE("case reports serialize the full verification battery") {
    RunConfig cfg;
    const auto j = nlohmann::json::parse(case_report_json(CycleType::parse("2,2"), cfg));
    CHECK(j.at("status") == "ok");
    CHECK(j.at("generators").size() == 6);
    CHECK(j.at("degree_one").size() == 5);
    CHECK(j.at("hilbert") == std::vector<std::size_t>{1, 5, 14});
    CHECK(j.at("quadric").at("gram_rank") == 4);
    for (const auto& c : j.at("checks")) CHECK(c.at("status") == "pass");
}

TEST_CASE("capped configurations are reported, not silently wrong") {
    RunConfig cfg;
    cfg.degree_cap = 1;
    const auto j = nlohmann::json::parse(case_report_json(CycleType::parse("4"), cfg));
    CHECK(j.at("status") == "capped");
    CHECK(j.at("degree_reached") == 1);
}

TEST_CASE("case reports are byte identical for a fixed configuration") {
    RunConfig cfg;
    cfg.seed = 99;
    const auto a = case_report_json(CycleType::parse("1,1,1,1"), cfg);
    CHECK(a == case_report_json(CycleType::parse("1,1,1,1"), cfg));
}
