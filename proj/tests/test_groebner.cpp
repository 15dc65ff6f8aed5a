#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogfiber/groebner.hpp"
#include "ogfiber/parse.hpp"

using namespace ogfiber;

TEST_CASE("groebner basis and ideal membership") {
    auto reg = make_registry({"x", "y", "z"});
    auto I = Ideal::make(reg, {parse_poly("x^2 + y^2 - 1", reg),
                               parse_poly("x - y", reg)});
    auto G = groebner_basis(I, Polynomial::canonical_order());
    CHECK_FALSE(G.capped);
    CHECK(G.contains(parse_poly("2*y^2 - 1", reg)));
    CHECK_FALSE(G.contains(parse_poly("z", reg)));
    CHECK(normal_form(parse_poly("x^2 - y^2", reg), G).is_zero());
}

TEST_CASE("elimination computes the projection ideal") {
    // twisted cubic: eliminate t from (x - t, y - t^2, z - t^3)
    auto reg = make_registry({"t", "x", "y", "z"});
    auto I = Ideal::make(reg, {parse_poly("x - t", reg), parse_poly("y - t^2", reg),
                               parse_poly("z - t^3", reg)});
    auto J = eliminate(I, {"t"});
    auto G = groebner_basis(J, Polynomial::canonical_order());
    CHECK(G.contains(parse_poly("y - x^2", J.reg)));
    CHECK(G.contains(parse_poly("z - x*y", J.reg)));
    CHECK_FALSE(G.contains(parse_poly("x", J.reg)));
}

TEST_CASE("ring map kernel") {
    // k[u,v] -> k[s], u -> s^2, v -> s^3: kernel is (u^3 - v^2)
    auto src = make_registry({"s"});
    auto I = ring_map_kernel({"u", "v"},
                             {parse_poly("s^2", src), parse_poly("s^3", src)},
                             Ideal::make(src, {}));
    auto G = groebner_basis(I, Polynomial::canonical_order());
    CHECK(G.contains(parse_poly("u^3 - v^2", I.reg)));
    CHECK_FALSE(G.contains(parse_poly("u", I.reg)));
}

TEST_CASE("degree caps mark the basis and guard normal forms") {
    auto reg = make_registry({"x", "y"});
    auto I = Ideal::make(reg, {parse_poly("x^5 - y", reg), parse_poly("x*y - 1", reg)});
    GroebnerCaps caps;
    caps.max_degree = 2;
    auto G = groebner_basis(I, Polynomial::canonical_order(), caps);
    CHECK(G.capped);
    CHECK(G.degree_reached <= 2);
    CHECK_THROWS_AS(normal_form(parse_poly("x^6", reg), G), CappedError);
}
