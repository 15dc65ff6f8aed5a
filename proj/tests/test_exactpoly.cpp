#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogfiber/binary_form.hpp"
#include "ogfiber/parse.hpp"
#include "ogfiber/qlinalg.hpp"

using namespace ogfiber;

TEST_CASE("rational arithmetic stays canonical") {
    Rational a(2, 4), b(1, -2);
    CHECK(a.str() == "1/2");
    CHECK(b.str() == "-1/2");
    CHECK((a + b).is_zero());
    CHECK((a * Rational(4)).str() == "2");
    CHECK(Rational::from_str("-6/8").str() == "-3/4");
    CHECK(Rational(3, 7).inverse().str() == "7/3");
    CHECK(Rational(-5).sign() == -1);
}

TEST_CASE("polynomial parse, arithmetic and evaluation") {
    auto reg = make_registry({"x", "y"});
    auto f = parse_poly("x^2 - 2*x*y + y^2", reg);
    auto g = parse_poly("x - y", reg);
    CHECK((f - g * g).is_zero());
    CHECK(f.evaluate({Rational(5), Rational(3)}) == Rational(4));
    CHECK(parse_poly("3/2*x", reg).scaled(Rational(2)).str() == "3*x");
    CHECK_THROWS_AS(parse_poly("x + q", reg), ParseError);
}

TEST_CASE("qmatrix rank, kernel, inverse, det") {
    QMatrix m(3, 3);
    long vals[9] = {2, 0, 1, 0, 1, 0, 4, 0, 2};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = Rational(vals[3 * r + c]);
    CHECK(m.rank() == 2);
    CHECK(m.det().is_zero());
    auto ker = m.nullspace();
    REQUIRE(ker.size() == 1);
    // kernel vector annihilates every row
    for (int r = 0; r < 3; ++r) {
        Rational s(0);
        for (int c = 0; c < 3; ++c) s += m.at(r, c) * ker[0][c];
        CHECK(s.is_zero());
    }
    QMatrix id = QMatrix::identity(3);
    CHECK(id.inverse().has_value());
    CHECK(!m.inverse().has_value());
}

TEST_CASE("binary form gcd finds common projective roots") {
    auto reg = make_registry({"w1", "w2"});
    auto f = parse_poly("w1^2 - w2^2", reg);
    auto g = parse_poly("w1^2 - 2*w1*w2 + w2^2", reg);
    auto d = binary_form_gcd({f, g}, 0, 1);
    CHECK(d.str() == "w1 - w2");
    CHECK(binary_form_gcd({f, parse_poly("w1^2 + w2^2", reg)}, 0, 1).is_constant());
    CHECK_THROWS_AS(binary_form_gcd({Polynomial::zero(reg)}, 0, 1), AllFormsZero);
}
