#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogfiber/presentations.hpp"

using namespace ogfiber;

namespace {

ProblemPtr problem(const char* c) {
    return std::make_shared<const GITProblem>(build_problem(CycleType::parse(c)));
}

GroebnerBasis slice_gb(const GITProblem& P) {
    return groebner_basis(P.slice_ideal, Polynomial::canonical_order());
}

RegistryPtr deg1_reg(const CaseGenerators& G) {
    std::vector<std::string> names;
    for (const auto& g : G.degree_one) names.push_back(g.name);
    return make_registry(std::move(names));
}

Polynomial det2(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                const Polynomial& d) {
    return a * d - b * c;
}

} // namespace

TEST_CASE("verification battery passes for every case") {
    for (const char* c : {"1,1,1,1", "1,1,2", "2,2", "1,3", "4"}) {
        auto G = case_generators(problem(c));
        for (const auto& r : verify_case(G)) {
            INFO(c << " / " << r.name << ": " << r.detail);
            CHECK(r.passed);
        }
    }
}

TEST_CASE("hilbert rows of the presented rings") {
    struct Want {
        const char* cycle;
        std::vector<std::size_t> row;
    };
    for (const Want& w : {Want{"1,1,1,1", {1, 2, 3, 4}}, Want{"2,2", {1, 5, 14}},
                          Want{"1,3", {1, 5, 14}}, Want{"4", {1, 10, 42}}}) {
        auto G = case_generators(problem(w.cycle));
        auto reg = deg1_reg(G);
        CHECK(hilbert_values(reg, expected_relations(G, reg),
                             static_cast<int>(w.row.size()) - 1) == w.row);
    }
    // the degree-one subring of [1,1,2] is free on three variables
    auto G = case_generators(problem("1,1,2"));
    CHECK(hilbert_values(deg1_reg(G), {}, 3) ==
          std::vector<std::size_t>{1, 3, 6, 10});
}

TEST_CASE("quadric normal forms") {
    auto G22 = case_generators(problem("2,2"));
    auto reg = deg1_reg(G22);
    auto t = [&](const char* n) { return Polynomial::variable(reg, n); };
    auto rep = quadric_report(t("u1") * t("u4") - t("u2") * t("u3"),
                              std::make_pair<std::size_t, Polynomial>(0, t("u1") + t("u4")));
    CHECK(rep.gram_rank == 4);
    CHECK(rep.singular_dim == 0);
    CHECK(rep.section_analyzed);
    CHECK(rep.section_smooth);

    auto G13 = case_generators(problem("1,3"));
    auto reg13 = deg1_reg(G13);
    auto s = [&](const char* n) { return Polynomial::variable(reg13, n); };
    auto rep13 = quadric_report(s("xi4") * s("xi4") - s("xi3") * s("xi5"));
    CHECK(rep13.gram_rank == 3);
    CHECK(rep13.singular_dim == 1);
}

TEST_CASE("closed form factorizations on the slice") {
    SUBCASE("length 1,1,2: u1 factors through the z-line") {
        auto P = problem("1,1,2");
        auto G = case_generators(P);
        auto gb = slice_gb(*P);
        auto v = [&](const char* n) { return Polynomial::variable(P->slice_reg, n); };
        const auto u1 = P->to_slice(G.degree_one[1].expr);
        const auto want = (v("a") * det2(v("x1"), v("x2"), v("z11"), v("z12")) *
                           det2(v("y1"), v("y2"), v("z11"), v("z12")))
                              .scaled(Rational(-1));
        CHECK(normal_form(u1 - want, gb).is_zero());
    }
    SUBCASE("length 2,2: u1 is a square times the nilpotent scales") {
        auto P = problem("2,2");
        auto G = case_generators(P);
        auto gb = slice_gb(*P);
        auto v = [&](const char* n) { return Polynomial::variable(P->slice_reg, n); };
        const auto D = det2(v("x11"), v("x12"), v("y11"), v("y12"));
        const auto u1 = P->to_slice(G.degree_one[1].expr);
        CHECK(normal_form(u1 - v("a1") * v("a2") * D * D, gb).is_zero());
    }
    SUBCASE("length 1,3: xi3,xi4,xi5 share the factor f1*g1") {
        auto P = problem("1,3");
        auto G = case_generators(P);
        auto gb = slice_gb(*P);
        auto v = [&](const char* n) { return Polynomial::variable(P->slice_reg, n); };
        const auto f1 = det2(v("x1"), v("x2"), v("y11"), v("y12"));
        const auto g1 = det2(v("y11"), v("y12"), v("y21"), v("y22"));
        const Polynomial want[3] = {v("a1") * v("a3") * f1 * g1,
                                    v("a1") * v("b3") * f1 * g1,
                                    v("b1") * v("b3") * f1 * g1};
        for (int k = 0; k < 3; ++k)
            CHECK(normal_form(P->to_slice(G.generators[2 + k].expr) - want[k], gb)
                      .is_zero());
    }
}

TEST_CASE("scroll model of the length four boundary") {
    auto G = case_generators(problem("4"));
    const auto S = scroll_check(G);
    CHECK(S.minors_pull_to_zero);
    CHECK(S.pullbacks_divide);
    CHECK(S.envelope_ok);
    for (bool line : S.fiber_vertex_line) CHECK(line);
}
