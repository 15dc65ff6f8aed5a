#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogfiber/invariants.hpp"

#include <random>

using namespace ogfiber;

namespace {

ProblemPtr problem(const char* c) {
    return std::make_shared<const GITProblem>(build_problem(CycleType::parse(c)));
}

GroebnerBasis slice_gb(const GITProblem& P) {
    return groebner_basis(P.slice_ideal, Polynomial::canonical_order());
}

} // namespace

TEST_CASE("generator inventories") {
    struct Want {
        const char* cycle;
        std::size_t n_gens, n_deg1;
    };
    for (const Want w : {Want{"1,1,1,1", 6, 3}, Want{"1,1,2", 8, 3}, Want{"2,2", 6, 5},
                         Want{"1,3", 19, 5}, Want{"4", 10, 10}}) {
        auto G = case_generators(problem(w.cycle));
        CHECK(G.generators.size() == w.n_gens);
        CHECK(G.degree_one.size() == w.n_deg1);
    }
}

TEST_CASE("generators are genuine semi-invariants") {
    auto P = problem("1,1,2");
    auto G = case_generators(P);
    std::mt19937_64 rng(5);
    auto p = lift_slice(*P, random_slice_values(*P, rng, 0));
    auto g = random_group_element(*P, rng);
    auto q = apply_group(*P, g, p);
    // the degree-one invariants transform with one power of the character,
    // so their mutual ratios are constant along orbits
    const auto& u = G.degree_one;
    const Rational a0 = p.eval(u[0].expr), b0 = q.eval(u[0].expr);
    REQUIRE(!a0.is_zero());
    REQUIRE(!b0.is_zero());
    for (std::size_t i = 1; i < u.size(); ++i)
        CHECK(p.eval(u[i].expr) / a0 == q.eval(u[i].expr) / b0);
}

TEST_CASE("graded pieces of the semi-invariant ring") {
    auto P = problem("1,1,1,1");
    auto G = case_generators(P);
    auto gb = slice_gb(*P);
    CHECK(semiinvariant_basis(G, 1, gb).dimension == 2);
    CHECK(semiinvariant_basis(G, 2, gb).dimension == 3);
}

TEST_CASE("degree two dependency count of the length-four case") {
    auto P = problem("4");
    auto G = case_generators(P);
    auto gb = slice_gb(*P);
    const auto piece = semiinvariant_basis(G, 2, gb);
    // 55 tag monomials, 42 independent values: 13 relations
    CHECK(piece.tag_monomials.size() == 55);
    CHECK(piece.dimension == 42);
    for (unsigned long long s : {3ull, 17ull, 91ull}) {
        std::mt19937_64 rng(s);
        CHECK(evaluation_kernel_dim(G, piece, rng) == 13);
    }
}

TEST_CASE("character bookkeeping matches the stated degrees") {
    auto P = problem("2,2");
    auto G = case_generators(P);
    for (const auto& g : G.degree_one) {
        const auto w = character_of(*P, g);
        REQUIRE(w.size() == 3); // V plus the two cycle factors
        CHECK(w[0] == -2);
        CHECK(w[1] == 1);
        CHECK(w[2] == 1);
        CHECK(check_semi_invariance(*P, g.expr) == std::nullopt);
    }
}
