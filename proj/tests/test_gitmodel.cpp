#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogfiber/gitmodel.hpp"

#include <numeric>
#include <random>

using namespace ogfiber;

TEST_CASE("problem layout per cycle type") {
    auto P = build_problem(CycleType::parse("1,1,2"));
    CHECK(P.cycle.total() == 4);
    CHECK(P.n_slots() == 6);
    // 8 psi entries + 3+3 strictly-independent nilpotent entries
    CHECK(P.reg->size() == 14);
    CHECK(P.slice_reg->size() == 10);
    CHECK(P.chi == std::vector<int>{-2, -2, 1, 1, 1, 1});
    for (const auto& w : P.weights)
        CHECK(std::accumulate(w.begin(), w.end(), 0) == 0);
}

TEST_CASE("word enumeration stops below the nilpotency order") {
    CHECK(enumerate_words(1).empty());
    CHECK(enumerate_words(2) == std::vector<std::pair<int, int>>{{1, 0}, {0, 1}});
    CHECK(enumerate_words(3).size() == 5);
}

TEST_CASE("slice samples satisfy the defining equations") {
    std::mt19937_64 rng(11);
    for (const char* c : {"1,1,1,1", "1,1,2", "2,2", "1,3", "4"}) {
        auto P = build_problem(CycleType::parse(c));
        for (int fam = 0; fam < slice_family_count(P); ++fam) {
            auto p = lift_slice(P, random_slice_values(P, rng, fam));
            CHECK(on_variety(P, p));
        }
    }
}

TEST_CASE("group action preserves the variety and the invariant pairing") {
    std::mt19937_64 rng(7);
    auto P = build_problem(CycleType::parse("1,3"));
    auto p = lift_slice(P, random_slice_values(P, rng, 0));
    auto g = random_group_element(P, rng);
    auto q = apply_group(P, g, p);
    CHECK(on_variety(P, q));
    CHECK(apply_group(P, identity_element(P), p).values == p.values);
}

TEST_CASE("one parameter subgroup bookkeeping") {
    auto P = build_problem(CycleType::parse("1,1,2"));
    const OnePS r = {0, 0, -1, 0, 0, 0};
    CHECK(pairing(P, r) == -1);
    // a point with zero x row survives the limit
    PointY p;
    p.values.assign(P.reg->size(), Rational(0));
    p.values[P.reg->index("y1")] = Rational(1);
    p.values[P.reg->index("z11")] = Rational(2);
    CHECK(limit_exists(P, p, r));
    p.values[P.reg->index("x1")] = Rational(1);
    CHECK_FALSE(limit_exists(P, p, r));
}
