#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogfiber/stability.hpp"

#include <random>

using namespace ogfiber;

namespace {

PointY mk(const GITProblem& P, const std::vector<std::pair<std::string, long>>& vals) {
    PointY p;
    p.values.assign(P.reg->size(), Rational(0));
    for (const auto& [n, v] : vals) p.values[P.reg->index(n)] = Rational(v);
    return p;
}

} // namespace

TEST_CASE("destabilizing one parameter subgroups on the length 1,1,2 fiber") {
    auto P = build_problem(CycleType::parse("1,1,2"));
    struct Row {
        std::vector<std::pair<std::string, long>> vals;
        OnePS r;
        Verdict want;
    };
    const std::vector<Row> rows = {
        // x row zero
        {{{"y1", 1}, {"y2", 2}, {"z11", 1}, {"z12", 3}, {"z21", 2}, {"z22", 1},
          {"a11", 1}, {"a12", -1}, {"a21", 1}, {"b11", 2}, {"b12", -2}, {"b21", 2}},
         {0, 0, -1, 0, 0, 0}, Verdict::Unstable},
        // z block zero, dense nilpotents
        {{{"x1", 1}, {"x2", 2}, {"y1", 3}, {"y2", 1},
          {"a11", 1}, {"a12", -1}, {"a21", 1}, {"b11", 2}, {"b12", -2}, {"b21", 2}},
         {0, 0, 0, 0, -1, -1}, Verdict::Unstable},
        // rank one z block, lower triangular nilpotents
        {{{"x1", 1}, {"x2", 2}, {"y1", 3}, {"y2", 1}, {"z21", 1}, {"a21", 1}, {"b21", 2}},
         {0, 0, 0, 0, -1, 0}, Verdict::Unstable},
        // second column of x and z gone
        {{{"x1", 1}, {"y1", 3}, {"y2", 1}, {"z11", 1}, {"z21", 2},
          {"a11", 1}, {"a12", -1}, {"a21", 1}, {"b11", 2}, {"b12", -2}, {"b21", 2}},
         {0, 1, 0, 1, 0, 0}, Verdict::Unstable},
        // second column supported on the nilpotent image only
        {{{"x1", 1}, {"y1", 3}, {"z11", 1}, {"z21", 2}, {"z22", 1}, {"a21", 1}, {"b21", 2}},
         {0, 1, 0, 0, 0, 1}, Verdict::Unstable},
        // strictly semistable: pairing zero refutations of stability
        {{{"x1", 1}, {"x2", 2}, {"y1", 3}, {"y2", 1}, {"z11", 1}, {"z21", 2},
          {"a11", 1}, {"a12", -1}, {"a21", 1}, {"b11", 2}, {"b12", -2}, {"b21", 2}},
         {0, 1, 1, 1, 0, 0}, Verdict::StrictlySemistable},
        {{{"x1", 1}, {"y1", 3}, {"z11", 1}, {"z21", 2}, {"z22", 1}, {"a12", 1}, {"b12", 2}},
         {0, 1, 0, 0, 1, 1}, Verdict::StrictlySemistable},
        {{{"x1", 1}, {"y1", 3}, {"y2", 1}, {"z11", 1}, {"z21", 2}, {"z22", 1},
          {"a21", 1}, {"b21", 2}},
         {0, 1, 0, 1, 0, 1}, Verdict::StrictlySemistable},
    };
    std::mt19937_64 rng(23);
    for (const auto& row : rows) {
        const auto p = mk(P, row.vals);
        INFO("r = " << row.r[0] << row.r[1] << row.r[2] << row.r[3] << row.r[4] << row.r[5]);
        CHECK(semistability_status(P, p).verdict == row.want);
        CHECK(certifies_not_stable(P, p, row.r));
        if (row.want == Verdict::Unstable) {
            CHECK(certifies_unstable(P, p, row.r));
            auto cert = destabilizer_search(P, p, 3, 0, rng);
            REQUIRE(cert.has_value());
            CHECK(cert->r == row.r);
            CHECK(cert->pairing_value < 0);
        }
    }
}

TEST_CASE("verdicts are invariant under base change") {
    std::mt19937_64 rng(29);
    for (const char* c : {"1,1,1,1", "1,1,2", "2,2", "1,3", "4"}) {
        auto P = build_problem(CycleType::parse(c));
        for (int i = 0; i < 10; ++i) {
            auto p = lift_slice(P, random_slice_values(P, rng, i % slice_family_count(P)));
            auto g = random_group_element(P, rng);
            CHECK(semistability_status(P, p).verdict ==
                  semistability_status(P, apply_group(P, g, p)).verdict);
        }
    }
}

TEST_CASE("stratum classification from invariant coordinates") {
    std::mt19937_64 rng(31);
    auto P4 = std::make_shared<const GITProblem>(build_problem(CycleType::parse("4")));
    auto G4 = case_generators(P4);
    // rank one psi with corner nilpotents: strictly semistable, and on the
    // singular stratum exactly when the two corner pairs are proportional
    auto corner = [&](long a1, long a6, long b1, long b6) {
        std::vector<Rational> v(P4->slice_reg->size(), Rational(0));
        v[P4->slice_reg->index("x11")] = Rational(1);
        v[P4->slice_reg->index("x32")] = Rational(1);
        v[P4->slice_reg->index("a1")] = Rational(a1);
        v[P4->slice_reg->index("a6")] = Rational(a6);
        v[P4->slice_reg->index("b1")] = Rational(b1);
        v[P4->slice_reg->index("b6")] = Rational(b6);
        return lift_slice(*P4, v);
    };
    auto p = corner(2, 3, 4, 6); // proportional
    REQUIRE(semistability_status(*P4, p).verdict == Verdict::StrictlySemistable);
    CHECK(classify_stratum(*P4, G4, p).stratum == Stratum::Sigma1);
    auto q = corner(2, 3, 4, 7); // independent
    REQUIRE(semistability_status(*P4, q).verdict == Verdict::StrictlySemistable);
    CHECK(classify_stratum(*P4, G4, q).stratum == Stratum::Sigma0);

    // classify_stratum refuses points outside the strictly semistable locus
    auto Pg = std::make_shared<const GITProblem>(build_problem(CycleType::parse("1,1,1,1")));
    auto Gg = case_generators(Pg);
    auto stable = lift_slice(*Pg, random_slice_values(*Pg, rng, 0));
    if (semistability_status(*Pg, stable).verdict == Verdict::Stable)
        CHECK_THROWS_AS(classify_stratum(*Pg, Gg, stable), std::invalid_argument);
}
