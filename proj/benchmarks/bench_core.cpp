#include <benchmark/benchmark.h>

#include "ogfiber/presentations.hpp"
#include "ogfiber/stability.hpp"

#include <random>

using namespace ogfiber;

namespace {

ProblemPtr problem(const char* c) {
    return std::make_shared<const GITProblem>(build_problem(CycleType::parse(c)));
}

void BM_slice_groebner(benchmark::State& state, const char* cycle) {
    auto P = problem(cycle);
    for (auto _ : state) {
        auto G = groebner_basis(P->slice_ideal, Polynomial::canonical_order());
        benchmark::DoNotOptimize(G.basis);
    }
}

void BM_semiinvariant_basis(benchmark::State& state, const char* cycle, int degree) {
    auto P = problem(cycle);
    auto G = case_generators(P);
    auto gb = groebner_basis(P->slice_ideal, Polynomial::canonical_order());
    for (auto _ : state) {
        auto piece = semiinvariant_basis(G, degree, gb);
        benchmark::DoNotOptimize(piece.dimension);
    }
}

void BM_semistability(benchmark::State& state, const char* cycle) {
    auto P = problem(cycle);
    std::mt19937_64 rng(17);
    auto p = lift_slice(*P, random_slice_values(*P, rng, 0));
    for (auto _ : state) {
        auto rep = semistability_status(*P, p);
        benchmark::DoNotOptimize(rep.verdict);
    }
}

void BM_verify_case(benchmark::State& state, const char* cycle) {
    auto G = case_generators(problem(cycle));
    for (auto _ : state) {
        auto checks = verify_case(G);
        benchmark::DoNotOptimize(checks.size());
    }
}

} // namespace

BENCHMARK_CAPTURE(BM_slice_groebner, len_1122, "1,1,2");
BENCHMARK_CAPTURE(BM_slice_groebner, len_4, "4");
BENCHMARK_CAPTURE(BM_semiinvariant_basis, len_1122_d2, "1,1,2", 2);
BENCHMARK_CAPTURE(BM_semiinvariant_basis, len_4_d2, "4", 2);
BENCHMARK_CAPTURE(BM_semistability, len_1111, "1,1,1,1");
BENCHMARK_CAPTURE(BM_semistability, len_13, "1,3");
BENCHMARK_CAPTURE(BM_semistability, len_4, "4");
BENCHMARK_CAPTURE(BM_verify_case, len_1111, "1,1,1,1");
BENCHMARK_CAPTURE(BM_verify_case, len_22, "2,2");

BENCHMARK_MAIN();
