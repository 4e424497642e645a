// Microbenchmarks for the hot paths: reduction, generation, the symbolic
// identity proofs, the elliptic pipeline, and the brute-force oracle.
#include <benchmark/benchmark.h>

#include "pte/elliptic.hpp"
#include "pte/families.hpp"
#include "pte/poly.hpp"
#include "pte/search.hpp"
#include "pte/shift.hpp"
#include "pte/solution.hpp"

namespace {

using pte::Int;
using pte::Rat;

void BM_Reduce(benchmark::State& state) {
  auto raw = pte::deg7_family(Rat(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pte::reduce(raw));
}
BENCHMARK(BM_Reduce)->Arg(2)->Arg(12)->Arg(144);

void BM_VerifyDegree(benchmark::State& state) {
  auto s = pte::deg7_family(Rat(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pte::verify_degree(s, 7));
}
BENCHMARK(BM_VerifyDegree)->Arg(2)->Arg(144);

void BM_FamilyDeg7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pte::deg7_family(Rat(5)));
}
BENCHMARK(BM_FamilyDeg7);

void BM_IdentityProof(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(pte::verify_identity_family(pte::FamilyId::Deg7));
}
BENCHMARK(BM_IdentityProof);

void BM_IdentityProofDeg4SixTerm(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        pte::verify_identity_family(pte::FamilyId::Deg4SixTerm));
}
BENCHMARK(BM_IdentityProofDeg4SixTerm);

void BM_ShiftChain(benchmark::State& state) {
  auto base = pte::deg5_sym_family2(Rat(1), Rat(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(pte::shift_chain(base, {Int(7), Int(-11)}));
}
BENCHMARK(BM_ShiftChain);

void BM_PointToDeg7(benchmark::State& state) {
  auto curve = pte::deg5_curve();
  auto qp = pte::weierstrass_to_quartic(
      pte::scalar_mul(curve, static_cast<int>(state.range(0)),
                      pte::deg5_generator()));
  for (auto _ : state) benchmark::DoNotOptimize(pte::point_to_deg7(qp));
}
BENCHMARK(BM_PointToDeg7)->Arg(2)->Arg(4);

void BM_Search(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        pte::brute_force_ideal(2, 3, state.range(0)));
}
BENCHMARK(BM_Search)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
