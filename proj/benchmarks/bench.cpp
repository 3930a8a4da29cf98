#include <benchmark/benchmark.h>

#include "szt/inverse_basis.hpp"
#include "szt/invariants.hpp"
#include "szt/linalg.hpp"
#include "szt/matroid.hpp"
#include "szt/perp.hpp"

namespace {

using namespace szt;

Arrangement make(int n, const std::vector<std::vector<int>>& cols) {
  std::vector<Hyperplane> hs;
  for (const auto& c : cols) {
    RatVec v;
    for (int e : c) v.push_back(Rat(e));
    hs.push_back(Hyperplane{v, "H" + std::to_string(hs.size() + 1)});
  }
  return Arrangement(n, hs);
}

Arrangement triangle() { return make(2, {{1, 0}, {0, 1}, {1, 1}}); }

Arrangement k4() {
  return Arrangement::from_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

void BM_SuperspaceMultiply(benchmark::State& state) {
  int n = 4;
  SuperElement f = SuperElement::constant(n, 1);
  for (int i = 0; i < n; ++i)
    f = f * (SuperElement::variable(n, i) + SuperElement::theta(n, i) +
             SuperElement::constant(n, 1));
  for (auto _ : state) {
    SuperElement g = f * f;
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_SuperspaceMultiply);

void BM_KernelOfRandomMatrix(benchmark::State& state) {
  Rng rng(12345);
  std::vector<RatVec> rows(40, RatVec(60));
  for (auto& row : rows)
    for (auto& e : row) e = Rat(rng.uniform(-5, 5));
  for (auto _ : state) {
    auto ker = kernel_of(rows, 60);
    benchmark::DoNotOptimize(ker);
  }
}
BENCHMARK(BM_KernelOfRandomMatrix);

void BM_TutteSubsetSum(benchmark::State& state) {
  Arrangement A = k4();
  for (auto _ : state) benchmark::DoNotOptimize(tutte(A, TutteMethod::SubsetSum));
}
BENCHMARK(BM_TutteSubsetSum);

void BM_TutteDeletionContraction(benchmark::State& state) {
  Arrangement A = k4();
  for (auto _ : state) benchmark::DoNotOptimize(tutte(A, TutteMethod::DeletionContraction));
}
BENCHMARK(BM_TutteDeletionContraction);

void BM_TutteActivity(benchmark::State& state) {
  Arrangement A = k4();
  for (auto _ : state) benchmark::DoNotOptimize(tutte(A, TutteMethod::Activity));
}
BENCHMARK(BM_TutteActivity);

void BM_PerpHilbertTriangle(benchmark::State& state) {
  Arrangement A = triangle();
  for (auto _ : state) {
    PerpSystem sys(A, 1);
    benchmark::DoNotOptimize(sys.hilbert());
  }
}
BENCHMARK(BM_PerpHilbertTriangle);

void BM_PerpHilbertK4(benchmark::State& state) {
  Arrangement A = k4();
  for (auto _ : state) {
    PerpSystem sys(A, 1);
    benchmark::DoNotOptimize(sys.hilbert());
  }
}
BENCHMARK(BM_PerpHilbertK4);

void BM_RecursionHilbertK4(benchmark::State& state) {
  Arrangement A = k4();
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_via_recursion(A));
}
BENCHMARK(BM_RecursionHilbertK4);

void BM_FamilyBuildVerify(benchmark::State& state) {
  Arrangement A = triangle();
  for (auto _ : state) {
    InverseFamily fam = build_family(A);
    PerpSystem sys(A, 1);
    benchmark::DoNotOptimize(verify_family(fam, sys));
  }
}
BENCHMARK(BM_FamilyBuildVerify);

}  // namespace

BENCHMARK_MAIN();
