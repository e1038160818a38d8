#include <benchmark/benchmark.h>

#include "mondepth/betti.hpp"
#include "mondepth/hilbert.hpp"
#include "mondepth/lattice.hpp"
#include "mondepth/rees.hpp"

using namespace mondepth;

namespace {

MonomialIdeal running_example() {
  std::vector<ExponentVec> gens = {
      {Int(1), Int(0), Int(0), Int(3), Int(0), Int(0)},
      {Int(0), Int(1), Int(0), Int(0), Int(3), Int(0)},
      {Int(0), Int(0), Int(1), Int(1), Int(1), Int(1)}};
  return MonomialIdeal::make(PolyContext(6), std::move(gens));
}

void BM_PowerK(benchmark::State& state) {
  auto I = running_example();
  for (auto _ : state)
    benchmark::DoNotOptimize(power(I, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_PowerK)->Arg(4)->Arg(8)->Arg(12);

void BM_HilbertNumerator(benchmark::State& state) {
  auto Ik = power(running_example(), static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) {
    HilbertCache fresh;
    benchmark::DoNotOptimize(hilbert_numerator(Ik, &fresh));
  }
}
BENCHMARK(BM_HilbertNumerator)->Arg(1)->Arg(2)->Arg(4);

void BM_DepthOfPower(benchmark::State& state) {
  auto Ik = power(running_example(), static_cast<unsigned long>(state.range(0)));
  Field q = Field::rationals();
  for (auto _ : state)
    benchmark::DoNotOptimize(depth_quotient(Ik, q));
}
BENCHMARK(BM_DepthOfPower)->Arg(2)->Arg(4)->Arg(6);

void BM_ReesHVector(benchmark::State& state) {
  auto I = running_example();
  for (auto _ : state) {
    HilbertCache fresh;
    benchmark::DoNotOptimize(rees_hvector(I, state.range(0), 4, &fresh));
  }
}
BENCHMARK(BM_ReesHVector)->Arg(12)->Arg(20);

void BM_LatticeHilbertBasis(benchmark::State& state) {
  // the parity lattice in dimension `range`: all coordinate sums even
  int n = static_cast<int>(state.range(0));
  IntMat rows;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Int> r(n, 0);
    r[i] = 1;
    r[i + 1] = 1;
    rows.push_back(std::move(r));
  }
  {
    std::vector<Int> r(n, 0);
    r[0] = 2;
    rows.push_back(std::move(r));
  }
  auto l = lattice_from_rows(rows, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(hilbert_basis_lattice_positive(l));
}
BENCHMARK(BM_LatticeHilbertBasis)->Arg(3)->Arg(4)->Arg(5);

void BM_ReesSaturation(benchmark::State& state) {
  auto I = running_example();
  for (auto _ : state)
    benchmark::DoNotOptimize(rees_normality(I));
}
BENCHMARK(BM_ReesSaturation);

}  // namespace

BENCHMARK_MAIN();
