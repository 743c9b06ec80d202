#include <benchmark/benchmark.h>

#include "commalg/families.hpp"
#include "commalg/pullback.hpp"
#include "commalg/semigroup.hpp"
#include "commalg/simplicial.hpp"

using namespace commalg;

namespace {

// Chain of three 2m-subsets of {1..4m} overlapping in m variables.
FFamilySpec chain(std::size_t m) {
  FFamilySpec s{4 * m, {}};
  for (std::size_t start = 0; start < 3; ++start) {
    std::vector<std::size_t> f;
    for (std::size_t k = 0; k < 2 * m; ++k) f.push_back(start * m + k + 1);
    s.subsets.push_back(f);
  }
  return s;
}

}  // namespace

static void BM_HochsterDepth(benchmark::State& state) {
  const FFamilySpec spec = chain(static_cast<std::size_t>(state.range(0)));
  const MonomialIdeal a = spec.family().defining_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(depth(a, FieldSpec::rationals()));
  state.SetLabel("n=" + std::to_string(spec.n));
}
BENCHMARK(BM_HochsterDepth)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_DepthFromLinks(benchmark::State& state) {
  const SimplicialComplex c = complex_of(chain(static_cast<std::size_t>(state.range(0))).family().defining_ideal());
  for (auto _ : state) benchmark::DoNotOptimize(depth_from_links(c, FieldSpec::rationals()));
}
BENCHMARK(BM_DepthFromLinks)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Conductor(benchmark::State& state) {
  const PullbackFamily fam = chain(static_cast<std::size_t>(state.range(0))).family();
  for (auto _ : state) benchmark::DoNotOptimize(conductor(fam).ideal);
}
BENCHMARK(BM_Conductor)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_FamilyReport(benchmark::State& state) {
  const FFamilySpec spec{6, {{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 1, 2}}};
  for (auto _ : state) benchmark::DoNotOptimize(f_family_report(spec).ok());
}
BENCHMARK(BM_FamilyReport)->Unit(benchmark::kMillisecond);

static void BM_SubalgebraClosure(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const FieldSpec f = FieldSpec::rationals();
  const std::vector<Series> gens = {parse_series("t^2+t^3", f), parse_series("t^4", f), parse_series("t^6", f)};
  for (auto _ : state) benchmark::DoNotOptimize(TruncatedSubalgebra::closure(gens, f, n).conductor_exponent());
}
BENCHMARK(BM_SubalgebraClosure)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

static void BM_ReducedHomology(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<VarMask> facets;
  for (std::size_t v = 0; v < n; ++v) facets.push_back(full_mask(n) & ~(VarMask{1} << v));
  const SimplicialComplex sphere(VarContext::indexed(n), facets);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(sphere, FieldSpec::prime(2)).ranks);
}
BENCHMARK(BM_ReducedHomology)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
