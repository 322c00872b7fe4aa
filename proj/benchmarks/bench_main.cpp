#include <benchmark/benchmark.h>

#include <nsg/classify.hpp>
#include <nsg/extensions.hpp>
#include <nsg/presentation.hpp>
#include <nsg/trunc_algebra.hpp>
#include <nsg/ulrich.hpp>

using namespace nsg;

static void BM_MakeSemigroup(benchmark::State& state) {
  for (auto _ : state) {
    NumericalSemigroup h({5, 7, 9, 13});
    benchmark::DoNotOptimize(h.frobenius());
  }
}
BENCHMARK(BM_MakeSemigroup);

static void BM_Classify(benchmark::State& state) {
  NumericalSemigroup h({6, 8, 10, 11});
  for (auto _ : state) {
    auto rep = classify(h);
    benchmark::DoNotOptimize(rep.sally_rank);
  }
}
BENCHMARK(BM_Classify);

static void BM_Oversemigroups(benchmark::State& state) {
  NumericalSemigroup h({5, 7, 9, 13});
  for (auto _ : state) {
    auto over = oversemigroups(h);
    benchmark::DoNotOptimize(over.size());
  }
}
BENCHMARK(BM_Oversemigroups);

static void BM_EnumerateUlrich(benchmark::State& state) {
  NumericalSemigroup h({6, 8, 10, 11});
  for (auto _ : state) {
    auto e = enumerate_monomial_ulrich(h, state.range(0));
    benchmark::DoNotOptimize(e.found.size());
  }
}
BENCHMARK(BM_EnumerateUlrich)->Arg(24)->Arg(44);

static void BM_TruncClosureF2(benchmark::State& state) {
  NumericalSemigroup h({6, 8, 10, 11});
  auto a = TruncAlgebra<FieldFp>::semigroup_ring(h, FieldFp(2), 76);
  auto g1 = a.from_series(parse_series("t^8+t^10"));
  auto g2 = a.from_series(parse_series("t^11+t^12"));
  for (auto _ : state) {
    auto ideal = ideal_closure(a, {g1, g2});
    benchmark::DoNotOptimize(ideal.space.dim());
  }
}
BENCHMARK(BM_TruncClosureF2);

static void BM_UlrichVerdictQ(benchmark::State& state) {
  NumericalSemigroup h({6, 8, 10, 11});
  for (auto _ : state) {
    auto v = verify_ideal(h, FieldSpec::rationals(), {"t^8+2*t^10+3*t^12", "t^11"});
    benchmark::DoNotOptimize(v.is_ulrich);
  }
}
BENCHMARK(BM_UlrichVerdictQ);

static void BM_Prop31(benchmark::State& state) {
  NumericalSemigroup h({4, 7, 9});
  NumericalSemigroup t({4, 5, 6, 7});
  for (auto _ : state) {
    auto cert = verify_extension_canonical(h, t, "t^4", 40);
    benchmark::DoNotOptimize(cert.ok);
  }
}
BENCHMARK(BM_Prop31);

static void BM_KernelEvidence(benchmark::State& state) {
  const std::vector<std::string> vars{"X", "Y", "Z", "W"};
  auto p = [&](const std::string& s) { return SparsePoly::parse(vars, s); };
  std::vector<std::vector<SparsePoly>> m{{p("W"), p("X^2"), p("X*Y"), p("Y*Z")},
                                         {p("X^2"), p("Y"), p("Z"), p("W")}};
  auto gens = minors2(m);
  gens.push_back(p("Y^2-X*Z"));
  gens.push_back(p("Z^2-X*W"));
  NumericalSemigroup h({5, 7, 9, 13});
  for (auto _ : state) {
    auto ev = kernel_evidence(gens, h, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(ev.ok);
  }
}
BENCHMARK(BM_KernelEvidence)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
