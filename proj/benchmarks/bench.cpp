#include <benchmark/benchmark.h>

#include "serreq/groebner.hpp"
#include "serreq/serre.hpp"
#include "serreq/testkit.hpp"
#include "serreq/zmod.hpp"

namespace {

using namespace serreq;

void BM_buchberger(benchmark::State& state) {
  RingPtr ring = standard_ring({"x", "y", "z"});
  std::vector<PolyVector> gens = {
      parse_poly(ring, 1, "x^2 + y^2 + z^2"),
      parse_poly(ring, 1, "x*y + y*z"),
      parse_poly(ring, 1, "y^3 - z^3"),
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(buchberger(gens, TermOrder::degrevlex()));
}
BENCHMARK(BM_buchberger);

void BM_snf(benchmark::State& state) {
  Rng rng(7);
  std::uniform_int_distribution<long long> d(-20, 20);
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m.at(i, j) = Integer(d(rng));
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_snf);

void BM_serre_equal(benchmark::State& state) {
  auto cat = ZModCategory::create();
  ThickSubcategory torsion = torsion_subcategory(cat);
  Sampler s = zmod_sampler(cat);
  Rng rng(11);
  auto pair = random_parallel_gabriel(rng, s, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(serre_equal(pair[0], pair[1], torsion));
}
BENCHMARK(BM_serre_equal);

}  // namespace

BENCHMARK_MAIN();
