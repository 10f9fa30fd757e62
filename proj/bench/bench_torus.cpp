#include <benchmark/benchmark.h>

#include <random>

#include "qca/lusztig.hpp"
#include "qca/torus.hpp"
#include "qca/worked/kronecker.hpp"
#include "qca/worked/rank2.hpp"

using namespace qca;

namespace {

TorusElement random_element(std::mt19937_64& rng, const FormPtr& f, int terms) {
  std::uniform_int_distribution<int> e(-6, 6), c(-5, 5), p(-8, 8);
  TorusElement x(f);
  for (int t = 0; t < terms; ++t) {
    Lattice a(static_cast<std::size_t>(f->dim()));
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = e(rng);
    x.add_term(a, LaurentPoly::monomial(c(rng), p(rng)) + LaurentPoly::monomial(c(rng), p(rng)));
  }
  return x;
}

struct Operands {
  TorusElement x, y;
};

Operands operands(int terms) {
  std::mt19937_64 rng(101);
  const FormPtr f = rank2_principal_seed(2, 1).form();
  return {random_element(rng, f, terms), random_element(rng, f, terms)};
}

void BM_mul_serial(benchmark::State& state) {
  const Operands o = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(torus_mul_serial(o.x, o.y));
}

void BM_mul_parallel(benchmark::State& state) {
  const Operands o = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(torus_mul_parallel(o.x, o.y));
}

// compare_bases over a fresh pair each round, so nothing is memoized
void BM_compare_bases(benchmark::State& state) {
  const auto window = box({-2, -2, 0, 0}, {2, 2, 0, 0});
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const MutationPair pair(rank2_principal_seed(2, 1));
    benchmark::DoNotOptimize(compare_bases(pair, window, jobs));
  }
}

}  // namespace

BENCHMARK(BM_mul_serial)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_mul_parallel)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_compare_bases)->Arg(1)->Arg(0);

BENCHMARK_MAIN();
