#include <benchmark/benchmark.h>

#include "cliffsig/product_table.hpp"
#include "cliffsig/random.hpp"

using namespace cliffsig;

static void BM_BaseTable(benchmark::State& state) {
  Signature sig = make_signature(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) {
    ProductTable t = ProductTable::base(sig);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_BaseTable)->Arg(4)->Arg(6)->Arg(8);

static void BM_VeeTable(benchmark::State& state) {
  Signature sig = make_signature(static_cast<int>(state.range(0)), 0);
  ProductTable base = ProductTable::base(sig);
  for (auto _ : state) {
    ProductTable t = base.vee(0);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_VeeTable)->Arg(4)->Arg(6)->Arg(8);

static void BM_TableProduct(benchmark::State& state) {
  Signature sig = make_signature(static_cast<int>(state.range(0)), 0);
  ProductTable t = ProductTable::base(sig).vee(0);
  Rng rng(1);
  Multivector a = random_multivector(sig, rng);
  Multivector b = random_multivector(sig, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(table_product(t, a, b));
  }
}
BENCHMARK(BM_TableProduct)->Arg(4)->Arg(6)->Arg(8);

static void BM_VerifyIsomorphism(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Signature sig = make_signature(n, 0);
  ProductTable lhs = ProductTable::base(sig).vee(0);
  std::vector<int> squares(static_cast<size_t>(n), -1);
  squares[0] = +1;
  ProductTable rhs = ProductTable::base(signature_from_squares(squares));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_isomorphism(lhs, rhs));
  }
}
BENCHMARK(BM_VerifyIsomorphism)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
