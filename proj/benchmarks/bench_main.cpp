#include <benchmark/benchmark.h>

#include <random>

#include "braidlab/four_strand.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/kernel_abelianization.hpp"
#include "braidlab/named_elements.hpp"
#include "braidlab/normal_form.hpp"
#include "braidlab/sliding.hpp"

namespace {

using namespace braidlab;

BraidWord random_word(std::mt19937_64& rng, int n, int len) {
  BraidWord w(n);
  std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
  for (int i = 0; i < len; ++i) {
    const int k = gen(rng);
    w.append_letter(sign(rng) ? k : -k);
  }
  return w;
}

void normal_form_bench(benchmark::State& state, StructureKind kind) {
  const int n = static_cast<int>(state.range(0));
  const int len = static_cast<int>(state.range(1));
  const auto g = make_structure(kind, n);
  std::mt19937_64 rng(7);
  const BraidWord w = random_word(rng, n, len);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(*g, w));
  state.SetItemsProcessed(state.iterations() * len);
}

void BM_NormalFormClassical(benchmark::State& state) { normal_form_bench(state, StructureKind::Classical); }
void BM_NormalFormBand(benchmark::State& state) { normal_form_bench(state, StructureKind::Band); }

void BM_SlidingCircuits(benchmark::State& state) {
  const auto kind = state.range(0) == 0 ? StructureKind::Classical : StructureKind::Band;
  const auto g = make_structure(kind, 4);
  std::mt19937_64 rng(8);
  const BraidWord w = random_word(rng, 4, 12);
  for (auto _ : state) benchmark::DoNotOptimize(sliding_circuits(*g, w));
}

void BM_KernelAbelianization(benchmark::State& state) {
  const FinitePresentation p = b4prime_presentation();
  const FiniteImageMap f = b4prime_image_map();
  for (auto _ : state) benchmark::DoNotOptimize(KernelAbelianization::compute(p, f));
}

void BM_K4Rewrite(benchmark::State& state) {
  // Product of conjugates of c stays inside K4.
  std::mt19937_64 rng(9);
  BraidWord x(4);
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
    const BraidWord h = random_word(rng, 4, 4);
    x.append(conjugate(i % 2 ? elem_c() : inverse(elem_c()), h));
  }
  for (auto _ : state) benchmark::DoNotOptimize(k4_rewrite(x));
}

}  // namespace

BENCHMARK(BM_NormalFormClassical)->Args({4, 64})->Args({8, 256})->Args({12, 1024});
BENCHMARK(BM_NormalFormBand)->Args({4, 64})->Args({8, 256})->Args({12, 1024});
BENCHMARK(BM_SlidingCircuits)->Arg(0)->Arg(1);
BENCHMARK(BM_KernelAbelianization);
BENCHMARK(BM_K4Rewrite)->Arg(4)->Arg(16);
BENCHMARK_MAIN();
