#include <benchmark/benchmark.h>

#include "qgrowth/checks.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/rules.hpp"

namespace {

using namespace qgrowth;

void BM_QRatArithmetic(benchmark::State& state) {
  const QRat a = QRat::one_minus_qpow(3) / QRat::one_minus_qpow(2);
  const QRat b = QRat::q() / (QRat(1) + QRat::q());
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b - b);
}
BENCHMARK(BM_QRatArithmetic);

void BM_BranchInsertLetter(benchmark::State& state) {
  const auto p = rows_to_chain({{1, 1, 3, 4}, {3, 5, 8}, {6, 7}, {8, 8}}, 8);
  const BranchingRule rule = qcol_rule();
  for (auto _ : state) benchmark::DoNotOptimize(branch_insert_letter(rule, p, 5));
}
BENCHMARK(BM_BranchInsertLetter);

void BM_InsertionEngine(benchmark::State& state) {
  const BranchingRule rule = qcol_rule();
  const Word w = Permutation::identity(static_cast<int>(state.range(0))).as_word();
  for (auto _ : state) benchmark::DoNotOptimize(branch_insert_word(rule, w));
}
BENCHMARK(BM_InsertionEngine)->DenseRange(3, 6);

void BM_GrowthEngine(benchmark::State& state) {
  const Permutation sigma = Permutation::identity(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(growth_compute(GrowthVariant::qcol, sigma));
}
BENCHMARK(BM_GrowthEngine)->DenseRange(3, 6);

void BM_SymmetrySweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_symmetry("qcol", n, Engine::insertion));
}
BENCHMARK(BM_SymmetrySweep)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Conditions(benchmark::State& state) {
  const BranchingRule rule = qcol_rule();
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_conditions(rule, size, size + 1));
}
BENCHMARK(BM_Conditions)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
