#include <benchmark/benchmark.h>

#include <random>

#include "pcsp/classify.hpp"
#include "pcsp/gf2.hpp"
#include "pcsp/oracle.hpp"
#include "pcsp/solvers.hpp"

using namespace pcsp;

namespace {

Family hitting_family() {
  return make_family({{make_ham(3, weight_set({1})), make_ham(3, weight_set({1, 2}))},
                      make_not()},
                     {"R", "NOT"});
}

Family hard_family() {
  return make_family({{make_ham(3, weight_set_range(1, 3)), make_ham(3, weight_set_range(1, 3))},
                      make_not()},
                     {"R", "NOT"});
}

Instance chain_instance(int n) {
  Instance inst;
  inst.num_vars = n;
  for (int i = 0; i + 2 < n; ++i) inst.clauses.push_back({0, {i, i + 1, i + 2}});
  inst.clauses.push_back({1, {0, n - 1}});
  return inst;
}

} // namespace

static void BM_MajBruteForceClosure(benchmark::State& state) {
  const Relation r = make_ham(4, weight_set({2}));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_closure(r, FamilyKind::Maj, 11));
}
BENCHMARK(BM_MajBruteForceClosure);

static void BM_AtBruteForceClosure(benchmark::State& state) {
  const Relation r = make_ham(4, weight_set({1, 2}));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_closure(r, FamilyKind::At, 17));
}
BENCHMARK(BM_AtBruteForceClosure);

static void BM_LpDecision(benchmark::State& state) {
  const Family fam = hitting_family();
  const Instance inst = chain_instance(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_lp_decision(fam, inst, FamilyKind::At).yes());
}
BENCHMARK(BM_LpDecision)->Arg(4)->Arg(6)->Arg(8);

static void BM_AtAffineSolve(benchmark::State& state) {
  const Family fam = hitting_family();
  const Instance inst = chain_instance(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_at_affine(fam, inst).yes());
}
BENCHMARK(BM_AtAffineSolve)->Arg(6)->Arg(10);

static void BM_EnumerateFolded(benchmark::State& state) {
  const Family fam = hard_family();
  EnumOptions opt;
  opt.folded_only = true;
  const int arity = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_weak_polymorphisms(fam, arity, opt).size());
}
BENCHMARK(BM_EnumerateFolded)->Arg(3)->Arg(4);

static void BM_GaussF2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(12345);
  F2System sys(n);
  for (int e = 0; e < n; ++e) {
    std::vector<int> sup;
    for (int v = 0; v < n; ++v)
      if (rng() & 1) sup.push_back(v);
    sys.add(std::move(sup), static_cast<int>(rng() & 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(gauss_f2(sys));
}
BENCHMARK(BM_GaussF2)->Arg(64)->Arg(256);

static void BM_BruteForceOracle(benchmark::State& state) {
  const Family fam = hitting_family();
  const Instance inst = chain_instance(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_status(fam, inst, 20));
}
BENCHMARK(BM_BruteForceOracle)->Arg(12)->Arg(16);

static void BM_Classify(benchmark::State& state) {
  const Family fam = hard_family();
  for (auto _ : state) benchmark::DoNotOptimize(classify(fam).np_hard());
}
BENCHMARK(BM_Classify);

BENCHMARK_MAIN();
