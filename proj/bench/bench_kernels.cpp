// Serial reference vs OpenMP for the exhaustive lift-counting kernels.
#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

#include "gaschutz/kernels.hpp"
#include "gaschutz/lifts.hpp"
#include "gaschutz/notation.hpp"

using namespace gaschutz;

namespace {

struct Workload {
  GroupHom hom;
  std::vector<std::vector<Index>> tuples;
};

// S4 onto S4/V4 and n-tuples over the quotient.
Workload s4_workload(std::size_t n) {
  auto g = group_from_spec("sym:4");
  auto normals = normal_subgroups(g);
  auto v4 = std::find_if(normals.begin(), normals.end(), [](const Subgroup &s) { return s.order() == 4; });
  Quotient q = quotient(g, *v4);
  return {q.projection, generating_tuple_entries(q.group, n)};
}

Workload &workload(std::size_t n) {
  static Workload w2 = s4_workload(2), w3 = s4_workload(3);
  return n == 2 ? w2 : w3;
}

void count_generating_bench(benchmark::State &state, Backend backend) {
  auto g = group_from_spec("sym:4");
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<Index>> fibers(n, g->full_set().indices<Index>());
  for (auto _ : state)
    benchmark::DoNotOptimize(count_generating(*g, fibers, g->order(), backend));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(std::pow(g->order(), n)));
}

void phi_batch_bench(benchmark::State &state, Backend backend) {
  auto &w = workload(static_cast<std::size_t>(state.range(0)));
  Subgroup full = Subgroup::full(w.hom.source());
  for (auto _ : state)
    benchmark::DoNotOptimize(phi_batch(w.hom, full, w.tuples, backend));
}

} // namespace

BENCHMARK_CAPTURE(count_generating_bench, serial, Backend::Serial)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(count_generating_bench, openmp, Backend::OpenMP)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(phi_batch_bench, serial, Backend::Serial)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(phi_batch_bench, openmp, Backend::OpenMP)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
