#include "gaschutz/kernels.hpp"

#include <omp.h>

namespace gaschutz::kernels {

std::uint64_t count_generating_omp(const FiniteGroup &group,
                                   std::span<const std::vector<Index>> fibers,
                                   std::size_t target_order) {
  const std::size_t n = fibers.size();
  std::int64_t total = 1;
  for (const auto &fiber : fibers)
    total *= static_cast<std::int64_t>(fiber.size());
  if (total == 0)
    return 0;

  std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count)
  {
    ClosureScratch scratch(group.order());
    std::vector<Index> tuple(n);
#pragma omp for schedule(static)
    for (std::int64_t linear = 0; linear < total; ++linear) {
      // Mixed-radix decode, last position least significant.
      std::int64_t rest = linear;
      for (std::size_t pos = n; pos-- > 0;) {
        const auto radix = static_cast<std::int64_t>(fibers[pos].size());
        tuple[pos] = fibers[pos][static_cast<std::size_t>(rest % radix)];
        rest /= radix;
      }
      if (scratch.closure_size(group, tuple, target_order) >= target_order)
        ++count;
    }
  }
  return count;
}

std::vector<std::uint64_t> phi_batch_omp(const GroupHom &f, const Subgroup &subgroup,
                                         std::span<const std::vector<Index>> tuples) {
  std::vector<std::uint64_t> out(tuples.size());
  const auto count = static_cast<std::int64_t>(tuples.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t t = 0; t < count; ++t) {
    auto fibers = fibers_in(f, subgroup, tuples[static_cast<std::size_t>(t)]);
    out[static_cast<std::size_t>(t)] =
        count_generating_serial(*f.source(), fibers, subgroup.order());
  }
  return out;
}

} // namespace gaschutz::kernels
