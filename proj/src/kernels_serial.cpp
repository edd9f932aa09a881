#include "gaschutz/kernels.hpp"

namespace gaschutz::kernels {

std::vector<std::vector<Index>> fibers_in(const GroupHom &f, const Subgroup &subgroup,
                                          std::span<const Index> tuple) {
  std::vector<std::vector<Index>> fibers(tuple.size());
  for (Index p : subgroup.elements())
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (f(p) == tuple[i])
        fibers[i].push_back(p);
  return fibers;
}

std::uint64_t count_generating_serial(const FiniteGroup &group,
                                      std::span<const std::vector<Index>> fibers,
                                      std::size_t target_order) {
  const std::size_t n = fibers.size();
  for (const auto &fiber : fibers)
    if (fiber.empty())
      return 0;

  ClosureScratch scratch(group.order());
  std::vector<std::size_t> digit(n, 0);
  std::vector<Index> tuple(n);
  for (std::size_t i = 0; i < n; ++i)
    tuple[i] = fibers[i][0];

  std::uint64_t count = 0;
  while (true) {
    if (scratch.closure_size(group, tuple, target_order) >= target_order)
      ++count;
    // Odometer step, last position fastest.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < fibers[pos].size()) {
        tuple[pos] = fibers[pos][digit[pos]];
        break;
      }
      digit[pos] = 0;
      tuple[pos] = fibers[pos][0];
      if (pos == 0)
        return count;
    }
    if (n == 0)
      return count;
  }
}

std::vector<std::uint64_t> phi_batch_serial(const GroupHom &f, const Subgroup &subgroup,
                                            std::span<const std::vector<Index>> tuples) {
  std::vector<std::uint64_t> out(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    auto fibers = fibers_in(f, subgroup, tuples[t]);
    out[t] = count_generating_serial(*f.source(), fibers, subgroup.order());
  }
  return out;
}

} // namespace gaschutz::kernels

namespace gaschutz {

std::uint64_t count_generating(const FiniteGroup &group, std::span<const std::vector<Index>> fibers,
                               std::size_t target_order, Backend backend) {
  return backend == Backend::OpenMP ? kernels::count_generating_omp(group, fibers, target_order)
                                    : kernels::count_generating_serial(group, fibers, target_order);
}

std::vector<std::uint64_t> phi_batch(const GroupHom &f, const Subgroup &subgroup,
                                     std::span<const std::vector<Index>> tuples, Backend backend) {
  return backend == Backend::OpenMP ? kernels::phi_batch_omp(f, subgroup, tuples)
                                    : kernels::phi_batch_serial(f, subgroup, tuples);
}

} // namespace gaschutz
