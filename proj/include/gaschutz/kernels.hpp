#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gaschutz/finite_group.hpp"

namespace gaschutz {

enum class Backend { Serial, OpenMP };

/// Exhaustive lift-counting kernels. Each has a serial reference and an
/// OpenMP version; tests require both to agree exactly.
namespace kernels {

/// Number of tuples in fibers[0] x ... x fibers[n-1] whose generated
/// subgroup has `target_order` elements. Callers pass fibers inside a
/// subgroup F of that order, so this counts the tuples generating F.
std::uint64_t count_generating_serial(const FiniteGroup &group,
                                      std::span<const std::vector<Index>> fibers,
                                      std::size_t target_order);
std::uint64_t count_generating_omp(const FiniteGroup &group,
                                   std::span<const std::vector<Index>> fibers,
                                   std::size_t target_order);

/// Lift counts phi(F, h) for a batch of target tuples: entry i is the
/// number of lifts of tuples[i] into F that generate F.
std::vector<std::uint64_t> phi_batch_serial(const GroupHom &f, const Subgroup &subgroup,
                                            std::span<const std::vector<Index>> tuples);
std::vector<std::uint64_t> phi_batch_omp(const GroupHom &f, const Subgroup &subgroup,
                                         std::span<const std::vector<Index>> tuples);

/// Fibers of f restricted to `subgroup` over each entry of `tuple`.
std::vector<std::vector<Index>> fibers_in(const GroupHom &f, const Subgroup &subgroup,
                                          std::span<const Index> tuple);

} // namespace kernels

std::uint64_t count_generating(const FiniteGroup &group, std::span<const std::vector<Index>> fibers,
                               std::size_t target_order, Backend backend);

std::vector<std::uint64_t> phi_batch(const GroupHom &f, const Subgroup &subgroup,
                                     std::span<const std::vector<Index>> tuples, Backend backend);

} // namespace gaschutz
