#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gaschutz/finite_group.hpp"
#include "gaschutz/kernels.hpp"

namespace gaschutz {

/// A finite chain G_1 <- G_2 <- ... <- G_M of epimorphisms together with
/// kernel images K_m = p_m(K) of a normal subgroup K of the deepest level.
/// Index m-1 below refers to level m.
struct Tower {
  std::vector<GroupPtr> levels;
  std::vector<GroupHom> connecting; // connecting[m]: levels[m+1] -> levels[m]
  std::vector<Subgroup> kernels;    // K_m, normal in levels[m]
  std::vector<GroupHom> to_level;   // p_m: deepest -> levels[m]
  std::vector<Quotient> quotients;  // levels[m] -> levels[m] / K_m

  std::size_t depth() const { return levels.size(); }
  const GroupPtr &deepest() const { return levels.back(); }
  /// The base quotient G_M / K_M.
  const Quotient &base() const { return quotients.back(); }
};

/// Verifies every connecting map is onto, every K_m is normal, and
/// p_{m+1,m}(K_{m+1}) = K_m. Throws PreconditionError otherwise.
Tower make_tower(std::vector<GroupPtr> levels, std::vector<GroupHom> connecting,
                 std::vector<Subgroup> kernels);

/// Pushes the deepest kernel down the chain.
Tower make_tower(std::vector<GroupPtr> levels, std::vector<GroupHom> connecting,
                 const Subgroup &deepest_kernel);

/// Z/p <- Z/p^2 <- ... <- Z/p^M with reduction maps and K the kernel of
/// Z/p^M -> Z/p.
Tower build_cyclic_tower(long p, std::size_t depth, std::size_t order_cap = kDefaultOrderCap);

/// Levels G/N_1 <- G/N_2 <- ... for a descending chain of normal subgroups
/// of G, with K the kernel of the deepest level onto the first.
Tower build_quotient_tower(const GroupPtr &group, const std::vector<Subgroup> &chain);

/// "cyclic:p:M", "sym4" (S3 <- S4) or "dihedral8" (V4 <- D8).
Tower build_named_tower(std::string_view family, std::size_t order_cap = kDefaultOrderCap);

/// The first `depth` levels, with kernel K_depth.
Tower truncated(const Tower &tower, std::size_t depth);

/// Image of a base-quotient tuple in G_m / K_m (m is 1-based).
std::vector<Index> project_base_tuple(const Tower &tower, std::span<const Index> tuple, std::size_t level);

/// Per level m, the number of k in K_m^n with p_m(g) * k generating G_m.
std::vector<std::uint64_t> level_sets_nonempty(const Tower &tower, std::span<const Index> lift,
                                               Backend backend = Backend::OpenMP);

struct TowerLift {
  std::vector<Index> deepest;                  // generating lift in G_M
  std::vector<std::vector<Index>> per_level;   // p_m(deepest)
  std::vector<bool> level_generates;
  std::vector<Index> arbitrary_lift;           // fiber-first lift used for level sets
  std::vector<std::uint64_t> level_counts;     // level_sets_nonempty of arbitrary_lift

  bool generates_every_level() const;
  bool level_sets_positive() const;
};

/// Lifts a generating tuple of G_M / K_M to a tuple of G_M generating every
/// level. Throws PreconditionError if n < d(G_M) or the tuple does not
/// generate the base quotient.
TowerLift tower_lift(const Tower &tower, std::span<const Index> tuple);

} // namespace gaschutz
