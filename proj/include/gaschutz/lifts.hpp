#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "gaschutz/finite_group.hpp"
#include "gaschutz/kernels.hpp"

namespace gaschutz {

/// An ordered tuple of elements together with the subgroup it generates.
struct GeneratingTuple {
  GroupPtr group;
  std::vector<Index> entries;
  Subgroup generated;

  static GeneratingTuple of(const GroupPtr &group, std::vector<Index> entries);
  bool generates() const { return generated.is_full(); }
  std::size_t size() const { return entries.size(); }
};

/// Minimal number of generators; 0 for the trivial group.
std::size_t min_generators(const GroupPtr &group);

/// All n-tuples generating `group`, in lexicographic index order.
std::vector<GeneratingTuple> generating_tuples(const GroupPtr &group, std::size_t n);

/// Same enumeration, entries only.
std::vector<std::vector<Index>> generating_tuple_entries(const GroupPtr &group, std::size_t n);

/// {p in F : f(p) = h}, ascending.
std::vector<Index> lift_fiber(const GroupHom &f, const Subgroup &subgroup, Index h);

enum class PhiMethod { Brute, Recursive };

/// Number of lifts of `tuple` into `subgroup` that generate `subgroup`.
struct PhiReport {
  Subgroup subgroup;
  std::vector<Index> tuple;
  std::size_t n;
  std::uint64_t count;
  PhiMethod method;
};

/// Counts by enumerating the product of fibers.
PhiReport phi_brute(const GroupHom &f, const Subgroup &subgroup, std::span<const Index> tuple,
                    Backend backend = Backend::OpenMP);

/// Counts through the subtraction recursion
///   phi(F, h) = |F ∩ ker f|^n - sum over proper E < F with f(E) = target of phi(E, h),
/// memoized on (member set of F, h). One instance serves one homomorphism and
/// may be shared between threads.
class PhiRecursion {
public:
  explicit PhiRecursion(GroupHom f);

  const GroupHom &hom() const { return f_; }
  /// Subgroups of the source mapping onto the target, ascending order.
  const std::vector<Subgroup> &onto_subgroups() const { return onto_; }

  PhiReport phi(const Subgroup &subgroup, std::span<const Index> tuple);

  std::size_t memo_size() const;

private:
  struct Key {
    Bitset members;
    std::vector<Index> tuple;
    friend bool operator==(const Key &, const Key &) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key &k) const;
  };

  std::uint64_t count(std::size_t subgroup_index, std::span<const Index> tuple);

  GroupHom f_;
  Subgroup kernel_;
  std::vector<Subgroup> onto_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> onto_index_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, std::uint64_t, KeyHash> memo_;
};

PhiReport phi_recursive(const GroupHom &f, const Subgroup &subgroup, std::span<const Index> tuple);

/// Lexicographically first tuple g (in fiber-product order) with f(g_i) = h_i
/// generating the source, or nullopt. Throws PreconditionError if f is not
/// onto or h does not generate the target.
std::optional<std::vector<Index>> find_generating_lift(const GroupHom &f,
                                                       std::span<const Index> tuple);

struct GaschutzReport {
  std::size_t n = 0;
  std::size_t min_generators = 0;
  std::size_t tuple_count = 0;
  std::uint64_t min_phi = 0;
  std::uint64_t max_phi = 0;
  /// phi value -> number of target tuples attaining it.
  std::map<std::uint64_t, std::size_t> phi_histogram;
  /// Generating target tuples without a generating lift.
  std::vector<std::vector<Index>> violations;

  bool verified() const { return violations.empty(); }
  bool phi_constant() const { return min_phi == max_phi; }
};

/// Checks every generating n-tuple of the target for a generating lift.
/// Throws PreconditionError if f is not onto or n < d(source).
GaschutzReport verify_epi_gaschutz(const GroupHom &f, std::size_t n,
                                   Backend backend = Backend::OpenMP);

/// Minimal m such that for every quotient map G -> G/N and every generating
/// n-tuple of G/N with n >= m a generating lift exists. Tuple sizes up to
/// d(G) are checked exhaustively; beyond that the lifting lemma applies.
std::size_t gaschutz_rank_over_quotients(const GroupPtr &group);

} // namespace gaschutz
