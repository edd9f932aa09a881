#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "gaschutz/bitset.hpp"
#include "gaschutz/permutation.hpp"

namespace gaschutz {

using Index = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A fully tabulated finite permutation group. Elements are numbered
/// 0..order-1 in breadth-first closure order; index 0 is the identity.
/// Immutable once built and shared through GroupPtr.
class FiniteGroup {
public:
  /// Closes `gens` and tabulates multiplication. The generator list is kept
  /// in the given order (duplicates and identities included) so that words
  /// and homomorphism specs can refer to generators by position.
  static GroupPtr from_generators(std::vector<Permutation> gens, std::size_t degree = 0,
                                  std::size_t order_cap = kDefaultOrderCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return elements_.degree(); }
  static constexpr Index identity() { return 0; }

  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Index inv(Index a) const { return inverse_[a]; }
  Index pow(Index a, long long e) const;
  std::size_t element_order(Index a) const;

  const Permutation &element(Index i) const { return elements_[i]; }
  const ElementSet &elements() const { return elements_; }

  /// Throws PreconditionError if p is not in the group.
  Index index_of(const Permutation &p) const;

  const std::vector<Permutation> &generator_perms() const { return generator_perms_; }
  const std::vector<Index> &generators() const { return generators_; }

  Bitset full_set() const;
  Bitset trivial_set() const;

private:
  FiniteGroup() = default;

  ElementSet elements_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<Permutation> generator_perms_;
  std::vector<Index> generators_;
};

/// Member set of the subgroup generated by `gens` inside `group`.
Bitset closure(const FiniteGroup &group, std::span<const Index> gens);

/// Reusable buffers for repeated closure-size queries in hot loops.
class ClosureScratch {
public:
  explicit ClosureScratch(std::size_t order) : seen_(order, 0), queue_(order) {}

  /// Order of the subgroup generated by `gens`. Stops early once `limit`
  /// elements are found (pass the order of the target subgroup).
  std::size_t closure_size(const FiniteGroup &group, std::span<const Index> gens,
                           std::size_t limit = static_cast<std::size_t>(-1));

private:
  std::vector<std::uint32_t> seen_;
  std::vector<Index> queue_;
  std::uint32_t stamp_ = 0;
};

/// A subgroup of a tabulated group, identified by its member set.
class Subgroup {
public:
  Subgroup(GroupPtr parent, Bitset members);

  static Subgroup full(const GroupPtr &parent);
  static Subgroup trivial(const GroupPtr &parent);
  /// Subgroup generated by `gens`.
  static Subgroup generated_by(const GroupPtr &parent, std::span<const Index> gens);

  const GroupPtr &parent() const { return parent_; }
  const Bitset &members() const { return members_; }
  const std::vector<Index> &elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Index i) const { return members_.test(i); }
  bool is_full() const { return order() == parent_->order(); }
  bool is_subgroup_of(const Subgroup &other) const { return members_.is_subset_of(other.members_); }

  bool is_normal() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

private:
  GroupPtr parent_;
  Bitset members_;
  std::vector<Index> elements_;
};

/// All subgroups, each once, sorted by (order, member indices).
std::vector<Subgroup> subgroups(const GroupPtr &group);

/// The normal members of subgroups(group), same order.
std::vector<Subgroup> normal_subgroups(const GroupPtr &group);

/// A homomorphism stored as its full element table.
class GroupHom {
public:
  /// Validates the table exhaustively; throws PreconditionError if it is not
  /// multiplicative.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Index> table);

  static GroupHom identity(const GroupPtr &group);

  const GroupPtr &source() const { return source_; }
  const GroupPtr &target() const { return target_; }
  Index operator()(Index x) const { return table_[x]; }
  const std::vector<Index> &table() const { return table_; }

  Subgroup kernel() const;
  Subgroup image() const;
  /// Image of a subgroup of the source, as a subgroup of the target.
  Subgroup image_of(const Subgroup &sub) const;
  bool is_epimorphism() const;
  /// f(sub) equals the whole target.
  bool maps_onto(const Subgroup &sub) const;

private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Index> table_;
};

/// Extends an assignment on a generating set of G to a homomorphism.
/// Throws PreconditionError if the listed elements do not generate G, or if
/// the assignment violates a relation of G.
GroupHom hom_from_images(const GroupPtr &source, const GroupPtr &target,
                         std::span<const std::pair<Index, Index>> generator_images);

/// The homomorphism sending the i-th stored generator of `source` to
/// `images[i]`.
GroupHom hom_from_generator_images(const GroupPtr &source, const GroupPtr &target,
                                   std::span<const Index> images);

/// Composite g(f(x)).
GroupHom compose(const GroupHom &g, const GroupHom &f);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// G/N realized as the permutation action of G on the left cosets of N.
/// Throws PreconditionError if N is not normal.
Quotient quotient(const GroupPtr &group, const Subgroup &normal);

} // namespace gaschutz
