#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

namespace gaschutz {

using Point = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 10000;

/// A bijection on {0, ..., degree-1}, stored as its image sequence.
class Permutation {
public:
  Permutation() = default;

  /// Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Non-trivial cycles, each starting at its smallest point, sorted.
  std::vector<std::vector<Point>> cycles() const;

  std::size_t hash() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> images_;
};

/// (p * q)(x) = p(q(x)). Throws DegreeMismatch.
Permutation compose(const Permutation &p, const Permutation &q);

inline Permutation operator*(const Permutation &p, const Permutation &q) {
  return compose(p, q);
}

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const { return p.hash(); }
};

/// A finite set of equal-degree permutations with O(1) membership.
/// Sets produced by close() are subgroups, listed in breadth-first order
/// with the identity first.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation> &elements() const { return elements_; }
  const Permutation &operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const Permutation &p) const { return index_.contains(p); }

  /// Index of p, or npos.
  std::size_t index_of(const Permutation &p) const;

  /// Returns false if already present.
  bool insert(Permutation p);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Smallest subgroup containing `gens`, by breadth-first closure under
/// right multiplication by the generators. An empty generating set yields
/// the trivial group of the given degree (degree is taken from the
/// generators otherwise).
ElementSet close(std::span<const Permutation> gens, std::size_t degree = 0,
                 std::size_t order_cap = kDefaultOrderCap);

/// Throws DegreeMismatch when degrees differ.
bool is_member(const ElementSet &set, const Permutation &p);

} // namespace gaschutz
