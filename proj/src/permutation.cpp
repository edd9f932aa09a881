#include "gaschutz/permutation.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gaschutz/error.hpp"

namespace gaschutz {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw PreconditionError("image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i)
    p.images_[i] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a >= degree)
        throw PreconditionError("cycle point " + std::to_string(a + 1) +
                                " exceeds degree " + std::to_string(degree));
      if (used[a])
        throw PreconditionError("cycles are not disjoint");
      used[a] = true;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the image sequence.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = p(q(static_cast<Point>(x)));
  return Permutation(std::move(images));
}

std::size_t ElementSet::index_of(const Permutation &p) const {
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

bool ElementSet::insert(Permutation p) {
  if (p.degree() != degree_)
    throw DegreeMismatch("element degree does not match set degree");
  auto [it, inserted] = index_.try_emplace(p, elements_.size());
  if (inserted)
    elements_.push_back(std::move(p));
  return inserted;
}

ElementSet close(std::span<const Permutation> gens, std::size_t degree,
                 std::size_t order_cap) {
  if (!gens.empty())
    degree = gens.front().degree();
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generators have inconsistent degrees");

  ElementSet set(degree);
  set.insert(Permutation::identity(degree));
  // For finite groups the monoid generated by gens is already the subgroup,
  // so inverses never need to be added explicitly.
  for (std::size_t next = 0; next < set.size(); ++next) {
    for (const auto &g : gens) {
      Permutation candidate = compose(set[next], g);
      if (set.contains(candidate))
        continue;
      if (set.size() >= order_cap)
        throw OrderCapExceeded("closure exceeds order cap " + std::to_string(order_cap));
      set.insert(std::move(candidate));
    }
  }
  return set;
}

bool is_member(const ElementSet &set, const Permutation &p) {
  if (p.degree() != set.degree())
    throw DegreeMismatch("permutation degree does not match set degree");
  return set.contains(p);
}

} // namespace gaschutz
