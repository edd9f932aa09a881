#include "gaschutz/finite_group.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "gaschutz/error.hpp"

namespace gaschutz {

GroupPtr FiniteGroup::from_generators(std::vector<Permutation> gens, std::size_t degree,
                                      std::size_t order_cap) {
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->elements_ = close(gens, degree, order_cap);
  const std::size_t n = group->elements_.size();

  group->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = group->elements_.index_of(compose(group->elements_[a], group->elements_[b]));
      group->table_[a * n + b] = static_cast<Index>(c);
    }

  group->inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    group->inverse_[a] = static_cast<Index>(group->elements_.index_of(group->elements_[a].inverse()));

  for (const auto &g : gens)
    group->generators_.push_back(static_cast<Index>(group->elements_.index_of(g)));
  group->generator_perms_ = std::move(gens);
  return group;
}

Index FiniteGroup::pow(Index a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Index result = identity();
  Index base = a;
  while (e > 0) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t k = 1;
  for (Index x = a; x != identity(); x = mul(x, a))
    ++k;
  return k;
}

Index FiniteGroup::index_of(const Permutation &p) const {
  if (p.degree() != degree())
    throw DegreeMismatch("permutation degree does not match group degree");
  std::size_t i = elements_.index_of(p);
  if (i == ElementSet::npos)
    throw PreconditionError("permutation is not an element of the group");
  return static_cast<Index>(i);
}

Bitset FiniteGroup::full_set() const {
  Bitset b(order());
  for (std::size_t i = 0; i < order(); ++i)
    b.set(i);
  return b;
}

Bitset FiniteGroup::trivial_set() const {
  Bitset b(order());
  b.set(identity());
  return b;
}

Bitset closure(const FiniteGroup &group, std::span<const Index> gens) {
  Bitset members(group.order());
  std::vector<Index> queue{FiniteGroup::identity()};
  members.set(FiniteGroup::identity());
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (Index g : gens) {
      Index y = group.mul(queue[next], g);
      if (!members.test(y)) {
        members.set(y);
        queue.push_back(y);
      }
    }
  }
  return members;
}

std::size_t ClosureScratch::closure_size(const FiniteGroup &group, std::span<const Index> gens,
                                         std::size_t limit) {
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  std::size_t head = 0, tail = 0;
  queue_[tail++] = FiniteGroup::identity();
  seen_[FiniteGroup::identity()] = stamp_;
  while (head < tail && tail < limit) {
    Index x = queue_[head++];
    for (Index g : gens) {
      Index y = group.mul(x, g);
      if (seen_[y] != stamp_) {
        seen_[y] = stamp_;
        queue_[tail++] = y;
      }
    }
  }
  return tail;
}

Subgroup::Subgroup(GroupPtr parent, Bitset members)
    : parent_(std::move(parent)), members_(std::move(members)),
      elements_(members_.indices<Index>()) {}

Subgroup Subgroup::full(const GroupPtr &parent) { return Subgroup(parent, parent->full_set()); }

Subgroup Subgroup::trivial(const GroupPtr &parent) { return Subgroup(parent, parent->trivial_set()); }

Subgroup Subgroup::generated_by(const GroupPtr &parent, std::span<const Index> gens) {
  return Subgroup(parent, closure(*parent, gens));
}

bool Subgroup::is_normal() const {
  const FiniteGroup &g = *parent_;
  for (Index x = 0; x < g.order(); ++x)
    for (Index n : elements_)
      if (!contains(g.mul(g.mul(x, n), g.inv(x))))
        return false;
  return true;
}

std::vector<Subgroup> subgroups(const GroupPtr &group) {
  const FiniteGroup &g = *group;
  std::vector<Bitset> found;
  std::vector<std::vector<Index>> found_gens;
  std::unordered_set<Bitset, BitsetHash> seen;

  // Seed with the cyclic subgroups; their generators are the only extension
  // candidates needed, since <S, a> depends only on <a>.
  std::vector<Index> cyclic_reps;
  for (Index a = 0; a < g.order(); ++a) {
    Index gen[] = {a};
    Bitset b = closure(g, gen);
    if (seen.insert(b).second) {
      found.push_back(std::move(b));
      found_gens.push_back({a});
      cyclic_reps.push_back(a);
    }
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Index r : cyclic_reps) {
      if (found[i].test(r))
        continue;
      std::vector<Index> gens = found_gens[i];
      gens.push_back(r);
      Bitset b = closure(g, gens);
      if (seen.insert(b).second) {
        found.push_back(std::move(b));
        found_gens.push_back(std::move(gens));
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto &b : found)
    out.emplace_back(group, std::move(b));
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr &group) {
  std::vector<Subgroup> out;
  for (auto &s : subgroups(group))
    if (s.is_normal())
      out.push_back(std::move(s));
  return out;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Index> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  const FiniteGroup &s = *source_;
  const FiniteGroup &t = *target_;
  if (table_.size() != s.order())
    throw PreconditionError("homomorphism table has wrong length");
  for (Index y : table_)
    if (y >= t.order())
      throw PreconditionError("homomorphism table entry out of range");
  for (Index x = 0; x < s.order(); ++x)
    for (Index y = 0; y < s.order(); ++y)
      if (table_[s.mul(x, y)] != t.mul(table_[x], table_[y]))
        throw PreconditionError("assignment is not multiplicative");
}

GroupHom GroupHom::identity(const GroupPtr &group) {
  std::vector<Index> table(group->order());
  for (Index i = 0; i < table.size(); ++i)
    table[i] = i;
  return GroupHom(group, group, std::move(table));
}

Subgroup GroupHom::kernel() const {
  Bitset b(source_->order());
  for (Index x = 0; x < table_.size(); ++x)
    if (table_[x] == FiniteGroup::identity())
      b.set(x);
  return Subgroup(source_, std::move(b));
}

Subgroup GroupHom::image() const { return image_of(Subgroup::full(source_)); }

Subgroup GroupHom::image_of(const Subgroup &sub) const {
  Bitset b(target_->order());
  for (Index x : sub.elements())
    b.set(table_[x]);
  return Subgroup(target_, std::move(b));
}

bool GroupHom::is_epimorphism() const { return image().is_full(); }

bool GroupHom::maps_onto(const Subgroup &sub) const { return image_of(sub).is_full(); }

GroupHom hom_from_images(const GroupPtr &source, const GroupPtr &target,
                         std::span<const std::pair<Index, Index>> generator_images) {
  const FiniteGroup &s = *source;
  const FiniteGroup &t = *target;
  for (auto [x, y] : generator_images)
    if (x >= s.order() || y >= t.order())
      throw PreconditionError("generator image index out of range");

  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> table(s.order(), unset);
  table[FiniteGroup::identity()] = FiniteGroup::identity();
  std::vector<Index> queue{FiniteGroup::identity()};
  for (std::size_t next = 0; next < queue.size(); ++next) {
    Index x = queue[next];
    for (auto [g, hg] : generator_images) {
      Index y = s.mul(x, g);
      Index fy = t.mul(table[x], hg);
      if (table[y] == unset) {
        table[y] = fy;
        queue.push_back(y);
      } else if (table[y] != fy) {
        throw PreconditionError("ill-defined assignment: generator images violate a relation");
      }
    }
  }
  if (queue.size() != s.order())
    throw PreconditionError("assigned elements do not generate the source group");
  try {
    return GroupHom(source, target, std::move(table));
  } catch (const PreconditionError &) {
    throw PreconditionError("ill-defined assignment: generator images violate a relation");
  }
}

GroupHom hom_from_generator_images(const GroupPtr &source, const GroupPtr &target,
                                   std::span<const Index> images) {
  const auto &gens = source->generators();
  if (images.size() != gens.size())
    throw PreconditionError("expected " + std::to_string(gens.size()) + " generator images, got " +
                            std::to_string(images.size()));
  std::vector<std::pair<Index, Index>> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i)
    pairs.emplace_back(gens[i], images[i]);
  return hom_from_images(source, target, pairs);
}

GroupHom compose(const GroupHom &g, const GroupHom &f) {
  if (f.target() != g.source())
    throw PreconditionError("homomorphisms are not composable");
  std::vector<Index> table(f.source()->order());
  for (Index x = 0; x < table.size(); ++x)
    table[x] = g(f(x));
  return GroupHom(f.source(), g.target(), std::move(table));
}

Quotient quotient(const GroupPtr &group, const Subgroup &normal) {
  if (normal.parent() != group)
    throw PreconditionError("subgroup belongs to a different group");
  if (!normal.is_normal())
    throw PreconditionError("subgroup is not normal");
  const FiniteGroup &g = *group;

  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> coset_of(g.order(), unset);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (coset_of[x] != unset)
      continue;
    Index c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index n : normal.elements())
      coset_of[g.mul(x, n)] = c;
  }
  const std::size_t k = reps.size();

  auto action = [&](Index x) {
    std::vector<Point> images(k);
    for (std::size_t c = 0; c < k; ++c)
      images[c] = coset_of[g.mul(x, reps[c])];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (Index x : g.generators())
    gens.push_back(action(x));
  GroupPtr q = FiniteGroup::from_generators(std::move(gens), k, g.order());

  std::vector<Index> table(g.order());
  for (Index x = 0; x < g.order(); ++x)
    table[x] = q->index_of(action(x));
  return Quotient{q, GroupHom(group, q, std::move(table))};
}

} // namespace gaschutz
