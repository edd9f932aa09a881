#include "gaschutz/tower.hpp"

#include <algorithm>
#include <string>

#include "gaschutz/error.hpp"
#include "gaschutz/lifts.hpp"
#include "gaschutz/notation.hpp"

namespace gaschutz {

Tower make_tower(std::vector<GroupPtr> levels, std::vector<GroupHom> connecting,
                 std::vector<Subgroup> kernels) {
  const std::size_t depth = levels.size();
  if (depth == 0)
    throw PreconditionError("a tower needs at least one level");
  if (connecting.size() + 1 != depth || kernels.size() != depth)
    throw PreconditionError("tower needs depth-1 connecting maps and depth kernels");
  for (std::size_t m = 0; m + 1 < depth; ++m) {
    const GroupHom &p = connecting[m];
    if (p.source() != levels[m + 1] || p.target() != levels[m])
      throw PreconditionError("connecting map " + std::to_string(m + 1) + " has wrong endpoints");
    if (!p.is_epimorphism())
      throw PreconditionError("connecting map " + std::to_string(m + 1) + " is not onto");
  }
  for (std::size_t m = 0; m < depth; ++m) {
    if (kernels[m].parent() != levels[m])
      throw PreconditionError("kernel " + std::to_string(m + 1) + " lives in the wrong group");
    if (!kernels[m].is_normal())
      throw PreconditionError("kernel " + std::to_string(m + 1) + " is not normal");
  }
  for (std::size_t m = 0; m + 1 < depth; ++m)
    if (!(connecting[m].image_of(kernels[m + 1]) == kernels[m]))
      throw PreconditionError("kernel images are not compatible at level " + std::to_string(m + 1));

  Tower tower;
  tower.levels = std::move(levels);
  tower.connecting = std::move(connecting);
  tower.kernels = std::move(kernels);
  tower.to_level.resize(depth, GroupHom::identity(tower.levels.back()));
  for (std::size_t m = depth - 1; m-- > 0;)
    tower.to_level[m] = compose(tower.connecting[m], tower.to_level[m + 1]);
  for (std::size_t m = 0; m < depth; ++m)
    tower.quotients.push_back(quotient(tower.levels[m], tower.kernels[m]));
  return tower;
}

Tower make_tower(std::vector<GroupPtr> levels, std::vector<GroupHom> connecting,
                 const Subgroup &deepest_kernel) {
  if (levels.empty())
    throw PreconditionError("a tower needs at least one level");
  if (connecting.size() + 1 != levels.size())
    throw PreconditionError("tower needs depth-1 connecting maps");
  std::vector<Subgroup> kernels(levels.size(), deepest_kernel);
  for (std::size_t m = levels.size() - 1; m-- > 0;)
    kernels[m] = connecting[m].image_of(kernels[m + 1]);
  return make_tower(std::move(levels), std::move(connecting), std::move(kernels));
}

Tower build_cyclic_tower(long p, std::size_t depth, std::size_t order_cap) {
  if (p < 2)
    throw PreconditionError("p must be prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw PreconditionError("p must be prime");
  if (depth < 1)
    throw PreconditionError("depth must be at least 1");
  std::vector<GroupPtr> levels;
  long order = 1;
  for (std::size_t m = 1; m <= depth; ++m) {
    if (order > static_cast<long>(order_cap) / p)
      throw OrderCapExceeded("p^depth exceeds the order cap");
    order *= p;
    levels.push_back(group_from_spec("cyclic:" + std::to_string(order), order_cap));
  }
  std::vector<GroupHom> connecting;
  for (std::size_t m = 0; m + 1 < depth; ++m) {
    Index image[] = {levels[m]->generators()[0]};
    connecting.push_back(hom_from_generator_images(levels[m + 1], levels[m], image));
  }
  GroupHom down = GroupHom::identity(levels.back());
  for (std::size_t m = depth - 1; m-- > 0;)
    down = compose(connecting[m], down);
  Subgroup kernel = down.kernel();
  return make_tower(std::move(levels), std::move(connecting), kernel);
}

Tower build_quotient_tower(const GroupPtr &group, const std::vector<Subgroup> &chain) {
  if (chain.empty())
    throw PreconditionError("empty normal chain");
  for (std::size_t m = 0; m + 1 < chain.size(); ++m)
    if (!chain[m + 1].is_subgroup_of(chain[m]))
      throw PreconditionError("normal chain must be descending");
  std::vector<Quotient> qs;
  for (const auto &n : chain)
    qs.push_back(quotient(group, n));
  std::vector<GroupPtr> levels;
  for (const auto &q : qs)
    levels.push_back(q.group);
  std::vector<GroupHom> connecting;
  for (std::size_t m = 0; m + 1 < qs.size(); ++m) {
    std::vector<Index> table(levels[m + 1]->order());
    for (Index x = 0; x < group->order(); ++x)
      table[qs[m + 1].projection(x)] = qs[m].projection(x);
    connecting.emplace_back(levels[m + 1], levels[m], std::move(table));
  }
  GroupHom down = GroupHom::identity(levels.back());
  for (std::size_t m = levels.size() - 1; m-- > 0;)
    down = compose(connecting[m], down);
  Subgroup kernel = down.kernel();
  return make_tower(std::move(levels), std::move(connecting), kernel);
}

Tower build_named_tower(std::string_view family, std::size_t order_cap) {
  if (family.starts_with("cyclic:")) {
    auto rest = family.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("tower family cyclic:p:depth needs two parameters");
    long p = 0, depth = 0;
    try {
      p = std::stol(std::string(rest.substr(0, colon)));
      depth = std::stol(std::string(rest.substr(colon + 1)));
    } catch (const std::exception &) {
      throw ParseError("invalid tower parameters '" + std::string(family) + "'");
    }
    if (depth < 1)
      throw PreconditionError("depth must be at least 1");
    return build_cyclic_tower(p, static_cast<std::size_t>(depth), order_cap);
  }
  auto chain_of = [](const GroupPtr &g, std::size_t normal_order) {
    for (auto &n : normal_subgroups(g))
      if (n.order() == normal_order)
        return std::vector<Subgroup>{n, Subgroup::trivial(g)};
    throw std::logic_error("expected normal subgroup missing");
  };
  if (family == "sym4") {
    auto g = group_from_spec("sym:4", order_cap);
    return build_quotient_tower(g, chain_of(g, 4));
  }
  if (family == "dihedral8") {
    auto g = group_from_spec("dihedral:8", order_cap);
    return build_quotient_tower(g, chain_of(g, 2));
  }
  throw ParseError("unknown tower family '" + std::string(family) + "'");
}

Tower truncated(const Tower &tower, std::size_t depth) {
  if (depth < 1 || depth > tower.depth())
    throw PreconditionError("truncation depth out of range");
  std::vector<GroupPtr> levels(tower.levels.begin(), tower.levels.begin() + static_cast<long>(depth));
  std::vector<GroupHom> connecting(tower.connecting.begin(),
                                   tower.connecting.begin() + static_cast<long>(depth - 1));
  std::vector<Subgroup> kernels(tower.kernels.begin(), tower.kernels.begin() + static_cast<long>(depth));
  return make_tower(std::move(levels), std::move(connecting), std::move(kernels));
}

std::vector<Index> project_base_tuple(const Tower &tower, std::span<const Index> tuple, std::size_t level) {
  if (level < 1 || level > tower.depth())
    throw PreconditionError("level out of range");
  const GroupHom &base = tower.base().projection;
  std::vector<Index> out;
  for (Index h : tuple) {
    auto fiber = lift_fiber(base, Subgroup::full(tower.deepest()), h);
    if (fiber.empty())
      throw PreconditionError("tuple entry is not in the base quotient");
    Index at_level = tower.to_level[level - 1](fiber.front());
    out.push_back(tower.quotients[level - 1].projection(at_level));
  }
  return out;
}

std::vector<std::uint64_t> level_sets_nonempty(const Tower &tower, std::span<const Index> lift,
                                               Backend backend) {
  std::vector<std::uint64_t> counts;
  for (std::size_t m = 0; m < tower.depth(); ++m) {
    const FiniteGroup &g = *tower.levels[m];
    // Shifts p_m(g_i) * k over k in K_m form the i-th fiber.
    std::vector<std::vector<Index>> shifts;
    for (Index x : lift) {
      Index base = tower.to_level[m](x);
      std::vector<Index> fiber;
      for (Index k : tower.kernels[m].elements())
        fiber.push_back(g.mul(base, k));
      shifts.push_back(std::move(fiber));
    }
    counts.push_back(count_generating(g, shifts, g.order(), backend));
  }
  return counts;
}

bool TowerLift::generates_every_level() const {
  return std::all_of(level_generates.begin(), level_generates.end(), [](bool b) { return b; });
}

bool TowerLift::level_sets_positive() const {
  return std::all_of(level_counts.begin(), level_counts.end(), [](std::uint64_t c) { return c > 0; });
}

TowerLift tower_lift(const Tower &tower, std::span<const Index> tuple) {
  const std::size_t d = min_generators(tower.deepest());
  if (tuple.size() < d)
    throw PreconditionError("n = " + std::to_string(tuple.size()) + " is below d(G_M) = " + std::to_string(d));
  const GroupHom &base = tower.base().projection;
  auto found = find_generating_lift(base, tuple);
  if (!found)
    throw std::logic_error("no generating lift at the deepest level");

  TowerLift out;
  out.deepest = *found;
  for (std::size_t m = 0; m < tower.depth(); ++m) {
    std::vector<Index> projected;
    for (Index x : out.deepest)
      projected.push_back(tower.to_level[m](x));
    out.level_generates.push_back(
        Subgroup::generated_by(tower.levels[m], projected).is_full());
    out.per_level.push_back(std::move(projected));
  }
  const Subgroup full = Subgroup::full(tower.deepest());
  for (Index h : tuple)
    out.arbitrary_lift.push_back(lift_fiber(base, full, h).front());
  out.level_counts = level_sets_nonempty(tower, out.arbitrary_lift);
  return out;
}

} // namespace gaschutz
