#include "gaschutz/lifts.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

#include "gaschutz/error.hpp"

namespace gaschutz {
namespace {

bool tuple_generates(const FiniteGroup &group, std::span<const Index> tuple, ClosureScratch &scratch) {
  return scratch.closure_size(group, tuple, group.order()) >= group.order();
}

void require_epimorphism(const GroupHom &f) {
  if (!f.is_epimorphism())
    throw PreconditionError("homomorphism is not surjective");
}

void require_generating(const FiniteGroup &group, std::span<const Index> tuple) {
  for (Index x : tuple)
    if (x >= group.order())
      throw PreconditionError("tuple entry is not an element of the target");
  ClosureScratch scratch(group.order());
  if (!tuple_generates(group, tuple, scratch))
    throw PreconditionError("tuple does not generate the target group");
}

// Calls visit(tuple) for every tuple in the product of `choices`, last
// position varying fastest. Stops early when visit returns true.
template <class Visit>
void for_each_product(const std::vector<std::vector<Index>> &choices, Visit visit) {
  const std::size_t n = choices.size();
  for (const auto &c : choices)
    if (c.empty())
      return;
  std::vector<std::size_t> digit(n, 0);
  std::vector<Index> tuple(n);
  for (std::size_t i = 0; i < n; ++i)
    tuple[i] = choices[i][0];
  while (true) {
    if (visit(static_cast<const std::vector<Index> &>(tuple)))
      return;
    std::size_t pos = n;
    while (true) {
      if (pos == 0)
        return;
      --pos;
      if (++digit[pos] < choices[pos].size()) {
        tuple[pos] = choices[pos][digit[pos]];
        break;
      }
      digit[pos] = 0;
      tuple[pos] = choices[pos][0];
    }
  }
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      throw PreconditionError("lift count overflows 64 bits");
    result *= base;
  }
  return result;
}

// Depth-first search for a generating set of exactly `remaining` more
// elements, strictly increasing indices, each outside the current closure.
bool extend_to_generating(const FiniteGroup &group, std::vector<Index> &chosen, Index from,
                          std::size_t remaining) {
  Bitset current = closure(group, chosen);
  if (current.count() == group.order())
    return true;
  if (remaining == 0)
    return false;
  for (Index a = from; a < group.order(); ++a) {
    if (current.test(a))
      continue;
    chosen.push_back(a);
    if (extend_to_generating(group, chosen, a + 1, remaining - 1))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

GeneratingTuple GeneratingTuple::of(const GroupPtr &group, std::vector<Index> entries) {
  Subgroup generated = Subgroup::generated_by(group, entries);
  return GeneratingTuple{group, std::move(entries), std::move(generated)};
}

std::size_t min_generators(const GroupPtr &group) {
  for (std::size_t n = 0;; ++n) {
    std::vector<Index> chosen;
    if (extend_to_generating(*group, chosen, 1, n))
      return n;
  }
}

std::vector<std::vector<Index>> generating_tuple_entries(const GroupPtr &group, std::size_t n) {
  const FiniteGroup &g = *group;
  std::vector<Index> all(g.order());
  for (Index i = 0; i < all.size(); ++i)
    all[i] = i;
  std::vector<std::vector<Index>> choices(n, all);
  std::vector<std::vector<Index>> out;
  ClosureScratch scratch(g.order());
  for_each_product(choices, [&](const std::vector<Index> &tuple) {
    if (tuple_generates(g, tuple, scratch))
      out.push_back(tuple);
    return false;
  });
  return out;
}

std::vector<GeneratingTuple> generating_tuples(const GroupPtr &group, std::size_t n) {
  std::vector<GeneratingTuple> out;
  for (auto &entries : generating_tuple_entries(group, n))
    out.push_back(GeneratingTuple::of(group, std::move(entries)));
  return out;
}

std::vector<Index> lift_fiber(const GroupHom &f, const Subgroup &subgroup, Index h) {
  std::vector<Index> out;
  for (Index p : subgroup.elements())
    if (f(p) == h)
      out.push_back(p);
  return out;
}

PhiReport phi_brute(const GroupHom &f, const Subgroup &subgroup, std::span<const Index> tuple,
                    Backend backend) {
  if (subgroup.parent() != f.source())
    throw PreconditionError("subgroup is not a subgroup of the source");
  auto fibers = kernels::fibers_in(f, subgroup, tuple);
  std::uint64_t count = gaschutz::count_generating(*f.source(), fibers, subgroup.order(), backend);
  return PhiReport{subgroup, {tuple.begin(), tuple.end()}, tuple.size(), count, PhiMethod::Brute};
}

std::size_t PhiRecursion::KeyHash::operator()(const Key &k) const {
  std::size_t h = k.members.hash();
  for (Index x : k.tuple)
    h ^= std::hash<Index>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

PhiRecursion::PhiRecursion(GroupHom f) : f_(std::move(f)), kernel_(f_.kernel()) {
  for (auto &s : subgroups(f_.source()))
    if (f_.maps_onto(s)) {
      onto_index_.emplace(s.members(), onto_.size());
      onto_.push_back(std::move(s));
    }
}

std::size_t PhiRecursion::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

PhiReport PhiRecursion::phi(const Subgroup &subgroup, std::span<const Index> tuple) {
  if (subgroup.parent() != f_.source())
    throw PreconditionError("subgroup is not a subgroup of the source");
  for (Index h : tuple)
    if (h >= f_.target()->order())
      throw PreconditionError("tuple entry is not an element of the target");
  std::uint64_t value = 0;
  // A subgroup not mapping onto the target has no lifts of a generating tuple
  // that generate it.
  if (auto it = onto_index_.find(subgroup.members()); it != onto_index_.end())
    value = count(it->second, tuple);
  return PhiReport{subgroup, {tuple.begin(), tuple.end()}, tuple.size(), value, PhiMethod::Recursive};
}

std::uint64_t PhiRecursion::count(std::size_t index, std::span<const Index> tuple) {
  const Subgroup &sub = onto_[index];
  Key key{sub.members(), {tuple.begin(), tuple.end()}};
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
  }

  Bitset in_kernel = sub.members();
  in_kernel &= kernel_.members();
  std::uint64_t total = checked_pow(in_kernel.count(), tuple.size());
  for (std::size_t e = 0; e < index; ++e) {
    const Subgroup &candidate = onto_[e];
    if (candidate.order() < sub.order() && candidate.is_subgroup_of(sub)) {
      std::uint64_t sub_count = count(e, tuple);
      if (sub_count > total)
        throw std::logic_error("lift-count recursion went negative");
      total -= sub_count;
    }
  }

  std::unique_lock lock(mutex_);
  memo_.try_emplace(std::move(key), total);
  return total;
}

PhiReport phi_recursive(const GroupHom &f, const Subgroup &subgroup, std::span<const Index> tuple) {
  PhiRecursion recursion(f);
  return recursion.phi(subgroup, tuple);
}

std::optional<std::vector<Index>> find_generating_lift(const GroupHom &f,
                                                       std::span<const Index> tuple) {
  require_epimorphism(f);
  require_generating(*f.target(), tuple);
  const FiniteGroup &source = *f.source();
  auto fibers = kernels::fibers_in(f, Subgroup::full(f.source()), tuple);
  std::optional<std::vector<Index>> found;
  ClosureScratch scratch(source.order());
  for_each_product(fibers, [&](const std::vector<Index> &candidate) {
    if (tuple_generates(source, candidate, scratch)) {
      found = candidate;
      return true;
    }
    return false;
  });
  return found;
}

GaschutzReport verify_epi_gaschutz(const GroupHom &f, std::size_t n, Backend backend) {
  require_epimorphism(f);
  GaschutzReport report;
  report.n = n;
  report.min_generators = min_generators(f.source());
  if (n < report.min_generators)
    throw PreconditionError("n = " + std::to_string(n) + " is below d(source) = " +
                            std::to_string(report.min_generators));

  auto tuples = generating_tuple_entries(f.target(), n);
  auto phis = phi_batch(f, Subgroup::full(f.source()), tuples, backend);
  report.tuple_count = tuples.size();
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    ++report.phi_histogram[phis[i]];
    if (phis[i] == 0)
      report.violations.push_back(tuples[i]);
  }
  if (!report.phi_histogram.empty()) {
    report.min_phi = report.phi_histogram.begin()->first;
    report.max_phi = report.phi_histogram.rbegin()->first;
  }
  return report;
}

std::size_t gaschutz_rank_over_quotients(const GroupPtr &group) {
  const std::size_t d = min_generators(group);
  std::size_t rank = 0;
  for (const auto &normal : normal_subgroups(group)) {
    auto q = quotient(group, normal);
    const Subgroup full = Subgroup::full(group);
    for (std::size_t n = rank; n <= d; ++n) {
      auto tuples = generating_tuple_entries(q.group, n);
      auto phis = phi_batch(q.projection, full, tuples, Backend::OpenMP);
      if (std::find(phis.begin(), phis.end(), 0) != phis.end())
        rank = n + 1;
    }
  }
  return rank;
}

} // namespace gaschutz
