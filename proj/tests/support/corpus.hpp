#pragma once

#include <string>
#include <vector>

#include "gaschutz/finite_group.hpp"

namespace testing_corpus {

/// Group specs whose quotients form the epimorphism corpus.
std::vector<std::string> group_specs();

/// A small set of groups with every normal subgroup, for random sampling.
struct Entry {
  std::string spec;
  gaschutz::GroupPtr group;
  std::vector<gaschutz::Subgroup> subgroups;
  std::vector<gaschutz::Subgroup> normals;
};
const std::vector<Entry> &small_groups();

} // namespace testing_corpus
