#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace properties {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && cases >= 1000; }
};

/// Randomized invariant suites; each runs at least `cases` cases from a
/// fixed seed and records the first counterexample it meets.
Outcome snf_remultiplication(std::size_t cases = 1000, std::uint64_t seed = 1);
Outcome closure_idempotence(std::size_t cases = 1000, std::uint64_t seed = 2);
Outcome rational_shift_invariance(std::size_t cases = 1000, std::uint64_t seed = 3);
Outcome symbol_relabeling_invariance(std::size_t cases = 1000, std::uint64_t seed = 4);
Outcome fiber_size_dichotomy(std::size_t cases = 1000, std::uint64_t seed = 5);
Outcome projection_generates(std::size_t cases = 1000, std::uint64_t seed = 6);
Outcome kernel_backends_agree(std::size_t cases = 1000, std::uint64_t seed = 7);
Outcome phi_methods_agree(std::size_t cases = 1000, std::uint64_t seed = 8);
Outcome hom_multiplicative(std::size_t cases = 1000, std::uint64_t seed = 9);
Outcome abelian_dgen_unimodular_invariance(std::size_t cases = 1000, std::uint64_t seed = 10);
Outcome fresh_lifts_generate(std::size_t cases = 1000, std::uint64_t seed = 11);
Outcome round_trips(std::size_t cases = 1000, std::uint64_t seed = 12);

std::vector<std::function<Outcome()>> all_suites();

} // namespace properties
