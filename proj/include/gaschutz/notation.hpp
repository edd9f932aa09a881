#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaschutz/finite_group.hpp"

namespace gaschutz {

/// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" is the
/// identity. Points beyond the largest mentioned one are fixed, so the
/// degree must be supplied (or is inferred as the largest point).
Permutation parse_permutation(std::string_view text, std::size_t degree = 0);
std::string format_permutation(const Permutation &p);

/// A group given either by a named family or by explicit generators.
///
///   cyclic:m  dihedral:m  sym:k  alt:k  klein  quaternion8  elem-abelian:p:k
///   [deg:](cycles),(cycles),...      explicit generators, 1-based
///
/// dihedral:m is the dihedral group of order m (m even).
struct GroupSpec {
  std::string family; // empty for explicit generators
  std::vector<long> params;
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec &spec);
GroupPtr build_group(const GroupSpec &spec, std::size_t order_cap = kDefaultOrderCap);

inline GroupPtr group_from_spec(std::string_view text, std::size_t order_cap = kDefaultOrderCap) {
  return build_group(parse_group_spec(text), order_cap);
}

/// Product of generator powers, e.g. g1*g2^-1. The identity is "e".
struct WordLetter {
  std::size_t generator; // 0-based
  long exponent;
  friend bool operator==(const WordLetter &, const WordLetter &) = default;
};
using Word = std::vector<WordLetter>;

Word parse_word(std::string_view text);
std::string format_word(const Word &word);
Index evaluate_word(const FiniteGroup &group, const Word &word);

/// Comma-separated words, evaluated to element indices.
std::vector<Index> parse_tuple(const FiniteGroup &group, std::string_view text);

/// Homomorphism spec: one "i -> word" line per source generator (1-based i,
/// word in target generators). Lines may be separated by newlines or ';'.
std::vector<std::pair<std::size_t, Word>> parse_hom_spec(std::string_view text);
std::string format_hom_spec(const std::vector<std::pair<std::size_t, Word>> &spec);
GroupHom build_hom(const GroupPtr &source, const GroupPtr &target, std::string_view text);

} // namespace gaschutz
