#pragma once

#include <optional>
#include <vector>

#include "gaschutz/integer_matrix.hpp"

namespace gaschutz {

/// U * M * V = S with U, V unimodular and S diagonal. The diagonal entries
/// (invariant factors) are non-negative and divide successively, zeros last.
struct SnfDecomposition {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  std::vector<mpz_class> invariant_factors; // length min(rows, cols)
};

SnfDecomposition smith_normal_form(const IntMatrix &m);

/// Minimal number of generators of Z^rows / (column lattice of the
/// presentation): invariant factors other than 1, plus rows - min(rows, cols).
std::size_t abelian_min_generators(const IntMatrix &presentation);

/// Whether the integer vectors (each of length r) generate Z^r.
bool lattice_tuple_generates(std::size_t r, const std::vector<std::vector<long>> &vectors);

/// Decision for a generator h of Z/m lifting to a generator of Z, i.e. to
/// +1 or -1.
struct CyclicLiftResult {
  bool exists = false;
  long witness = 0;    // the generating lift (+1 or -1) when it exists
  long multiplier = 0; // k with witness = h + k*m
  /// Failed congruences, as "+1 != h mod m" style lines, when none exists.
  std::vector<std::string> failed_congruences;
};

/// Throws PreconditionError unless m >= 1 and gcd(h, m) = 1.
CyclicLiftResult cyclic_quotient_lift_exists(long modulus, long residue);

} // namespace gaschutz
