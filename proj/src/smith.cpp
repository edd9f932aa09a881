#include "gaschutz/smith.hpp"

#include <numeric>
#include <string>

#include "gaschutz/error.hpp"

namespace gaschutz {
namespace {

// Position of the nonzero entry of smallest absolute value in the trailing
// submatrix starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(const IntMatrix &s, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  mpz_class best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0)
        continue;
      mpz_class a = abs(s(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix &m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t diag = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      auto pivot = smallest_nonzero(s, t);
      if (!pivot)
        break;
      s.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      s.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      bool cleared = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0)
          continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0)
          cleared = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0)
          continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0)
          cleared = false;
      }
      if (!cleared)
        continue;

      // Pivot must divide every remaining entry; otherwise fold an offending
      // row into the pivot row and reduce again with a smaller remainder.
      bool divides = true;
      for (std::size_t i = t + 1; i < s.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }

  SnfDecomposition out{s, u, v, {}};
  for (std::size_t t = 0; t < diag; ++t)
    out.invariant_factors.push_back(s(t, t));
  return out;
}

std::size_t abelian_min_generators(const IntMatrix &presentation) {
  auto snf = smith_normal_form(presentation);
  std::size_t count = presentation.rows() - snf.invariant_factors.size();
  for (const auto &d : snf.invariant_factors)
    if (d != 1)
      ++count;
  return count;
}

bool lattice_tuple_generates(std::size_t r, const std::vector<std::vector<long>> &vectors) {
  for (const auto &v : vectors)
    if (v.size() != r)
      throw PreconditionError("vector length does not match lattice rank");
  if (r == 0)
    return true;
  if (vectors.size() < r)
    return false;
  auto snf = smith_normal_form(IntMatrix::from_rows(vectors, r));
  for (const auto &d : snf.invariant_factors)
    if (d != 1)
      return false;
  return true;
}

CyclicLiftResult cyclic_quotient_lift_exists(long modulus, long residue) {
  if (modulus < 1)
    throw PreconditionError("modulus must be positive");
  if (std::gcd(residue, modulus) != 1)
    throw PreconditionError(std::to_string(residue) + " does not generate Z/" + std::to_string(modulus));

  auto reduce = [modulus](long x) { return ((x % modulus) + modulus) % modulus; };
  const long h = reduce(residue);
  CyclicLiftResult result;
  for (long candidate : {1L, -1L}) {
    if (reduce(candidate) == h) {
      result.exists = true;
      result.witness = candidate;
      result.multiplier = (candidate - residue) / modulus;
      result.failed_congruences.clear();
      return result;
    }
    result.failed_congruences.push_back((candidate > 0 ? "+1" : "-1") + std::string(" = ") +
                                        std::to_string(reduce(candidate)) + " != " + std::to_string(h) +
                                        " (mod " + std::to_string(modulus) + ")");
  }
  return result;
}

} // namespace gaschutz
