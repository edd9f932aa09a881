#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gaschutz {

/// q0 + q1*b1 + ... + qk*bk with exact rationals over a formal basis
/// {1, b1, ..., bk} whose symbols are Q-linearly independent by fiat.
class SymbolicReal {
public:
  SymbolicReal() = default;
  /// coeffs[0] is the rational part, coeffs[j] the coefficient of bj.
  explicit SymbolicReal(std::vector<mpq_class> coeffs);

  static SymbolicReal rational(mpq_class q);
  static SymbolicReal symbol(std::size_t j, mpq_class coeff = 1);

  const mpq_class &rational_part() const;
  /// Coefficient of bj (j >= 1); zero beyond the stored length.
  mpq_class coefficient(std::size_t j) const;
  /// Largest j with a nonzero coefficient of bj, or 0 when rational.
  std::size_t max_symbol() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_rational() const { return coeffs_.size() <= 1; }
  bool is_zero() const { return coeffs_.empty(); }

  SymbolicReal with_rational_part(mpq_class q) const;

  SymbolicReal &operator+=(const SymbolicReal &other);
  SymbolicReal &operator-=(const SymbolicReal &other);
  SymbolicReal &operator*=(const mpq_class &scalar);

  friend SymbolicReal operator+(SymbolicReal a, const SymbolicReal &b) { return a += b; }
  friend SymbolicReal operator-(SymbolicReal a, const SymbolicReal &b) { return a -= b; }
  friend SymbolicReal operator*(const mpq_class &s, SymbolicReal a) { return a *= s; }

  friend bool operator==(const SymbolicReal &a, const SymbolicReal &b) { return a.coeffs_ == b.coeffs_; }

  /// Renames bj to b(mapping[j-1]); mapping is 1-based.
  SymbolicReal relabeled(const std::vector<std::size_t> &mapping) const;

private:
  void trim();
  std::vector<mpq_class> coeffs_; // trailing zeros trimmed, empty means 0
};

/// Literal grammar: rationals (`a/b` or integers) and terms `q*bN` or `bN`,
/// joined by `+`/`-`; whitespace is insignificant.
SymbolicReal parse_symbolic(std::string_view text);
std::string to_string(const SymbolicReal &x);

/// A point of (R/Z)^d; rational parts are kept reduced into [0, 1).
class TorusPoint {
public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<SymbolicReal> coordinates);

  std::size_t dimension() const { return coords_.size(); }
  const SymbolicReal &operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<SymbolicReal> &coordinates() const { return coords_; }
  std::size_t max_symbol() const;

  friend bool operator==(const TorusPoint &, const TorusPoint &) = default;

private:
  std::vector<SymbolicReal> coords_;
};

mpq_class mod_one(const mpq_class &q);

/// Points separated by ';', coordinates by ','.
std::vector<TorusPoint> parse_points(std::string_view text);
std::string to_string(const TorusPoint &p);
std::string to_string(const std::vector<TorusPoint> &points);

} // namespace gaschutz
