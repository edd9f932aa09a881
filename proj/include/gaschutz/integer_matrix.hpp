#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gaschutz {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> data);

  static IntMatrix identity(std::size_t n);
  /// Rows given as integer vectors; all rows must share a length.
  static IntMatrix from_rows(const std::vector<std::vector<long>> &rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const mpz_class &factor);
  void add_col_multiple(std::size_t target, std::size_t source, const mpz_class &factor);
  void negate_row(std::size_t i);

  bool is_zero() const;

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);

/// Reduces m in place to row echelon form with Bareiss fraction-free
/// elimination and returns the pivot columns. The rank is their count.
std::vector<std::size_t> fraction_free_echelon(IntMatrix &m);

std::size_t rank(IntMatrix m);

/// Determinant of a square matrix via Bareiss elimination.
mpz_class determinant(IntMatrix m);

/// Matrix file format: "rows cols" then row-major integers, whitespace
/// separated.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix &m);

} // namespace gaschutz

namespace gaschutz {

/// A nonzero rational vector x with m * x = 0, or an empty vector when m
/// has full column rank.
std::vector<mpq_class> kernel_vector(const IntMatrix &m);

} // namespace gaschutz
