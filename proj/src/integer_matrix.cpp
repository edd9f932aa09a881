#include "gaschutz/integer_matrix.hpp"

#include <sstream>

#include "gaschutz/error.hpp"

namespace gaschutz {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw PreconditionError("matrix data does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>> &rows, std::size_t cols) {
  if (!rows.empty())
    cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const mpz_class &factor) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const mpz_class &factor) {
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(i, j) = -(*this)(i, j);
}

bool IntMatrix::is_zero() const {
  for (const auto &x : data_)
    if (x != 0)
      return false;
  return true;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw PreconditionError("matrix dimensions do not agree for multiplication");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<std::size_t> fraction_free_echelon(IntMatrix &m) {
  std::vector<std::size_t> pivots;
  mpz_class previous = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0)
      ++p;
    if (p == m.rows())
      continue;
    m.swap_rows(row, p);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        mpz_class value = m(row, col) * m(i, j) - m(i, col) * m(row, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = value;
      }
      m(i, col) = 0;
    }
    previous = m(row, col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(IntMatrix m) { return fraction_free_echelon(m).size(); }

mpz_class determinant(IntMatrix m) {
  if (m.rows() != m.cols())
    throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  int sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class value = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = value;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw ParseError("matrix must start with non-negative 'rows cols'");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string token;
      if (!(in >> token))
        throw ParseError("matrix has fewer entries than rows*cols");
      if (m(i, j).set_str(token, 10) != 0)
        throw ParseError("invalid matrix entry '" + token + "'");
    }
  std::string extra;
  if (in >> extra)
    throw ParseError("matrix has more entries than rows*cols");
  return m;
}

std::string format_matrix(const IntMatrix &m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j)
        out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

} // namespace gaschutz

namespace gaschutz {

std::vector<mpq_class> kernel_vector(const IntMatrix &m) {
  IntMatrix echelon = m;
  auto pivots = fraction_free_echelon(echelon);
  if (pivots.size() == m.cols())
    return {};
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col])
    ++free_col;

  std::vector<mpq_class> x(m.cols(), 0);
  x[free_col] = 1;
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t p = pivots[r];
    mpq_class acc = 0;
    for (std::size_t j = p + 1; j < m.cols(); ++j)
      acc += mpq_class(echelon(r, j)) * x[j];
    x[p] = -acc / mpq_class(echelon(r, p));
  }
  return x;
}

} // namespace gaschutz
