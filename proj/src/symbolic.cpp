#include "gaschutz/symbolic.hpp"

#include <cctype>

#include "gaschutz/error.hpp"

namespace gaschutz {

SymbolicReal::SymbolicReal(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto &c : coeffs_)
    c.canonicalize();
  trim();
}

SymbolicReal SymbolicReal::rational(mpq_class q) { return SymbolicReal({std::move(q)}); }

SymbolicReal SymbolicReal::symbol(std::size_t j, mpq_class coeff) {
  std::vector<mpq_class> c(j + 1, 0);
  c[j] = std::move(coeff);
  return SymbolicReal(std::move(c));
}

const mpq_class &SymbolicReal::rational_part() const {
  static const mpq_class zero = 0;
  return coeffs_.empty() ? zero : coeffs_[0];
}

mpq_class SymbolicReal::coefficient(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : mpq_class(0);
}

SymbolicReal SymbolicReal::with_rational_part(mpq_class q) const {
  std::vector<mpq_class> c = coeffs_;
  if (c.empty())
    c.resize(1);
  c[0] = std::move(q);
  return SymbolicReal(std::move(c));
}

SymbolicReal &SymbolicReal::operator+=(const SymbolicReal &other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
    coeffs_[j] += other.coeffs_[j];
  trim();
  return *this;
}

SymbolicReal &SymbolicReal::operator-=(const SymbolicReal &other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
    coeffs_[j] -= other.coeffs_[j];
  trim();
  return *this;
}

SymbolicReal &SymbolicReal::operator*=(const mpq_class &scalar) {
  for (auto &c : coeffs_)
    c *= scalar;
  trim();
  return *this;
}

SymbolicReal SymbolicReal::relabeled(const std::vector<std::size_t> &mapping) const {
  std::vector<mpq_class> c(1, rational_part());
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0)
      continue;
    if (j - 1 >= mapping.size())
      throw PreconditionError("relabeling does not cover symbol b" + std::to_string(j));
    std::size_t target = mapping[j - 1];
    if (c.size() <= target)
      c.resize(target + 1, 0);
    c[target] += coeffs_[j];
  }
  return SymbolicReal(std::move(c));
}

void SymbolicReal::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

namespace {

class LiteralParser {
public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  SymbolicReal parse() {
    SymbolicReal result;
    skip_space();
    if (at_end())
      fail("empty literal");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      SymbolicReal term = parse_term();
      if (sign < 0)
        term *= mpq_class(-1);
      result += term;
      first = false;
      skip_space();
    }
    return result;
  }

private:
  SymbolicReal parse_term() {
    if (peek() == 'b')
      return SymbolicReal::symbol(parse_symbol());
    mpq_class q = parse_rational();
    skip_space();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      if (at_end() || peek() != 'b')
        fail("expected a basis symbol after '*'");
      return SymbolicReal::symbol(parse_symbol(), q);
    }
    return SymbolicReal::rational(q);
  }

  std::size_t parse_symbol() {
    ++pos_; // 'b'
    std::string digits = take_digits();
    if (digits.empty())
      fail("basis symbol needs an index");
    unsigned long j = std::stoul(digits);
    if (j == 0)
      fail("basis symbols start at b1");
    return j;
  }

  mpq_class parse_rational() {
    std::string num = take_digits();
    if (num.empty())
      fail("expected a number");
    skip_space();
    std::string den = "1";
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      den = take_digits();
      if (den.empty())
        fail("expected a denominator");
    }
    mpz_class n(num), d(den);
    if (d == 0)
      fail("zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }

  std::string take_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      out += text_[pos_++];
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("symbolic literal '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

SymbolicReal parse_symbolic(std::string_view text) { return LiteralParser(text).parse(); }

std::string to_string(const SymbolicReal &x) {
  if (x.is_zero())
    return "0";
  std::string out;
  auto append = [&](const mpq_class &c, const std::string &symbol) {
    if (c == 0)
      return;
    mpq_class magnitude = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (symbol.empty())
      out += magnitude.get_str();
    else if (magnitude == 1)
      out += symbol;
    else
      out += magnitude.get_str() + "*" + symbol;
  };
  append(x.rational_part(), "");
  for (std::size_t j = 1; j <= x.max_symbol(); ++j)
    append(x.coefficient(j), "b" + std::to_string(j));
  return out;
}

mpq_class mod_one(const mpq_class &q) {
  mpz_class floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  mpq_class r = q - mpq_class(floor_value);
  r.canonicalize();
  return r;
}

TorusPoint::TorusPoint(std::vector<SymbolicReal> coordinates) : coords_(std::move(coordinates)) {
  for (auto &c : coords_)
    c = c.with_rational_part(mod_one(c.rational_part()));
}

std::size_t TorusPoint::max_symbol() const {
  std::size_t m = 0;
  for (const auto &c : coords_)
    m = std::max(m, c.max_symbol());
  return m;
}

std::vector<TorusPoint> parse_points(std::string_view text) {
  std::vector<TorusPoint> points;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ';')
      continue;
    std::string_view part = trim(text.substr(start, i - start));
    start = i + 1;
    if (part.empty())
      throw ParseError("empty torus point");
    std::vector<SymbolicReal> coords;
    std::size_t c0 = 0;
    for (std::size_t k = 0; k <= part.size(); ++k) {
      if (k < part.size() && part[k] != ',')
        continue;
      coords.push_back(parse_symbolic(part.substr(c0, k - c0)));
      c0 = k + 1;
    }
    points.emplace_back(std::move(coords));
  }
  return points;
}

std::string to_string(const TorusPoint &p) {
  std::string out;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i)
      out += ", ";
    out += to_string(p[i]);
  }
  return out;
}

std::string to_string(const std::vector<TorusPoint> &points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i)
      out += "; ";
    out += to_string(points[i]);
  }
  return out;
}

} // namespace gaschutz
