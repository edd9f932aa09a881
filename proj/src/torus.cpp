#include "gaschutz/torus.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "gaschutz/error.hpp"
#include "gaschutz/integer_matrix.hpp"
#include "gaschutz/smith.hpp"

namespace gaschutz {
namespace {

void check_points(const std::vector<TorusPoint> &points, std::size_t dimension, std::size_t basis_size) {
  for (const auto &p : points) {
    if (p.dimension() != dimension)
      throw PreconditionError("torus point has dimension " + std::to_string(p.dimension()) +
                              ", expected " + std::to_string(dimension));
    if (p.max_symbol() > basis_size)
      throw PreconditionError("point uses b" + std::to_string(p.max_symbol()) +
                              " outside the ambient basis of size " + std::to_string(basis_size));
  }
}

// Scales each row by the lcm of its denominators.
IntMatrix clear_denominators(const std::vector<std::vector<mpq_class>> &rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    mpz_class l = 1;
    for (const auto &q : rows[r])
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class scaled = rows[r][c] * l;
      m(r, c) = scaled.get_num();
    }
  }
  return m;
}

// Inverse of a square rational matrix by Gauss-Jordan; nullopt if singular.
std::optional<std::vector<std::vector<mpq_class>>> invert(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0)
      ++p;
    if (p == n)
      return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    mpq_class pivot = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= pivot;
      inv[col][j] /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      mpq_class factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<std::size_t> symbols_used(const TorusPoint &p) {
  std::set<std::size_t> used;
  for (const auto &c : p.coordinates())
    for (std::size_t j = 1; j <= c.max_symbol(); ++j)
      if (c.coefficient(j) != 0)
        used.insert(j);
  return {used.begin(), used.end()};
}

struct BlockShape {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<std::size_t>> symbols;
  // Inverse of the transposed coefficient matrix of each block:
  // inverse[l][a][b] with a indexing the block, b the symbols.
  std::vector<std::vector<std::vector<mpq_class>>> inverse;
};

std::optional<BlockShape> block_shape(const std::vector<TorusPoint> &tuple) {
  if (tuple.empty())
    return std::nullopt;
  const std::size_t d = tuple.front().dimension();
  BlockShape shape;
  shape.blocks.resize(tuple.size());
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t owners = 0, owner = 0;
    for (std::size_t l = 0; l < tuple.size(); ++l)
      if (!tuple[l][i].is_zero()) {
        ++owners;
        owner = l;
      }
    if (owners != 1)
      return std::nullopt;
    shape.blocks[owner].push_back(i);
  }
  for (std::size_t l = 0; l < tuple.size(); ++l) {
    const auto &block = shape.blocks[l];
    auto syms = symbols_used(tuple[l]);
    if (block.empty() || syms.size() != block.size())
      return std::nullopt;
    // transposed[s][a] = coefficient of b_{syms[s]} in h_l^{block[a]}
    std::vector<std::vector<mpq_class>> transposed(block.size(), std::vector<mpq_class>(block.size()));
    for (std::size_t s = 0; s < syms.size(); ++s)
      for (std::size_t a = 0; a < block.size(); ++a)
        transposed[s][a] = tuple[l][block[a]].coefficient(syms[s]);
    auto inv = invert(std::move(transposed));
    if (!inv)
      return std::nullopt;
    shape.symbols.push_back(std::move(syms));
    shape.inverse.push_back(std::move(*inv));
  }
  return shape;
}

mpq_class random_rational(std::mt19937_64 &rng, long num_lo, long num_hi, long den_hi) {
  std::uniform_int_distribution<long> num(num_lo, num_hi), den(1, den_hi);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

} // namespace

KroneckerResult kronecker_decide(const std::vector<TorusPoint> &points, std::size_t dimension,
                                 std::size_t basis_size) {
  check_points(points, dimension, basis_size);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto &p : points)
    for (std::size_t j = 1; j <= basis_size; ++j) {
      std::vector<mpq_class> row(dimension);
      for (std::size_t i = 0; i < dimension; ++i)
        row[i] = p[i].coefficient(j);
      rows.push_back(std::move(row));
    }
  IntMatrix m = clear_denominators(rows, dimension);
  KroneckerResult result;
  result.rank = rank(m);
  result.generates = result.rank == dimension;
  if (!result.generates)
    result.witness = kernel_vector(m);
  return result;
}

std::optional<mpz_class> rational_closure_order(const std::vector<TorusPoint> &points,
                                                std::size_t dimension) {
  for (const auto &p : points) {
    if (p.dimension() != dimension)
      throw PreconditionError("torus point has the wrong dimension");
    if (p.max_symbol() > 0)
      return std::nullopt;
  }
  if (dimension == 0)
    return mpz_class(1);
  mpz_class common = 1;
  for (const auto &p : points)
    for (const auto &c : p.coordinates())
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.rational_part().get_den_mpz_t());

  // Lattice spanned by common*point and common*e_i; the subgroup is
  // (L + common Z^d) / common Z^d, of order common^d / [Z^d : L].
  IntMatrix m(points.size() + dimension, dimension);
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t i = 0; i < dimension; ++i)
      m(r, i) = mpq_class(points[r][i].rational_part() * common).get_num();
  for (std::size_t i = 0; i < dimension; ++i)
    m(points.size() + i, i) = common;
  auto snf = smith_normal_form(m);
  mpz_class index = 1;
  for (const auto &f : snf.invariant_factors)
    index *= f;
  mpz_class full;
  mpz_pow_ui(full.get_mpz_t(), common.get_mpz_t(), dimension);
  return mpz_class(full / index);
}

std::vector<std::size_t> TorusProjection::new_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < source_dimension; ++j) {
    if (k < kept.size() && kept[k] == j)
      ++k;
    else
      out.push_back(j);
  }
  return out;
}

void TorusProjection::validate() const {
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (kept[k] >= source_dimension)
      throw PreconditionError("kept coordinate outside the source torus");
    if (k > 0 && kept[k] <= kept[k - 1])
      throw PreconditionError("kept coordinates must be strictly increasing");
  }
}

mpq_class LinearForm::evaluate(const std::map<LiftUnknown, mpq_class> &values) const {
  mpq_class out = constant;
  for (const auto &[u, c] : terms) {
    auto it = values.find(u);
    if (it == values.end())
      throw PreconditionError("unknown lift coefficient not instantiated");
    out += c * it->second;
  }
  return out;
}

std::string LinearForm::to_string() const {
  std::string out;
  auto append = [&](const mpq_class &c, const std::string &name) {
    if (c == 0)
      return;
    mpq_class magnitude = abs(c);
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (name.empty())
      out += magnitude.get_str();
    else
      out += (magnitude == 1 ? "" : magnitude.get_str() + "*") + name;
  };
  append(constant, "");
  for (const auto &[u, c] : terms) {
    std::string name = u.symbol == 0 ? "q" + std::to_string(u.generator + 1)
                                     : "c" + std::to_string(u.generator + 1) + "_" + std::to_string(u.symbol);
    append(c, name);
  }
  return out.empty() ? "0" : out;
}

ObstructionCertificate verify_obstruction(const std::vector<TorusPoint> &tuple,
                                          const TorusProjection &projection,
                                          std::size_t basis_size, std::size_t samples,
                                          std::uint64_t seed) {
  projection.validate();
  const std::size_t d = projection.target_dimension();
  check_points(tuple, d, basis_size);
  auto extra = projection.new_coordinates();
  if (extra.empty())
    throw PreconditionError("projection adds no coordinate");
  auto shape = block_shape(tuple);
  if (!shape)
    throw PreconditionError("tuple is not of counterexample shape");

  const std::size_t n = tuple.size();
  ObstructionCertificate cert;
  cert.extra_coordinate = extra.front();
  cert.blocks = shape->blocks;
  cert.lift_symbols = shape->symbols;
  cert.lambda.assign(projection.source_dimension, LinearForm{});
  cert.lambda[cert.extra_coordinate].constant = 1;
  cert.rational_values.assign(n, LinearForm{});

  // For generator l with new coordinate q_l + sum_s c_{l,s} b_s, choose
  // lambda on block l so the block combination cancels the irrational part:
  // lambda_block = -(C^T)^{-1} c_l.
  for (std::size_t l = 0; l < n; ++l) {
    const auto &block = shape->blocks[l];
    const auto &syms = shape->symbols[l];
    LinearForm &value = cert.rational_values[l];
    value.terms[{l, 0}] = 1;
    for (std::size_t a = 0; a < block.size(); ++a) {
      LinearForm &lam = cert.lambda[projection.kept[block[a]]];
      const mpq_class &r = tuple[l][block[a]].rational_part();
      for (std::size_t s = 0; s < syms.size(); ++s) {
        mpq_class coeff = -shape->inverse[l][a][s];
        if (coeff == 0)
          continue;
        lam.terms[{l, syms[s]}] += coeff;
        if (r != 0)
          value.terms[{l, syms[s]}] += coeff * r;
      }
    }
  }

  std::mt19937_64 rng(seed);
  cert.samples = samples;
  for (std::size_t t = 0; t < samples; ++t) {
    std::map<LiftUnknown, mpq_class> values;
    std::vector<TorusPoint> lift;
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<SymbolicReal> coords(projection.source_dimension);
      for (std::size_t i = 0; i < d; ++i)
        coords[projection.kept[i]] = tuple[l][i];
      for (std::size_t j : extra) {
        mpq_class q = mod_one(random_rational(rng, 0, 9, 10));
        SymbolicReal x = SymbolicReal::rational(q);
        if (j == cert.extra_coordinate)
          values[{l, 0}] = q;
        for (std::size_t s : shape->symbols[l]) {
          mpq_class c = random_rational(rng, -9, 9, 9);
          x += SymbolicReal::symbol(s, c);
          if (j == cert.extra_coordinate)
            values[{l, s}] = c;
        }
        coords[j] = x;
      }
      lift.emplace_back(std::move(coords));
    }

    std::vector<mpq_class> lambda;
    bool nonzero = false;
    for (const auto &form : cert.lambda) {
      lambda.push_back(form.evaluate(values));
      nonzero = nonzero || lambda.back() != 0;
    }
    bool ok = nonzero;
    for (std::size_t l = 0; l < n && ok; ++l) {
      SymbolicReal combination;
      for (std::size_t j = 0; j < projection.source_dimension; ++j)
        combination += lambda[j] * lift[l][j];
      ok = combination.is_rational() &&
           combination.rational_part() == cert.rational_values[l].evaluate(values);
    }
    ok = ok && !kronecker_generates(lift, projection.source_dimension, basis_size);
    if (ok)
      ++cert.samples_passed;
  }
  return cert;
}

std::vector<TorusPoint> build_counterexample(const std::vector<std::size_t> &block_sizes,
                                             std::size_t basis_size) {
  if (block_sizes.empty())
    throw PreconditionError("need at least one block");
  std::size_t total = 0;
  for (auto s : block_sizes) {
    if (s == 0)
      throw PreconditionError("blocks must be nonempty");
    total += s;
  }
  if (total > basis_size)
    throw PreconditionError("basis too small: blocks need " + std::to_string(total) +
                            " symbols, basis has " + std::to_string(basis_size));
  std::vector<TorusPoint> out;
  std::size_t offset = 0;
  for (auto size : block_sizes) {
    std::vector<SymbolicReal> coords(total);
    for (std::size_t a = 0; a < size; ++a)
      coords[offset + a] = SymbolicReal::symbol(offset + a + 1);
    out.emplace_back(std::move(coords));
    offset += size;
  }
  if (!kronecker_generates(out, total, basis_size))
    throw std::logic_error("counterexample tuple fails to generate");
  return out;
}

TorusLiftResult find_generating_lift_torus(const TorusProjection &projection,
                                           const std::vector<TorusPoint> &tuple, LiftPolicy policy,
                                           std::size_t basis_size) {
  projection.validate();
  const std::size_t d = projection.target_dimension();
  const std::size_t big = projection.source_dimension;
  if (!kronecker_generates(tuple, d, basis_size))
    throw PreconditionError("tuple does not generate the target torus");

  TorusLiftResult result;
  result.basis_size = basis_size;
  if (projection.is_identity()) {
    result.lift = tuple;
    result.reason = "identity projection";
    return result;
  }

  const auto extra = projection.new_coordinates();
  auto embed = [&](const TorusPoint &h) {
    std::vector<SymbolicReal> coords(big);
    for (std::size_t i = 0; i < d; ++i)
      coords[projection.kept[i]] = h[i];
    return coords;
  };

  if (policy == LiftPolicy::FreshSymbols) {
    std::size_t next = basis_size;
    std::vector<TorusPoint> lift;
    for (const auto &h : tuple) {
      auto coords = embed(h);
      for (std::size_t j : extra)
        coords[j] = SymbolicReal::symbol(++next);
      lift.emplace_back(std::move(coords));
    }
    if (!kronecker_generates(lift, big, next))
      throw std::logic_error("fresh-symbol lift fails to generate");
    result.lift = std::move(lift);
    result.basis_size = next;
    result.reason = "fresh independent symbols";
    return result;
  }

  // Rows (l, s) with s a symbol used by h_l; other rows vanish for every
  // admissible lift.
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  for (std::size_t l = 0; l < tuple.size(); ++l)
    for (std::size_t s : symbols_used(tuple[l]))
      rows.emplace_back(l, s);

  if (rows.size() >= big) {
    std::vector<std::vector<mpq_class>> columns; // each of length rows.size()
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<mpq_class> col(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        col[r] = tuple[rows[r].first][i].coefficient(rows[r].second);
      columns.push_back(std::move(col));
    }
    auto column_rank = [&](const std::vector<std::vector<mpq_class>> &cols) {
      std::vector<std::vector<mpq_class>> as_rows(rows.size(), std::vector<mpq_class>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows.size(); ++r)
          as_rows[r][c] = cols[c][r];
      return rank(clear_denominators(as_rows, cols.size()));
    };
    std::vector<std::size_t> chosen_rows;
    for (std::size_t r = 0; r < rows.size() && chosen_rows.size() < extra.size(); ++r) {
      std::vector<mpq_class> unit(rows.size(), 0);
      unit[r] = 1;
      columns.push_back(unit);
      if (column_rank(columns) == columns.size())
        chosen_rows.push_back(r);
      else
        columns.pop_back();
    }
    std::vector<TorusPoint> lift;
    for (std::size_t l = 0; l < tuple.size(); ++l) {
      auto coords = embed(tuple[l]);
      for (std::size_t e = 0; e < extra.size(); ++e)
        if (rows[chosen_rows[e]].first == l)
          coords[extra[e]] = SymbolicReal::symbol(rows[chosen_rows[e]].second);
      lift.emplace_back(std::move(coords));
    }
    if (!kronecker_generates(lift, big, basis_size))
      throw std::logic_error("constructed ambient lift fails to generate");
    result.lift = std::move(lift);
    result.reason = "ambient lift completes the coefficient rank";
    return result;
  }

  result.reason = "every ambient lift has coefficient rank at most " + std::to_string(rows.size()) +
                  " < " + std::to_string(big);
  if (block_shape(tuple))
    result.certificate = verify_obstruction(tuple, projection, basis_size);
  return result;
}

} // namespace gaschutz
