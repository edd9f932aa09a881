#include <doctest.h>

#include "gaschutz/error.hpp"
#include "gaschutz/integer_matrix.hpp"
#include "gaschutz/smith.hpp"
#include "../support/oracles.hpp"

using namespace gaschutz;

TEST_CASE("smith normal form examples") {
  auto zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.s.is_zero());
  CHECK(zero.invariant_factors == std::vector<mpz_class>{0, 0});

  auto m = IntMatrix::from_rows({{2, 0}, {0, 3}});
  auto snf = smith_normal_form(m);
  CHECK(snf.invariant_factors == std::vector<mpz_class>{1, 6});
  CHECK(snf.u * m * snf.v == snf.s);

  auto five = smith_normal_form(IntMatrix::from_rows({{5}}));
  CHECK(five.invariant_factors == std::vector<mpz_class>{5});

  auto neg = smith_normal_form(IntMatrix::from_rows({{-4, 6}, {2, 2}}));
  CHECK(neg.invariant_factors == std::vector<mpz_class>{2, 10});

  // Large entries stay exact.
  IntMatrix big(2, 2);
  big(0, 0) = mpz_class("123456789012345678901234567890");
  big(1, 1) = mpz_class("987654321098765432109876543210");
  auto b = smith_normal_form(big);
  CHECK(b.u * big * b.v == b.s);
  CHECK(b.invariant_factors[0] * b.invariant_factors[1] ==
        big(0, 0) * big(1, 1));
}

TEST_CASE("rank, determinant, kernel") {
  auto m = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  CHECK(determinant(IntMatrix::from_rows({{2, 1}, {1, 1}})) == 1);
  auto k = kernel_vector(m);
  REQUIRE(k.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < 3; ++j)
      s += mpq_class(m(i, j)) * k[j];
    CHECK(s == 0);
  }
  CHECK(kernel_vector(IntMatrix::identity(3)).empty());
}

TEST_CASE("abelian_min_generators") {
  CHECK(abelian_min_generators(IntMatrix::from_rows({{6}})) == 1);
  CHECK(abelian_min_generators(IntMatrix::from_rows({{2, 0}, {0, 2}})) == 2);
  CHECK(abelian_min_generators(IntMatrix(1, 0)) == 1);
  CHECK(abelian_min_generators(IntMatrix::from_rows({{2, 0}, {0, 3}})) == 1);
  CHECK(abelian_min_generators(IntMatrix::from_rows({{1}})) == 0);
  CHECK(abelian_min_generators(IntMatrix(3, 1)) == 3);
}

TEST_CASE("lattice_tuple_generates examples") {
  CHECK(lattice_tuple_generates(1, {{1}}));
  CHECK(lattice_tuple_generates(1, {{2}, {5}}));
  CHECK_FALSE(lattice_tuple_generates(2, {{2, 0}, {0, 3}}));
  CHECK_FALSE(lattice_tuple_generates(2, {{1, 0}}));
  CHECK(lattice_tuple_generates(2, {{2, 1}, {1, 1}}));
}

TEST_CASE("lattice_tuple_generates agrees with bounded search and minors") {
  std::vector<long> values{-3, -2, -1, 0, 1, 2, 3};
  std::size_t checked = 0;
  // r = 1: up to three vectors, exhaustive.
  for (long a : values)
    for (long b : values)
      for (long c : values) {
        std::vector<std::vector<long>> t{{a}, {b}, {c}};
        bool lib = lattice_tuple_generates(1, t);
        CHECK(lib == oracle::lattice_generates_by_minors(1, t));
        CHECK(lib == oracle::lattice_generates_by_search(1, t));
        ++checked;
      }
  // r = 2: two vectors, exhaustive.
  for (long a : values)
    for (long b : values)
      for (long c : values)
        for (long d : values) {
          std::vector<std::vector<long>> t{{a, b}, {c, d}};
          bool lib = lattice_tuple_generates(2, t);
          CHECK(lib == oracle::lattice_generates_by_minors(2, t));
          CHECK(lib == oracle::lattice_generates_by_search(2, t));
          ++checked;
        }
  // r = 2: three vectors, every third combination of the first entry.
  for (long a : {-3, 0, 2})
    for (long b : values)
      for (long c : values)
        for (long d : values)
          for (long e : {-2, 1, 3})
            for (long f : values) {
              std::vector<std::vector<long>> t{{a, b}, {c, d}, {e, f}};
              bool lib = lattice_tuple_generates(2, t);
              CHECK(lib == oracle::lattice_generates_by_minors(2, t));
              ++checked;
            }
  CHECK(checked > 3000);
}

TEST_CASE("cyclic quotient lift") {
  auto no = cyclic_quotient_lift_exists(5, 2);
  CHECK_FALSE(no.exists);
  CHECK(no.failed_congruences.size() == 2);
  auto one = cyclic_quotient_lift_exists(5, 1);
  CHECK(one.exists);
  CHECK(one.witness == 1);
  auto three = cyclic_quotient_lift_exists(3, 2);
  CHECK(three.exists);
  CHECK(three.witness == -1);
  CHECK(three.multiplier == -1);
  CHECK(cyclic_quotient_lift_exists(7, 6).witness == -1);
  CHECK(cyclic_quotient_lift_exists(1, 0).exists);
  CHECK_THROWS_AS(cyclic_quotient_lift_exists(6, 2), PreconditionError);
  CHECK_THROWS_AS(cyclic_quotient_lift_exists(0, 1), PreconditionError);
  // h lifts to a generator of Z iff h = ±1 mod m.
  for (long m = 1; m <= 30; ++m)
    for (long h = 0; h < m; ++h) {
      if (std::gcd(h, m) != 1)
        continue;
      auto r = cyclic_quotient_lift_exists(m, h);
      bool expected = (h - 1) % m == 0 || (h + 1) % m == 0;
      CHECK(r.exists == expected);
      if (r.exists)
        CHECK((r.witness - h) == r.multiplier * m);
    }
}

TEST_CASE("matrix file format") {
  auto m = parse_matrix("2 3\n1 -2 3\n4 5 6\n");
  CHECK(m.rows() == 2);
  CHECK(m(1, 2) == 6);
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3 x"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3 4 5"), ParseError);
}
