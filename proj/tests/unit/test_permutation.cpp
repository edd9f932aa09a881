#include <doctest.h>

#include "gaschutz/error.hpp"
#include "gaschutz/notation.hpp"
#include "gaschutz/permutation.hpp"
#include "../support/oracles.hpp"

using namespace gaschutz;

namespace {
Permutation cyc(std::size_t degree, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}
} // namespace

TEST_CASE("compose evaluates right to left") {
  auto id = Permutation::identity(3);
  auto t = cyc(3, {{0, 1}});
  auto c = cyc(3, {{0, 1, 2}});
  CHECK(compose(id, c) == c);
  CHECK(compose(t, t).is_identity());
  // Pointwise: 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1.
  auto tc = compose(t, c);
  CHECK(tc(0) == 0);
  CHECK(tc(1) == 2);
  CHECK(tc(2) == 1);
  CHECK(tc == cyc(3, {{1, 2}}));
  CHECK_THROWS_AS(compose(t, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("permutation basics") {
  auto p = cyc(5, {{0, 3, 1}, {2, 4}});
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(p.cycles() == std::vector<std::vector<Point>>{{0, 3, 1}, {2, 4}});
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), PreconditionError);
  CHECK(p.hash() == cyc(5, {{2, 4}, {1, 0, 3}}).hash());
}

TEST_CASE("close") {
  CHECK(close({}, 3).size() == 1);
  std::vector<Permutation> one{cyc(2, {{0, 1}})};
  CHECK(close(one).size() == 2);
  std::vector<Permutation> s3{cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})};
  auto g = close(s3);
  CHECK(g.size() == 6);
  CHECK(g[0].is_identity());
  auto expected = oracle::naive_closure({{1, 0, 2}, {1, 2, 0}}, 3);
  CHECK(expected.size() == 6);
  for (const auto &p : expected)
    CHECK(g.contains(Permutation(p)));

  std::vector<Permutation> s6{cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3, 4, 5}})};
  CHECK_THROWS_AS(close(s6, 0, 100), OrderCapExceeded);
  CHECK(close(s6, 0, 720).size() == 720);
  std::vector<Permutation> mixed{cyc(2, {{0, 1}}), cyc(3, {{0, 1}})};
  CHECK_THROWS_AS(close(mixed), DegreeMismatch);
}

TEST_CASE("is_member") {
  std::vector<Permutation> t{cyc(3, {{0, 1}})};
  auto c2 = close(t);
  CHECK(is_member(c2, Permutation::identity(3)));
  CHECK_FALSE(is_member(c2, cyc(3, {{0, 1, 2}})));
  std::vector<Permutation> s3{cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})};
  CHECK(is_member(close(s3), cyc(3, {{0, 2}})));
  CHECK_THROWS_AS(is_member(c2, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("cycle notation round trip") {
  CHECK(format_permutation(parse_permutation("(1 2 3)(4 5)")) == "(1 2 3)(4 5)");
  CHECK(format_permutation(parse_permutation("(3 1 2)", 4)) == "(1 2 3)");
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK_THROWS_AS(parse_permutation("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 5)", 3), ParseError);
}
