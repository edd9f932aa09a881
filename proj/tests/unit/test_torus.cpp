#include <doctest.h>

#include "gaschutz/error.hpp"
#include "gaschutz/torus.hpp"
#include "../support/oracles.hpp"

using namespace gaschutz;

namespace {
std::vector<TorusPoint> pts(const char *text) { return parse_points(text); }
} // namespace

TEST_CASE("symbolic literal grammar") {
  auto x = parse_symbolic("1/2 + 3*b1 - b2");
  CHECK(x.rational_part() == mpq_class(1, 2));
  CHECK(x.coefficient(1) == 3);
  CHECK(x.coefficient(2) == -1);
  CHECK(x.coefficient(7) == 0);
  CHECK(to_string(x) == "1/2 + 3*b1 - b2");
  CHECK(parse_symbolic(" -b3+2 ") == parse_symbolic("2 - 1*b3"));
  CHECK(parse_symbolic("0").is_zero());
  CHECK(parse_symbolic("b1 - b1").is_zero());
  CHECK(parse_symbolic("2/4*b2") == SymbolicReal::symbol(2, mpq_class(1, 2)));
  CHECK_THROWS_AS(parse_symbolic("1/0"), ParseError);
  CHECK_THROWS_AS(parse_symbolic("b0"), ParseError);
  CHECK_THROWS_AS(parse_symbolic("1 +"), ParseError);
  CHECK_THROWS_AS(parse_symbolic("x1"), ParseError);
}

TEST_CASE("torus points reduce modulo one") {
  auto p = pts("3/2 + b1, -1/3");
  CHECK(p[0][0].rational_part() == mpq_class(1, 2));
  CHECK(p[0][1].rational_part() == mpq_class(2, 3));
  CHECK(mod_one(mpq_class(-7, 4)) == mpq_class(1, 4));
  CHECK(pts("1") == pts("0"));
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker_generates(pts("b1"), 1, 1));
  auto half = kronecker_decide(pts("1/2"), 1, 0);
  CHECK_FALSE(half.generates);
  CHECK(half.witness.size() == 1);
  CHECK(kronecker_generates(pts("b1, b2"), 2, 2));
  auto dep = kronecker_decide(pts("b1, 2*b1"), 2, 1);
  CHECK_FALSE(dep.generates);
  CHECK(dep.rank == 1);
  // lambda proportional to (2, -1)
  CHECK(dep.witness[0] == -2 * dep.witness[1]);
  // Two points, each alone insufficient.
  CHECK(kronecker_generates(pts("b1, 0; 0, b2"), 2, 2));
  CHECK_FALSE(kronecker_generates(pts("b1, b1; 1/2, 0"), 2, 1));
  CHECK(kronecker_generates(pts("b1, b1; b2, 0"), 2, 2));
  CHECK_THROWS_AS(kronecker_decide(pts("b1, b2"), 3, 2), PreconditionError);
  CHECK_THROWS_AS(kronecker_decide(pts("b3"), 1, 2), PreconditionError);
}

TEST_CASE("rational closure order") {
  CHECK(*rational_closure_order(pts("1/2"), 1) == 2);
  CHECK(*rational_closure_order(pts("1/2, 1/3"), 2) == 6);
  CHECK_FALSE(rational_closure_order(pts("b1"), 1));
  CHECK(*rational_closure_order(pts("1/2, 0; 0, 1/2"), 2) == 4);
  CHECK(*rational_closure_order(pts("1/4, 1/2"), 2) == 4);
  CHECK(*rational_closure_order({}, 2) == 1);
}

TEST_CASE("rational tuples never generate and their order matches enumeration") {
  const std::vector<mpq_class> values{0, mpq_class(1, 2), mpq_class(1, 3), mpq_class(2, 3), mpq_class(1, 4),
                                      mpq_class(3, 4)};
  std::size_t checked = 0;
  for (std::size_t d = 1; d <= 2; ++d)
    for (std::size_t m = 1; m <= 2; ++m) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < d * m; ++i)
        total *= values.size();
      for (std::size_t t = 0; t < total; ++t) {
        std::vector<std::vector<mpq_class>> raw(m, std::vector<mpq_class>(d));
        std::vector<TorusPoint> points;
        for (std::size_t l = 0, rest = t; l < m; ++l) {
          std::vector<SymbolicReal> coords;
          for (std::size_t i = 0; i < d; ++i, rest /= values.size()) {
            raw[l][i] = values[rest % values.size()];
            coords.push_back(SymbolicReal::rational(raw[l][i]));
          }
          points.emplace_back(coords);
        }
        CHECK_FALSE(kronecker_generates(points, d, 0));
        auto order = rational_closure_order(points, d);
        REQUIRE(order);
        CHECK(*order == oracle::rational_torus_order(raw, d));
        ++checked;
      }
    }
  CHECK(checked == 6 + 36 + 36 + 1296);
}

TEST_CASE("build_counterexample") {
  auto one = build_counterexample({1}, 1);
  CHECK(one == pts("b1"));
  CHECK(kronecker_generates(one, 1, 1));
  auto two = build_counterexample({2}, 2);
  CHECK(two == pts("b1, b2"));
  auto pair = build_counterexample({1, 1}, 2);
  CHECK(pair == pts("b1, 0; 0, b2"));
  CHECK(kronecker_generates(pair, 2, 2));
  CHECK_THROWS_AS(build_counterexample({2, 1}, 2), PreconditionError);
}

TEST_CASE("torus lifts") {
  TorusProjection proj{2, {0}};
  auto fresh = find_generating_lift_torus(proj, pts("b1"), LiftPolicy::FreshSymbols, 1);
  REQUIRE(fresh.lift);
  CHECK(*fresh.lift == pts("b1, b2"));
  CHECK(kronecker_generates(*fresh.lift, 2, fresh.basis_size));

  auto ambient = find_generating_lift_torus(proj, pts("b1"), LiftPolicy::AmbientOnly, 1);
  CHECK_FALSE(ambient.lift);
  REQUIRE(ambient.certificate);
  CHECK(ambient.certificate->valid());
  CHECK(ambient.certificate->lambda.size() == 2);
  CHECK(ambient.certificate->lambda[0].to_string() == "-c1_1");
  CHECK(ambient.certificate->lambda[1].to_string() == "1");
  CHECK(ambient.certificate->rational_values[0].to_string() == "q1");

  TorusProjection same{2, {0, 1}};
  auto h = pts("b1, b2");
  auto identity = find_generating_lift_torus(same, h, LiftPolicy::AmbientOnly, 2);
  REQUIRE(identity.lift);
  CHECK(*identity.lift == h);

  // A generator with two symbols has room for one more coordinate.
  auto roomy = find_generating_lift_torus(proj, pts("b1 + b2"), LiftPolicy::AmbientOnly, 2);
  REQUIRE(roomy.lift);
  CHECK(kronecker_generates(*roomy.lift, 2, 2));

  CHECK_THROWS_AS(find_generating_lift_torus(proj, pts("1/2"), LiftPolicy::FreshSymbols, 1), PreconditionError);
  CHECK_THROWS_AS(find_generating_lift_torus(TorusProjection{2, {1, 0}}, pts("b1"), LiftPolicy::FreshSymbols, 1),
                  PreconditionError);
}

TEST_CASE("verify_obstruction") {
  auto h = build_counterexample({1, 1}, 2);
  TorusProjection proj{3, {0, 1}};
  auto cert = verify_obstruction(h, proj, 2);
  CHECK(cert.valid());
  CHECK(cert.samples == 100);
  CHECK(cert.lambda.size() == 3);
  CHECK(cert.extra_coordinate == 2);
  CHECK(cert.lambda[2].to_string() == "1");
  CHECK_THROWS_AS(verify_obstruction(pts("1/2, 0; 0, 1/3"), proj, 2), PreconditionError);
  CHECK_THROWS_AS(verify_obstruction(pts("b1, b1; 0, b2"), proj, 2), PreconditionError);
}
