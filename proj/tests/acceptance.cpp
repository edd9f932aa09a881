// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "gaschutz/cli.hpp"
#include "gaschutz/error.hpp"
#include "gaschutz/kernels.hpp"
#include "gaschutz/lifts.hpp"
#include "gaschutz/notation.hpp"
#include "gaschutz/torus.hpp"
#include "gaschutz/tower.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace gaschutz;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string &why) {
    if (pass)
      detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool oracle_generates(const FiniteGroup &g, const std::vector<Index> &tuple) {
  std::vector<std::uint32_t> raw(tuple.begin(), tuple.end());
  return oracle::index_closure(raw, [&](std::uint32_t a, std::uint32_t b) { return g.mul(a, b); }).size() ==
         g.order();
}

std::string tuple_text(const std::vector<Index> &t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

// Criteria 1-3 share one sweep over the epimorphism corpus.
struct CorpusSweep {
  Verdict lemma, constancy, recursion;
  std::size_t epimorphisms = 0, lifted_tuples = 0, phi_pairs = 0;
  double lemma_seconds = 0;
};

CorpusSweep sweep_corpus() {
  CorpusSweep out;
  for (const auto &spec : testing_corpus::group_specs()) {
    auto g = group_from_spec(spec);
    const std::size_t d = min_generators(g);
    for (const auto &normal : normal_subgroups(g)) {
      Quotient q = quotient(g, normal);
      const GroupHom &f = q.projection;
      PhiRecursion recursion(f);
      ++out.epimorphisms;
      for (std::size_t n = d; n <= d + 1; ++n) {
        auto tuples = generating_tuple_entries(q.group, n);
        const std::string where =
            spec + " / N of order " + std::to_string(normal.order()) + ", n = " + std::to_string(n);

        // 1: every generating tuple has a generating lift, re-verified.
        auto start = Clock::now();
        for (const auto &h : tuples) {
          auto lift = find_generating_lift(f, h);
          bool ok = lift.has_value();
          for (std::size_t i = 0; ok && i < n; ++i)
            ok = f((*lift)[i]) == h[i];
          ok = ok && oracle_generates(*g, *lift);
          if (!ok)
            out.lemma.fail(where + ", h = " + tuple_text(h));
          ++out.lifted_tuples;
        }
        out.lemma_seconds += seconds_since(start);

        // 2: phi over the full source is constant.
        auto full = Subgroup::full(g);
        auto phi = phi_batch(f, full, tuples, Backend::OpenMP);
        if (!phi.empty()) {
          auto [lo, hi] = std::minmax_element(phi.begin(), phi.end());
          if (*lo != *hi)
            out.constancy.fail(where + ": min " + std::to_string(*lo) + " max " + std::to_string(*hi));
          if (*lo == 0)
            out.constancy.fail(where + ": phi = 0");
        }

        // 3: recursion equals brute force for every F with f(F) = H.
        for (const auto &F : recursion.onto_subgroups()) {
          auto brute = phi_batch(f, F, tuples, Backend::OpenMP);
          for (std::size_t t = 0; t < tuples.size(); ++t) {
            auto r = recursion.phi(F, tuples[t]).count;
            if (r != brute[t])
              out.recursion.fail(where + ", |F| = " + std::to_string(F.order()) + ", h = " + tuple_text(tuples[t]) +
                                 ": recursion " + std::to_string(r) + " brute " + std::to_string(brute[t]));
            ++out.phi_pairs;
          }
        }
      }
    }
  }
  if (out.lemma_seconds >= 300)
    out.lemma.fail("took " + std::to_string(out.lemma_seconds) + " s");
  return out;
}

Verdict klein_example() {
  Verdict v;
  auto klein = group_from_spec("klein");
  auto f = hom_from_generator_images(klein, FiniteGroup::from_generators({}, 1), std::vector<Index>{0, 0});
  std::vector<Index> h{0, 0};
  auto full = Subgroup::full(klein);
  PhiRecursion recursion(f);
  std::uint64_t subtracted = 0;
  std::size_t order_two = 0;
  for (const auto &e : recursion.onto_subgroups()) {
    if (e.is_full())
      continue;
    auto value = recursion.phi(e, h).count;
    subtracted += value;
    if (e.order() == 1 && value != 1)
      v.fail("phi over the trivial subgroup is " + std::to_string(value));
    if (e.order() == 2) {
      ++order_two;
      if (value != 3)
        v.fail("phi over an order-2 subgroup is " + std::to_string(value));
    }
  }
  auto rec = recursion.phi(full, h).count;
  auto brute = phi_brute(f, full, h).count;
  if (order_two != 3 || subtracted != 1 + 3 * 3)
    v.fail("subtracted family differs from 1 + 3*3");
  if (rec != 16 - subtracted || rec != 6)
    v.fail("recursion gives " + std::to_string(rec));
  if (brute != 6)
    v.fail("brute force gives " + std::to_string(brute));
  v.detail = v.pass ? "recursion 16 - (1 + 3*3) = " + std::to_string(rec) + ", brute force " + std::to_string(brute)
                    : v.detail;
  return v;
}

Verdict zlift_example() {
  Verdict v;
  auto run = [](std::vector<std::string> args, int &status) {
    std::ostringstream out, err;
    status = run_cli(args, out, err);
    return out.str();
  };
  int s5 = -1, s3 = -1;
  auto five = run({"zlift", "--modulus", "5", "--generator", "2"}, s5);
  auto three = run({"zlift", "--modulus", "3", "--generator", "2"}, s3);
  if (s5 != kExitNegative || five.find("outcome: no generating lift") == std::string::npos)
    v.fail("modulus 5: exit " + std::to_string(s5));
  if (s3 != kExitOk || three.find("witness: -1") == std::string::npos)
    v.fail("modulus 3: exit " + std::to_string(s3));
  if (v.pass)
    v.detail = "5/2: no generating lift (exit 1); 3/2: witness -1 (exit 0)";
  return v;
}

Verdict kronecker_rational() {
  Verdict v;
  const std::vector<mpq_class> values{0, mpq_class(1, 2), mpq_class(1, 3), mpq_class(2, 3), mpq_class(1, 4),
                                      mpq_class(3, 4)};
  std::size_t checked = 0;
  for (std::size_t d = 1; d <= 2; ++d)
    for (std::size_t m = 0; m <= 2; ++m) {
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
        ++checked;
        if (kronecker_generates(points, d, 0))
          v.fail("rational tuple reported generating: " + to_string(points));
        auto order = rational_closure_order(points, d);
        auto expected = oracle::rational_torus_order(raw, d);
        if (!order || *order != expected)
          v.fail("closure order of " + to_string(points) + " is " + (order ? order->get_str() : "not-finite") +
                 ", enumeration gives " + std::to_string(expected));
      }
    }
  if (v.pass)
    v.detail = std::to_string(checked) + " rational tuples, 100% agreement";
  return v;
}

Verdict counterexample_obstruction() {
  Verdict v;
  std::mt19937_64 rng(20240611);
  auto rational = [&](long lo, long hi) {
    mpq_class q(std::uniform_int_distribution<long>(lo, hi)(rng), std::uniform_int_distribution<long>(1, 7)(rng));
    q.canonicalize();
    return q;
  };
  std::vector<std::vector<std::size_t>> shapes{{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
  std::size_t certificates = 0, samples = 0;
  for (const auto &sizes : shapes) {
    std::size_t dim = 0;
    for (auto s : sizes)
      dim += s;
    const std::size_t basis = dim;
    std::string where = "sizes (";
    for (std::size_t i = 0; i < sizes.size(); ++i)
      where += (i ? "," : "") + std::to_string(sizes[i]);
    where += ")";

    auto h = build_counterexample(sizes, basis);
    if (!kronecker_generates(h, dim, basis))
      v.fail(where + ": built tuple does not generate");
    TorusProjection proj{dim + 1, {}};
    for (std::size_t i = 0; i < dim; ++i)
      proj.kept.push_back(i);

    auto cert = verify_obstruction(h, proj, basis);
    ++certificates;
    if (cert.samples != 100 || cert.samples_passed != 100)
      v.fail(where + ": " + std::to_string(cert.samples_passed) + "/" + std::to_string(cert.samples) + " samples");

    // Independent re-check of the symbolic lambda on fresh instantiations.
    for (int t = 0; t < 100; ++t) {
      std::map<LiftUnknown, mpq_class> values;
      std::vector<TorusPoint> lift;
      for (std::size_t l = 0; l < h.size(); ++l) {
        mpq_class q = mod_one(rational(0, 20));
        values[{l, 0}] = q;
        SymbolicReal extra = SymbolicReal::rational(q);
        for (auto s : cert.lift_symbols[l]) {
          auto c = rational(-12, 12);
          values[{l, s}] = c;
          extra += SymbolicReal::symbol(s, c);
        }
        auto coords = h[l].coordinates();
        coords.push_back(extra);
        lift.emplace_back(coords);
      }
      std::vector<mpq_class> lambda;
      bool nonzero = false;
      for (const auto &form : cert.lambda) {
        lambda.push_back(form.evaluate(values));
        nonzero = nonzero || lambda.back() != 0;
      }
      bool ok = nonzero;
      for (const auto &g : lift)
        for (std::size_t j = 1; ok && j <= basis; ++j) {
          mpq_class s = 0;
          for (std::size_t i = 0; i <= dim; ++i)
            s += lambda[i] * g[i].coefficient(j);
          ok = s == 0;
        }
      ok = ok && !kronecker_generates(lift, dim + 1, basis);
      ++samples;
      if (!ok)
        v.fail(where + ": independent instantiation " + to_string(lift) + " escapes the certificate");
    }

    auto ambient = find_generating_lift_torus(proj, h, LiftPolicy::AmbientOnly, basis);
    if (ambient.lift)
      v.fail(where + ": ambient-only policy produced a lift");
    auto fresh = find_generating_lift_torus(proj, h, LiftPolicy::FreshSymbols, basis);
    if (!fresh.lift || !kronecker_generates(*fresh.lift, dim + 1, fresh.basis_size))
      v.fail(where + ": fresh-symbol lift does not generate");
  }
  if (v.pass)
    v.detail = std::to_string(certificates) + " certificates at 100/100, " + std::to_string(samples) +
               " independent instantiations, fresh lifts generate";
  return v;
}

Verdict towers() {
  Verdict v;
  std::size_t lifts = 0;
  auto check_tower = [&](const Tower &t, const std::string &name, std::size_t n) {
    for (const auto &h : generating_tuple_entries(t.base().group, n)) {
      auto lift = tower_lift(t, h);
      ++lifts;
      std::string where = name + ", n = " + std::to_string(n) + ", h = " + tuple_text(h);
      for (std::size_t i = 0; i < n; ++i)
        if (t.base().projection(lift.deepest[i]) != h[i])
          v.fail(where + ": deepest tuple is not a lift");
      for (std::size_t m = 0; m < t.depth(); ++m) {
        std::vector<Index> projected;
        for (Index x : lift.deepest)
          projected.push_back(t.to_level[m](x));
        if (projected != lift.per_level[m] || !oracle_generates(*t.levels[m], projected))
          v.fail(where + ": level " + std::to_string(m + 1) + " not generated");
      }
      if (lift.level_counts.size() != t.depth() || !lift.level_sets_positive())
        v.fail(where + ": empty level set");
      if (level_sets_nonempty(t, lift.arbitrary_lift, Backend::Serial) != lift.level_counts)
        v.fail(where + ": serial and parallel level sets differ");
    }
  };
  for (long p : {2L, 3L})
    for (std::size_t depth = 1; depth <= 4; ++depth)
      for (std::size_t n = 1; n <= 2; ++n)
        check_tower(build_cyclic_tower(p, depth), "cyclic:" + std::to_string(p) + ":" + std::to_string(depth), n);
  for (const char *family : {"sym4", "dihedral8"})
    for (std::size_t n = 2; n <= 3; ++n)
      check_tower(build_named_tower(family), family, n);
  if (v.pass)
    v.detail = std::to_string(lifts) + " tower lifts generate every level with positive level sets";
  return v;
}

Verdict property_suites() {
  Verdict v;
  std::size_t cases = 0, suites = 0;
  for (const auto &suite : properties::all_suites()) {
    auto o = suite();
    ++suites;
    cases += o.cases;
    if (!o.passed())
      v.fail(o.name + ": " + std::to_string(o.failures) + " failures in " + std::to_string(o.cases) +
             " cases, first " + o.first_failure);
  }
  if (v.pass)
    v.detail = std::to_string(suites) + " suites, " + std::to_string(cases) + " randomized cases";
  return v;
}

} // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const char *title, const Verdict &v, double secs) {
    std::printf("criterion %d: %s - %s (%s) [%.1f s]\n", id, v.pass ? "PASS" : "FAIL", title, v.detail.c_str(),
                secs);
    std::fflush(stdout);
    all = all && v.pass;
  };
  auto timed = [&](int id, const char *title, const std::function<Verdict()> &f) {
    auto start = Clock::now();
    Verdict v;
    try {
      v = f();
    } catch (const std::exception &e) {
      v.fail(std::string("exception: ") + e.what());
    }
    report(id, title, v, seconds_since(start));
  };

  auto start = Clock::now();
  CorpusSweep sweep;
  try {
    sweep = sweep_corpus();
  } catch (const std::exception &e) {
    sweep.lemma.fail(std::string("exception: ") + e.what());
    sweep.constancy.fail(sweep.lemma.detail);
    sweep.recursion.fail(sweep.lemma.detail);
  }
  double sweep_secs = seconds_since(start);
  if (sweep.lemma.pass)
    sweep.lemma.detail = std::to_string(sweep.epimorphisms) + " epimorphisms, " +
                         std::to_string(sweep.lifted_tuples) + " tuples lifted, 0 violations, lifting took " +
                         std::to_string(static_cast<int>(sweep.lemma_seconds + 0.5)) + " s";
  if (sweep.constancy.pass)
    sweep.constancy.detail = "max = min on every (epimorphism, n)";
  if (sweep.recursion.pass)
    sweep.recursion.detail = std::to_string(sweep.phi_pairs) + " (F, h, n) triples agree exactly";
  report(1, "generating lifts over the quotient corpus", sweep.lemma, sweep_secs);
  report(2, "phi constancy", sweep.constancy, 0);
  report(3, "recursion equals brute force", sweep.recursion, 0);
  timed(4, "Klein four worked example", klein_example);
  timed(5, "Z -> Z/m generating lifts", zlift_example);
  timed(6, "Kronecker rational oracle agreement", kronecker_rational);
  timed(7, "counterexample obstruction", counterexample_obstruction);
  timed(8, "tower lifting", towers);
  timed(9, "property suites", property_suites);
  std::printf("acceptance: %s\n", all ? "ALL PASS" : "FAILURES");
  return all ? 0 : 1;
}
