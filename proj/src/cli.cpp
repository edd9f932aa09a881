#include "gaschutz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "gaschutz/error.hpp"
#include "gaschutz/lifts.hpp"
#include "gaschutz/notation.hpp"
#include "gaschutz/smith.hpp"
#include "gaschutz/torus.hpp"
#include "gaschutz/tower.hpp"

namespace gaschutz {

std::string Report::get(const std::string &key) const {
  for (const auto &[k, v] : entries_)
    if (k == key)
      return v;
  return {};
}

void Report::print(std::ostream &out) const {
  for (const auto &[k, v] : entries_)
    out << k << ": " << v << '\n';
}

namespace {

std::string read_text_or_inline(const std::string &arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return arg;
}

std::string format_tuple(const FiniteGroup &g, std::span<const Index> tuple) {
  std::string out = "[";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i)
      out += ", ";
    out += format_permutation(g.element(tuple[i]));
  }
  return out + "]";
}

std::string format_counts(std::span<const std::uint64_t> counts) {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i)
    out += (i ? ", " : "") + std::to_string(counts[i]);
  return out + "]";
}

std::string format_histogram(const std::map<std::uint64_t, std::size_t> &histogram) {
  std::string out = "{";
  bool first = true;
  for (const auto &[phi, count] : histogram) {
    out += (first ? "" : ", ") + std::to_string(phi) + ": " + std::to_string(count);
    first = false;
  }
  return out + "}";
}

std::string matrix_inline(const IntMatrix &m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j)
      out += (j ? ", " : "") + m(i, j).get_str();
    out += "]";
  }
  return out + "]";
}

std::string rational_vector(const std::vector<mpq_class> &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? ", " : "") + v[i].get_str();
  return out + ")";
}

const char *yes_no(bool b) { return b ? "true" : "false"; }

struct Context {
  std::size_t cap = kDefaultOrderCap;
  Report report;
};

int cmd_dgen(Context &ctx, const std::string &spec) {
  auto g = group_from_spec(spec, ctx.cap);
  ctx.report.add("group", to_string(parse_group_spec(spec)));
  ctx.report.add("order", std::to_string(g->order()));
  ctx.report.add("dgen", std::to_string(min_generators(g)));
  return kExitOk;
}

struct HomInputs {
  GroupPtr source, target;
  GroupHom hom;
};

HomInputs load_hom(Context &ctx, const std::string &g, const std::string &h, const std::string &hom) {
  auto source = group_from_spec(g, ctx.cap);
  auto target = group_from_spec(h, ctx.cap);
  ctx.report.add("source", to_string(parse_group_spec(g)) + " (order " + std::to_string(source->order()) + ")");
  ctx.report.add("target", to_string(parse_group_spec(h)) + " (order " + std::to_string(target->order()) + ")");
  GroupHom f = build_hom(source, target, read_text_or_inline(hom));
  std::string spec;
  for (const auto &[i, word] : parse_hom_spec(read_text_or_inline(hom)))
    spec += (spec.empty() ? "" : "; ") + std::to_string(i) + " -> " + format_word(word);
  ctx.report.add("hom", spec);
  ctx.report.add("kernel_order", std::to_string(f.kernel().order()));
  ctx.report.add("surjective", yes_no(f.is_epimorphism()));
  return {source, target, std::move(f)};
}

int cmd_phi(Context &ctx, const std::string &g, const std::string &h, const std::string &hom, std::size_t n,
            const std::string &method) {
  if (method != "brute" && method != "recursive" && method != "both")
    throw PreconditionError("unknown method '" + method + "'");
  auto in = load_hom(ctx, g, h, hom);
  ctx.report.add("n", std::to_string(n));
  ctx.report.add("method", method);
  auto tuples = generating_tuple_entries(in.target, n);
  const Subgroup full = Subgroup::full(in.source);
  std::vector<std::uint64_t> brute, recursive;
  if (method != "recursive")
    brute = phi_batch(in.hom, full, tuples, Backend::OpenMP);
  if (method != "brute") {
    PhiRecursion recursion(in.hom);
    for (const auto &t : tuples)
      recursive.push_back(recursion.phi(full, t).count);
  }
  const auto &values = brute.empty() ? recursive : brute;
  ctx.report.add("tuple_count", std::to_string(tuples.size()));
  std::map<std::uint64_t, std::size_t> histogram;
  for (auto v : values)
    ++histogram[v];
  ctx.report.add("phi_histogram", format_histogram(histogram));
  if (!histogram.empty()) {
    ctx.report.add("phi_min", std::to_string(histogram.begin()->first));
    ctx.report.add("phi_max", std::to_string(histogram.rbegin()->first));
  }
  bool agree = true;
  if (method == "both") {
    agree = brute == recursive;
    ctx.report.add("methods_agree", yes_no(agree));
  }
  if (tuples.size() <= 64)
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      std::string line = std::to_string(values[i]);
      if (method == "both")
        line = "brute " + std::to_string(brute[i]) + ", recursive " + std::to_string(recursive[i]);
      ctx.report.add("phi " + format_tuple(*in.target, tuples[i]), line);
    }
  return agree ? kExitOk : kExitNegative;
}

int cmd_lift(Context &ctx, const std::string &g, const std::string &h, const std::string &hom,
             const std::string &tuple_text) {
  auto in = load_hom(ctx, g, h, hom);
  auto tuple = parse_tuple(*in.target, tuple_text);
  ctx.report.add("tuple", format_tuple(*in.target, tuple));
  auto lift = find_generating_lift(in.hom, tuple);
  if (!lift) {
    ctx.report.add("outcome", "no generating lift");
    return kExitNegative;
  }
  ctx.report.add("outcome", "generating lift found");
  ctx.report.add("lift", format_tuple(*in.source, *lift));
  return kExitOk;
}

int cmd_verify(Context &ctx, const std::string &g, const std::string &h, const std::string &hom, std::size_t n) {
  auto in = load_hom(ctx, g, h, hom);
  auto report = verify_epi_gaschutz(in.hom, n);
  ctx.report.add("n", std::to_string(n));
  ctx.report.add("dgen_source", std::to_string(report.min_generators));
  ctx.report.add("tuple_count", std::to_string(report.tuple_count));
  ctx.report.add("phi_min", std::to_string(report.min_phi));
  ctx.report.add("phi_max", std::to_string(report.max_phi));
  ctx.report.add("phi_constant", yes_no(report.phi_constant()));
  ctx.report.add("phi_histogram", format_histogram(report.phi_histogram));
  ctx.report.add("violations", std::to_string(report.violations.size()));
  for (const auto &v : report.violations)
    ctx.report.add("violation", format_tuple(*in.target, v));
  ctx.report.add("outcome", report.verified() ? "verified" : "violated");
  return report.verified() ? kExitOk : kExitNegative;
}

int cmd_gas_rank(Context &ctx, const std::string &spec) {
  auto g = group_from_spec(spec, ctx.cap);
  ctx.report.add("group", to_string(parse_group_spec(spec)));
  ctx.report.add("order", std::to_string(g->order()));
  ctx.report.add("normal_subgroups", std::to_string(normal_subgroups(g).size()));
  ctx.report.add("dgen", std::to_string(min_generators(g)));
  ctx.report.add("gas_rank", std::to_string(gaschutz_rank_over_quotients(g)));
  return kExitOk;
}

int cmd_kronecker(Context &ctx, std::size_t dim, std::size_t basis, const std::string &points_text) {
  auto points = parse_points(points_text);
  ctx.report.add("dim", std::to_string(dim));
  ctx.report.add("basis", std::to_string(basis));
  ctx.report.add("points", to_string(points));
  auto result = kronecker_decide(points, dim, basis);
  ctx.report.add("rank", std::to_string(result.rank));
  ctx.report.add("generates", yes_no(result.generates));
  if (!result.generates)
    ctx.report.add("witness_lambda", rational_vector(result.witness));
  if (auto order = rational_closure_order(points, dim))
    ctx.report.add("closure_order", order->get_str());
  else
    ctx.report.add("closure_order", "not-finite");
  return result.generates ? kExitOk : kExitNegative;
}

std::vector<std::size_t> parse_sizes(const std::string &text) {
  std::vector<std::size_t> out;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  long v;
  while (in >> v) {
    if (v < 1)
      throw ParseError("block sizes must be positive");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (!in.eof())
    throw ParseError("invalid size list '" + text + "'");
  return out;
}

int cmd_counterexample(Context &ctx, std::size_t n, const std::string &sizes_text, std::size_t basis) {
  auto sizes = parse_sizes(sizes_text);
  if (sizes.size() != n)
    throw PreconditionError("--sizes must list exactly n block sizes");
  auto h = build_counterexample(sizes, basis);
  const std::size_t dim = h.front().dimension();
  TorusProjection projection{dim + 1, {}};
  for (std::size_t i = 0; i < dim; ++i)
    projection.kept.push_back(i);

  ctx.report.add("n", std::to_string(n));
  ctx.report.add("tuple", to_string(h));
  ctx.report.add("tuple_generates", yes_no(kronecker_generates(h, dim, basis)));
  ctx.report.add("extra_coordinate", std::to_string(dim + 1));

  auto fresh = find_generating_lift_torus(projection, h, LiftPolicy::FreshSymbols, basis);
  bool fresh_ok = fresh.lift.has_value();
  ctx.report.add("fresh_lift", fresh_ok ? to_string(*fresh.lift) : "none");
  ctx.report.add("fresh_lift_generates", yes_no(fresh_ok));

  auto ambient = find_generating_lift_torus(projection, h, LiftPolicy::AmbientOnly, basis);
  ctx.report.add("ambient_lift", ambient.lift ? to_string(*ambient.lift) : "none");
  ctx.report.add("ambient_reason", ambient.reason);
  bool cert_ok = false;
  if (ambient.certificate) {
    const auto &c = *ambient.certificate;
    for (std::size_t j = 0; j < c.lambda.size(); ++j)
      ctx.report.add("lambda_" + std::to_string(j + 1), c.lambda[j].to_string());
    for (std::size_t l = 0; l < c.rational_values.size(); ++l)
      ctx.report.add("rational_value_" + std::to_string(l + 1), c.rational_values[l].to_string());
    ctx.report.add("samples", std::to_string(c.samples));
    ctx.report.add("samples_passed", std::to_string(c.samples_passed));
    cert_ok = c.valid();
  }
  bool confirmed = fresh_ok && !ambient.lift && cert_ok;
  ctx.report.add("outcome", confirmed ? "obstruction verified" : "obstruction not verified");
  return confirmed ? kExitOk : kExitNegative;
}

int cmd_tower(Context &ctx, const std::string &family, std::size_t n) {
  Tower tower = build_named_tower(family, ctx.cap);
  ctx.report.add("family", family);
  ctx.report.add("depth", std::to_string(tower.depth()));
  std::string orders, kernels;
  for (std::size_t m = 0; m < tower.depth(); ++m) {
    orders += (m ? ", " : "") + std::to_string(tower.levels[m]->order());
    kernels += (m ? ", " : "") + std::to_string(tower.kernels[m].order());
  }
  ctx.report.add("level_orders", "[" + orders + "]");
  ctx.report.add("kernel_orders", "[" + kernels + "]");
  ctx.report.add("n", std::to_string(n));
  const std::size_t d = min_generators(tower.deepest());
  if (n < d)
    throw PreconditionError("n = " + std::to_string(n) + " is below d(G_M) = " + std::to_string(d));
  auto tuples = generating_tuple_entries(tower.base().group, n);
  ctx.report.add("base_tuples", std::to_string(tuples.size()));
  bool all_ok = true;
  for (const auto &t : tuples) {
    auto lift = tower_lift(tower, t);
    bool ok = lift.generates_every_level() && lift.level_sets_positive();
    all_ok = all_ok && ok;
    if (tuples.size() <= 64) {
      ctx.report.add("lift " + format_tuple(*tower.base().group, t),
                     format_tuple(*tower.deepest(), lift.deepest) + " level_sets " +
                         format_counts(lift.level_counts) + (ok ? "" : " FAILED"));
    }
  }
  ctx.report.add("outcome", all_ok ? "every level generated, level sets nonempty" : "failed");
  return all_ok ? kExitOk : kExitNegative;
}

int cmd_snf(Context &ctx, const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw PreconditionError("cannot read matrix file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  IntMatrix m = parse_matrix(buffer.str());
  auto snf = smith_normal_form(m);
  ctx.report.add("matrix", matrix_inline(m));
  ctx.report.add("s", matrix_inline(snf.s));
  ctx.report.add("u", matrix_inline(snf.u));
  ctx.report.add("v", matrix_inline(snf.v));
  std::vector<mpq_class> factors(snf.invariant_factors.begin(), snf.invariant_factors.end());
  ctx.report.add("invariant_factors", rational_vector(factors));
  ctx.report.add("abelian_dgen", std::to_string(abelian_min_generators(m)));
  bool ok = snf.u * m * snf.v == snf.s;
  ctx.report.add("check_umv_equals_s", yes_no(ok));
  return ok ? kExitOk : kExitNegative;
}

int cmd_zlift(Context &ctx, long modulus, long generator) {
  ctx.report.add("modulus", std::to_string(modulus));
  ctx.report.add("generator", std::to_string(generator));
  auto result = cyclic_quotient_lift_exists(modulus, generator);
  if (result.exists) {
    ctx.report.add("outcome", "generating lift exists");
    ctx.report.add("witness", std::to_string(result.witness));
    ctx.report.add("multiplier", std::to_string(result.multiplier));
    return kExitOk;
  }
  ctx.report.add("outcome", "no generating lift");
  for (const auto &c : result.failed_congruences)
    ctx.report.add("failed", c);
  return kExitNegative;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exhaustive experiments on generating lifts"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--cap", ctx.cap, "Order cap for group closures")->capture_default_str();

  std::function<int()> action;
  std::string g, h, hom, tuple, method = "both", family, points, sizes, path;
  std::size_t n = 0, dim = 0, basis = 0;
  long modulus = 0, generator = 0;

  auto *dgen = app.add_subcommand("dgen", "Minimal number of generators");
  dgen->add_option("group", g)->required();
  dgen->callback([&] { action = [&] { return cmd_dgen(ctx, g); }; });

  auto *phi = app.add_subcommand("phi", "Generating lift counts over all generating n-tuples");
  phi->add_option("source", g)->required();
  phi->add_option("target", h)->required();
  phi->add_option("hom", hom)->required();
  phi->add_option("n", n)->required();
  phi->add_option("--method", method)->check(CLI::IsMember({"brute", "recursive", "both"}));
  phi->callback([&] { action = [&] { return cmd_phi(ctx, g, h, hom, n, method); }; });

  auto *lift = app.add_subcommand("lift", "Find a generating lift of a target tuple");
  lift->add_option("source", g)->required();
  lift->add_option("target", h)->required();
  lift->add_option("hom", hom)->required();
  lift->add_option("tuple", tuple)->required();
  lift->callback([&] { action = [&] { return cmd_lift(ctx, g, h, hom, tuple); }; });

  auto *verify = app.add_subcommand("verify-gaschutz", "Check every generating n-tuple lifts");
  verify->add_option("source", g)->required();
  verify->add_option("target", h)->required();
  verify->add_option("hom", hom)->required();
  verify->add_option("n", n)->required();
  verify->callback([&] { action = [&] { return cmd_verify(ctx, g, h, hom, n); }; });

  auto *gas = app.add_subcommand("gas-rank", "Lifting rank over the group's own quotients");
  gas->add_option("group", g)->required();
  gas->callback([&] { action = [&] { return cmd_gas_rank(ctx, g); }; });

  auto *kron = app.add_subcommand("kronecker", "Decide dense generation of a torus");
  kron->add_option("--dim", dim)->required();
  kron->add_option("--basis", basis)->required();
  kron->add_option("--points", points)->required();
  kron->callback([&] { action = [&] { return cmd_kronecker(ctx, dim, basis, points); }; });

  auto *counter = app.add_subcommand("counterexample", "Build the block tuple and verify its obstruction");
  counter->add_option("--n", n)->required();
  counter->add_option("--sizes", sizes)->required();
  counter->add_option("--basis", basis)->required();
  counter->callback([&] { action = [&] { return cmd_counterexample(ctx, n, sizes, basis); }; });

  auto *tower = app.add_subcommand("tower", "Lift through a finite tower");
  tower->add_option("--family", family)->required();
  tower->add_option("--n", n)->required();
  tower->callback([&] { action = [&] { return cmd_tower(ctx, family, n); }; });

  auto *snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
  snf->add_option("matrix", path)->required();
  snf->callback([&] { action = [&] { return cmd_snf(ctx, path); }; });

  auto *zlift = app.add_subcommand("zlift", "Generating lift of a generator of Z/m to Z");
  zlift->add_option("--modulus", modulus)->required();
  zlift->add_option("--generator", generator)->required();
  zlift->callback([&] { action = [&] { return cmd_zlift(ctx, modulus, generator); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitError;
  }

  std::string echo;
  for (const auto &a : args)
    echo += (echo.empty() ? "" : " ") + a;
  ctx.report.add("command", echo);
  int status;
  try {
    status = action();
  } catch (const Error &e) {
    ctx.report.add("error", e.what());
    status = kExitError;
  }
  ctx.report.add("exit", std::to_string(status));
  ctx.report.print(out);
  return status;
}

} // namespace gaschutz
