#include "gaschutz/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "gaschutz/error.hpp"

namespace gaschutz {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

long parse_long(std::string_view s, const char *what) {
  s = trim(s);
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  return value;
}

bool is_prime(long p) {
  if (p < 2)
    return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

// Parses "(1 2 3)(4 5)" into 0-based cycles; returns the largest point + 1.
std::vector<std::vector<Point>> parse_cycles(std::string_view text, std::size_t &max_point) {
  std::vector<std::vector<Point>> cycles;
  text = trim(text);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation: '" + std::string(text) + "'");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos)
      throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    std::string body(text.substr(i + 1, close - i - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<Point> cycle;
    std::string token;
    while (in >> token) {
      long v = parse_long(token, "cycle point");
      if (v < 1)
        throw ParseError("cycle points are 1-based");
      cycle.push_back(static_cast<Point>(v - 1));
      max_point = std::max(max_point, static_cast<std::size_t>(v));
    }
    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return cycles;
}

Permutation cycle_on(std::size_t degree, Point first, std::size_t length) {
  std::vector<Point> cycle;
  for (std::size_t i = 0; i < length; ++i)
    cycle.push_back(static_cast<Point>(first + i));
  return Permutation::from_cycles(degree, {cycle});
}

} // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::size_t max_point = 0;
  auto cycles = parse_cycles(text, max_point);
  if (degree == 0)
    degree = max_point;
  if (max_point > degree)
    throw ParseError("cycle point exceeds degree " + std::to_string(degree));
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const PreconditionError &e) {
    throw ParseError(e.what());
  }
}

std::string format_permutation(const Permutation &p) {
  auto cycles = p.cycles();
  if (cycles.empty())
    return "()";
  std::string out;
  for (const auto &c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

GroupSpec parse_group_spec(std::string_view text) {
  text = trim(text);
  GroupSpec spec;
  if (text.empty())
    throw ParseError("empty group spec");

  // Explicit generators, with an optional "deg:" prefix.
  std::size_t paren = text.find('(');
  if (paren != std::string_view::npos) {
    std::string_view body = text;
    std::size_t declared = 0;
    std::size_t colon = text.find(':');
    if (colon != std::string_view::npos && colon < paren) {
      long d = parse_long(text.substr(0, colon), "degree");
      if (d < 1)
        throw ParseError("degree must be positive");
      declared = static_cast<std::size_t>(d);
      body = text.substr(colon + 1);
    }
    std::vector<std::vector<std::vector<Point>>> all;
    std::size_t max_point = 0;
    for (auto part : split(body, ','))
      all.push_back(parse_cycles(part, max_point));
    std::size_t degree = declared ? declared : std::max<std::size_t>(max_point, 1);
    if (max_point > degree)
      throw ParseError("cycle point exceeds declared degree");
    spec.degree = degree;
    for (auto &cycles : all) {
      try {
        spec.generators.push_back(Permutation::from_cycles(degree, cycles));
      } catch (const PreconditionError &e) {
        throw ParseError(e.what());
      }
    }
    return spec;
  }

  auto parts = split(text, ':');
  spec.family = std::string(trim(parts[0]));
  for (std::size_t i = 1; i < parts.size(); ++i)
    spec.params.push_back(parse_long(parts[i], "family parameter"));

  auto expect_params = [&](std::size_t n) {
    if (spec.params.size() != n)
      throw ParseError("family '" + spec.family + "' takes " + std::to_string(n) + " parameter(s)");
  };
  const auto &f = spec.family;
  auto &gens = spec.generators;
  if (f == "cyclic") {
    expect_params(1);
    long m = spec.params[0];
    if (m < 1)
      throw ParseError("cyclic:m needs m >= 1");
    spec.degree = static_cast<std::size_t>(m);
    gens.push_back(cycle_on(spec.degree, 0, spec.degree));
  } else if (f == "dihedral") {
    expect_params(1);
    long m = spec.params[0];
    if (m < 2 || m % 2 != 0)
      throw ParseError("dihedral:m needs an even order m >= 2");
    long k = m / 2;
    if (k == 1) {
      spec.degree = 2;
      gens.push_back(Permutation::identity(2));
      gens.push_back(parse_permutation("(1 2)", 2));
    } else if (k == 2) {
      spec.degree = 4;
      gens.push_back(parse_permutation("(1 2)(3 4)", 4));
      gens.push_back(parse_permutation("(1 3)(2 4)", 4));
    } else {
      spec.degree = static_cast<std::size_t>(k);
      gens.push_back(cycle_on(spec.degree, 0, spec.degree));
      // Reflection fixing point 1: i -> 2 - i (mod k).
      std::vector<Point> images(spec.degree);
      for (long i = 0; i < k; ++i)
        images[static_cast<std::size_t>(i)] = static_cast<Point>((k - i) % k);
      gens.push_back(Permutation(std::move(images)));
    }
  } else if (f == "sym" || f == "alt") {
    expect_params(1);
    long k = spec.params[0];
    if (k < 1)
      throw ParseError(f + ":k needs k >= 1");
    spec.degree = static_cast<std::size_t>(k);
    if (f == "sym" && k >= 2) {
      gens.push_back(cycle_on(spec.degree, 0, spec.degree));
      gens.push_back(cycle_on(spec.degree, 0, 2));
    } else if (f == "alt") {
      for (long i = 2; i < k; ++i)
        gens.push_back(Permutation::from_cycles(spec.degree, {{0, 1, static_cast<Point>(i)}}));
    }
  } else if (f == "klein") {
    expect_params(0);
    spec.degree = 4;
    gens.push_back(parse_permutation("(1 2)(3 4)", 4));
    gens.push_back(parse_permutation("(1 3)(2 4)", 4));
  } else if (f == "quaternion8") {
    expect_params(0);
    spec.degree = 8;
    gens.push_back(parse_permutation("(1 2 3 4)(5 6 7 8)", 8));
    gens.push_back(parse_permutation("(1 5 3 7)(2 8 4 6)", 8));
  } else if (f == "elem-abelian") {
    expect_params(2);
    long p = spec.params[0], k = spec.params[1];
    if (!is_prime(p) || k < 0)
      throw ParseError("elem-abelian:p:k needs a prime p and k >= 0");
    spec.degree = static_cast<std::size_t>(std::max(p * k, 1L));
    for (long i = 0; i < k; ++i)
      gens.push_back(cycle_on(spec.degree, static_cast<Point>(i * p), static_cast<std::size_t>(p)));
  } else {
    throw ParseError("unknown group family '" + f + "'");
  }
  return spec;
}

std::string to_string(const GroupSpec &spec) {
  if (!spec.family.empty()) {
    std::string out = spec.family;
    for (long p : spec.params)
      out += ":" + std::to_string(p);
    return out;
  }
  std::string out = std::to_string(spec.degree) + ":";
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    if (i)
      out += ",";
    out += format_permutation(spec.generators[i]);
  }
  if (spec.generators.empty())
    out += "()";
  return out;
}

GroupPtr build_group(const GroupSpec &spec, std::size_t order_cap) {
  return FiniteGroup::from_generators(spec.generators, spec.degree, order_cap);
}

Word parse_word(std::string_view text) {
  text = trim(text);
  Word word;
  if (text == "e" || text == "1" || text.empty())
    return word;
  for (auto factor : split(text, '*')) {
    factor = trim(factor);
    if (factor.size() < 2 || factor[0] != 'g')
      throw ParseError("invalid word factor '" + std::string(factor) + "'");
    long exponent = 1;
    std::size_t caret = factor.find('^');
    std::string_view index_part = factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
    if (caret != std::string_view::npos)
      exponent = parse_long(factor.substr(caret + 1), "exponent");
    long index = parse_long(index_part, "generator index");
    if (index < 1)
      throw ParseError("generator indices are 1-based");
    word.push_back({static_cast<std::size_t>(index - 1), exponent});
  }
  return word;
}

std::string format_word(const Word &word) {
  if (word.empty())
    return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i)
      out += "*";
    out += "g" + std::to_string(word[i].generator + 1);
    if (word[i].exponent != 1)
      out += "^" + std::to_string(word[i].exponent);
  }
  return out;
}

Index evaluate_word(const FiniteGroup &group, const Word &word) {
  Index x = FiniteGroup::identity();
  for (const auto &letter : word) {
    if (letter.generator >= group.generators().size())
      throw PreconditionError("word refers to generator g" + std::to_string(letter.generator + 1) +
                              " but the group has " + std::to_string(group.generators().size()));
    x = group.mul(x, group.pow(group.generators()[letter.generator], letter.exponent));
  }
  return x;
}

std::vector<Index> parse_tuple(const FiniteGroup &group, std::string_view text) {
  std::vector<Index> out;
  text = trim(text);
  if (text.empty() || text == "()")
    return out;
  for (auto part : split(text, ','))
    out.push_back(evaluate_word(group, parse_word(part)));
  return out;
}

std::vector<std::pair<std::size_t, Word>> parse_hom_spec(std::string_view text) {
  std::vector<std::pair<std::size_t, Word>> out;
  for (auto raw : split(text, '\n')) {
    // '#' starts a comment running to the end of the line.
    raw = raw.substr(0, raw.find('#'));
    for (auto line : split(raw, ';')) {
      line = trim(line);
      if (line.empty())
        continue;
      std::size_t arrow = line.find("->");
      if (arrow == std::string_view::npos)
        throw ParseError("hom spec line needs '->': '" + std::string(line) + "'");
      long i = parse_long(line.substr(0, arrow), "source generator index");
      if (i < 1)
        throw ParseError("source generator indices are 1-based");
      out.emplace_back(static_cast<std::size_t>(i), parse_word(line.substr(arrow + 2)));
    }
  }
  return out;
}

std::string format_hom_spec(const std::vector<std::pair<std::size_t, Word>> &spec) {
  std::string out;
  for (const auto &[i, w] : spec)
    out += std::to_string(i) + " -> " + format_word(w) + "\n";
  return out;
}

GroupHom build_hom(const GroupPtr &source, const GroupPtr &target, std::string_view text) {
  auto spec = parse_hom_spec(text);
  const std::size_t ngens = source->generators().size();
  std::vector<Index> images(ngens);
  std::vector<bool> assigned(ngens, false);
  for (const auto &[i, w] : spec) {
    if (i > ngens)
      throw PreconditionError("source has no generator " + std::to_string(i));
    if (assigned[i - 1])
      throw PreconditionError("generator " + std::to_string(i) + " assigned twice");
    assigned[i - 1] = true;
    images[i - 1] = evaluate_word(*target, w);
  }
  for (std::size_t i = 0; i < ngens; ++i)
    if (!assigned[i])
      throw PreconditionError("no image given for source generator " + std::to_string(i + 1));
  return hom_from_generator_images(source, target, images);
}

} // namespace gaschutz
