#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaschutz/symbolic.hpp"

namespace gaschutz {

struct KroneckerResult {
  bool generates = false;
  /// Rank over Q of the map lambda -> (irrational parts of lambda . point).
  std::size_t rank = 0;
  /// When not generating: nonzero lambda in Q^d with every combination
  /// lambda . point rational.
  std::vector<mpq_class> witness;
};

/// Decides whether the points densely generate (R/Z)^d: true iff no nonzero
/// rational lambda makes lambda . point rational for every point. Points
/// must have dimension d and use only the symbols b1..b_basis_size.
KroneckerResult kronecker_decide(const std::vector<TorusPoint> &points, std::size_t dimension,
                                 std::size_t basis_size);

inline bool kronecker_generates(const std::vector<TorusPoint> &points, std::size_t dimension,
                                std::size_t basis_size) {
  return kronecker_decide(points, dimension, basis_size).generates;
}

/// Order of the subgroup generated by purely rational points, through the
/// Smith normal form of the denominator-cleared lattice; nullopt as soon as
/// a coordinate has an irrational component.
std::optional<mpz_class> rational_closure_order(const std::vector<TorusPoint> &points,
                                                std::size_t dimension);

/// The coordinate-forgetting epimorphism (R/Z)^J -> (R/Z)^I, with I given
/// as strictly increasing positions inside J.
struct TorusProjection {
  std::size_t source_dimension = 0;
  std::vector<std::size_t> kept;

  std::size_t target_dimension() const { return kept.size(); }
  bool is_identity() const { return kept.size() == source_dimension; }
  /// Positions of J outside I, ascending.
  std::vector<std::size_t> new_coordinates() const;
  /// Throws PreconditionError on malformed positions.
  void validate() const;
};

/// Unknown coefficient of a lift: coefficient of b_symbol (symbol 0: the
/// rational part) in the new coordinate of generator `generator`.
struct LiftUnknown {
  std::size_t generator;
  std::size_t symbol;
  friend auto operator<=>(const LiftUnknown &, const LiftUnknown &) = default;
};

/// constant + sum of coefficient * unknown, exact.
struct LinearForm {
  mpq_class constant = 0;
  std::map<LiftUnknown, mpq_class> terms;

  mpq_class evaluate(const std::map<LiftUnknown, mpq_class> &values) const;
  std::string to_string() const;
};

/// Symbolic non-generation witness for every lift of a block-shaped tuple
/// whose new coordinate ranges over each generator's own basis span.
struct ObstructionCertificate {
  std::size_t extra_coordinate = 0;          // j0, a position in J
  std::vector<std::vector<std::size_t>> blocks; // I_l as positions in I
  std::vector<std::vector<std::size_t>> lift_symbols; // symbols spanning each generator
  std::vector<LinearForm> lambda;            // one form per coordinate of J
  std::vector<LinearForm> rational_values;   // lambda . g_l, one per generator
  std::size_t samples = 0;
  std::size_t samples_passed = 0;

  bool valid() const { return samples > 0 && samples == samples_passed; }
};

/// Builds the certificate by extracting lambda symbolically and checks it on
/// `samples` random rational instantiations of the unknowns. Throws
/// PreconditionError if the tuple is not block-shaped or uses symbols
/// outside b1..b_basis_size.
ObstructionCertificate verify_obstruction(const std::vector<TorusPoint> &tuple,
                                          const TorusProjection &projection,
                                          std::size_t basis_size, std::size_t samples = 100,
                                          std::uint64_t seed = 0x5eed);

/// Generator l is supported on block l only, block coordinates are distinct
/// symbols: h_l = (0, .., b_i, .., 0) for i in block l. Throws
/// PreconditionError when sum(sizes) exceeds the basis.
std::vector<TorusPoint> build_counterexample(const std::vector<std::size_t> &block_sizes,
                                             std::size_t basis_size);

enum class LiftPolicy { AmbientOnly, FreshSymbols };

struct TorusLiftResult {
  std::optional<std::vector<TorusPoint>> lift;
  std::size_t basis_size = 0; // grows under FreshSymbols
  std::optional<ObstructionCertificate> certificate;
  std::string reason;
};

/// FreshSymbols: new coordinates get new independent symbols, which always
/// generates. AmbientOnly: each generator's new coordinates are confined to
/// the span of 1 and the symbols that generator already uses; returns a
/// generating lift when the rank count allows one, otherwise none with the
/// obstruction (and a lambda certificate for block-shaped tuples).
TorusLiftResult find_generating_lift_torus(const TorusProjection &projection,
                                           const std::vector<TorusPoint> &tuple, LiftPolicy policy,
                                           std::size_t basis_size);

} // namespace gaschutz
