#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exactlmi/multipoly.hpp"
#include "exactlmi/unipoly.hpp"

namespace exactlmi {

enum class OrderKind { Grevlex, Lex, BlockGrevlex };

/// Monomial order over a roster; the first roster variable is the largest.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  /// BlockGrevlex only: variables [0, block) are eliminated before the rest.
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block_grevlex(std::size_t block) { return {OrderKind::BlockGrevlex, block}; }

  /// Three-way comparison: positive when a > b.
  int compare(const Exponents& a, const Exponents& b) const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Ceilings for a Groebner computation; zero means unlimited. Exceeding one throws TimeoutError.
struct ResourceLimits {
  std::size_t max_basis_size = 0;
  std::size_t max_coeff_bits = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static ResourceLimits with_seconds(double seconds);
  void check_deadline() const;
};

/// Reduced Groebner basis: monic generators sorted by increasing leading monomial.
struct GroebnerBasis {
  std::vector<MultiPoly> generators;
  MonomialOrder order;
  Roster roster;

  bool is_unit() const;
  std::vector<Exponents> leading_monomials() const;
};

/// Standard monomials of a zero-dimensional ideal, increasing in the basis order.
struct QuotientBasis {
  std::vector<Exponents> monomials;
  std::size_t dimension() const { return monomials.size(); }
};

Exponents leading_monomial(const MultiPoly& p, const MonomialOrder& order);

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and the normal selection strategy.
/// All input polynomials must share one roster (at most 32 variables).
GroebnerBasis buchberger(std::span<const MultiPoly> polys, MonomialOrder order = MonomialOrder::grevlex(),
                         const ResourceLimits& limits = {});

/// -1 for the unit ideal, otherwise the Krull dimension read off the leading-term ideal.
int ideal_dimension(const GroebnerBasis& gb);

/// Throws std::domain_error unless the ideal is zero-dimensional.
QuotientBasis quotient_basis(const GroebnerBasis& gb);

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);
bool reduces_to_zero(const MultiPoly& p, const GroebnerBasis& gb);

/// Lex basis in shape position for the variable t = sum lambda_i x_i (t smallest):
/// eliminant(t) = 0 and roster[i] = coordinates[i](t). The roster may be a subset of the
/// variables of the ideal.
struct ShapeBasis {
  UniPoly eliminant;
  std::vector<UniPoly> coordinates;
  std::vector<Rational> lambda;
  Roster roster;
  /// Dimension of the quotient ring of the (possibly non-radical) input ideal.
  std::size_t quotient_dimension = 0;

  GroebnerBasis as_lex_basis(const std::string& tvar = "t") const;
};

/// Change of ordering for a zero-dimensional ideal into shape position via multiplication
/// matrices. With `vars`, only those variables must be functions of t, so lambda needs to
/// separate the projection of the points onto them. A non-radical ideal is replaced by its
/// radical before giving up; throws NotShapeError when lambda does not separate.
ShapeBasis fglm_to_lex(const GroebnerBasis& gb, std::span<const Rational> lambda, const ResourceLimits& limits = {},
                       std::optional<std::vector<std::size_t>> vars = std::nullopt);

/// Minimal polynomial of the multiplication by sum lambda_i x_i in the quotient ring.
UniPoly minimal_polynomial(const GroebnerBasis& gb, std::span<const Rational> lambda);

}  // namespace exactlmi
