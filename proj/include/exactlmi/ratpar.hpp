#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exactlmi/lagrange.hpp"
#include "exactlmi/pencil.hpp"

namespace exactlmi {

/// Finite set {x : x_i = q_i(t)/q0(t), qn1(t) = 0}, with t = lambda.x when lambda is known.
/// Normal form: qn1 primitive and squarefree, q0 invertible modulo qn1, every q reduced modulo
/// qn1, and (q0, q_1, ..., q_n) integer with content 1. The empty set has qn1 = 1. Parametrizations
/// built from coordinate functions use q0 = qn1'; set operations keep whatever q0 they inherit.
struct RationalParametrization {
  std::size_t n = 0;
  UniPoly q0;
  std::vector<UniPoly> qi;
  UniPoly qn1 = UniPoly::constant(1);
  std::optional<std::vector<Rational>> lambda;

  static RationalParametrization empty(std::size_t n);
  /// Builds the normal form of {x = h(t) : q(t) = 0}; q is replaced by its squarefree part.
  static RationalParametrization from_coordinates(const UniPoly& q, std::vector<UniPoly> h,
                                                  std::optional<std::vector<Rational>> lambda = std::nullopt);

  bool is_empty() const { return qn1.degree() <= 0; }
  /// Number of points (degree of qn1).
  int degree() const { return is_empty() ? 0 : qn1.degree(); }
  /// Reduces every q modulo qn1 (squarefree, not necessarily primitive) and scales to integers.
  static RationalParametrization from_fractions(const UniPoly& qn1, const UniPoly& q0, std::vector<UniPoly> qi,
                                                std::optional<std::vector<Rational>> lambda = std::nullopt);

  /// h_i = q_i / q0 mod qn1.
  std::vector<UniPoly> coordinate_functions() const;

  /// Throws InternalError naming the first violated invariant.
  void check_invariants() const;

  friend bool operator==(const RationalParametrization&, const RationalParametrization&) = default;
};

std::string ratpar_to_json(const RationalParametrization& rp);
RationalParametrization ratpar_from_json(const std::string& text);

struct RatParResult {
  RationalParametrization rp;
  /// Dimension of the quotient ring of the critical-point ideal (0 when empty).
  std::size_t critical_points = 0;
};

/// Parametrizes the x-coordinates of the solutions of a Lagrange system. lambda is tried first,
/// then redrawn from the seed with integer entries in [-bound, bound].
/// Throws GenericityError (Dimension or Shape) and TimeoutError.
RatParResult ratpar(const LagrangeSystem& lag, const std::vector<Rational>& lambda, Seed seed, long bound,
                    const ResourceLimits& limits = {});

/// Keeps the points where rank A(Mx) equals r (the others have smaller rank on the input).
RationalParametrization project(const RationalParametrization& rp, const SymmetricPencil& p, const QMatrix& M,
                                std::size_t r);

/// {x : Mx in Z}. Throws std::domain_error for singular M.
RationalParametrization image(const RationalParametrization& rp, const QMatrix& M);

/// Throws CollisionError when one label t maps to two different points.
RationalParametrization set_union(const RationalParametrization& a, const RationalParametrization& b);

/// {(t0, x) : x in Z}.
RationalParametrization lift(const RationalParametrization& rp, const Rational& t0);

/// The points whose labels are roots of factor (a divisor of qn1).
RationalParametrization restrict_to(const RationalParametrization& rp, const UniPoly& factor);

/// Same qn1 up to a constant and the same point at every label.
bool same_set(const RationalParametrization& a, const RationalParametrization& b);

/// Relabels t -> t + s (the roots move by -s); the separating form is dropped.
RationalParametrization shift_labels(const RationalParametrization& rp, const Rational& s);

/// Numerator of F(q1/q0, ..., qn/q0) * q0^d modulo qn1, where d bounds the total degree of F.
UniPoly eval_homogenized(const MultiPoly& f, const RationalParametrization& rp, int d);

/// Every polynomial vanishes at every point of the set.
bool vanishes_on(std::span<const MultiPoly> polys, const RationalParametrization& rp);

}  // namespace exactlmi
