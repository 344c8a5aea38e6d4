#pragma once

#include <vector>

#include "exactlmi/unipoly.hpp"

namespace exactlmi {

/// A real root of a squarefree integer polynomial, isolated by [lo, hi]. Either lo = hi is the
/// (rational) root itself, or lo < hi, neither endpoint is a root and poly changes sign on them.
struct RealAlgebraicNumber {
  UniPoly poly;
  Rational lo;
  Rational hi;

  bool is_rational() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Upper bound on the number of roots in the open interval (a, b) from Descartes' rule;
/// exact when it returns 0 or 1.
int descartes_bound(const UniPoly& p, const Rational& a, const Rational& b);

/// Isolating intervals for the distinct real roots, ascending. Throws on the zero polynomial.
std::vector<RealAlgebraicNumber> isolate_roots(const UniPoly& p);

/// Same root, interval width at most `width`.
RealAlgebraicNumber refine(const RealAlgebraicNumber& alpha, const Rational& width);

/// Exact sign of p at alpha.
int sign_at(const UniPoly& p, const RealAlgebraicNumber& alpha);

/// Exact sign of num(alpha) / den(alpha); den must not vanish at alpha.
int sign_of_quotient(const UniPoly& num, const UniPoly& den, const RealAlgebraicNumber& alpha);

}  // namespace exactlmi
