#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exactlmi/rational.hpp"

namespace exactlmi {

/// Dense univariate polynomial over the rationals in the variable t.
/// Coefficients are stored in ascending degree; the leading one is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  explicit UniPoly(const std::vector<Integer>& coeffs);
  static UniPoly constant(const Rational& c);
  /// t
  static UniPoly identity();
  /// c * t^k
  static UniPoly monomial(const Rational& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(t + s)
  UniPoly shift(const Rational& s) const;
  /// p(c * t)
  UniPoly scale_variable(const Rational& c) const;

  /// Integer coefficients with content 1 and positive leading coefficient; zero stays zero.
  UniPoly primitive() const;
  /// Coefficients of primitive(); requires nothing of *this.
  std::vector<Integer> integer_coeffs() const;
  bool has_integer_coeffs() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Exact quotient; the remainder is discarded.
UniPoly operator/(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p') rescaled to a primitive integer polynomial. Throws on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);

/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

/// a * b mod m
UniPoly mul_mod(const UniPoly& a, const UniPoly& b, const UniPoly& m);

}  // namespace exactlmi
