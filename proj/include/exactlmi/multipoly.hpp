#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "exactlmi/rational.hpp"
#include "exactlmi/unipoly.hpp"

namespace exactlmi {

using Exponents = std::vector<std::uint32_t>;
using Roster = std::vector<std::string>;

/// Sparse multivariate polynomial over the rationals: exponent vector -> nonzero coefficient.
/// Every exponent vector has one entry per roster variable.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(Roster roster) : roster_(std::move(roster)) {}

  static MultiPoly constant(const Roster& roster, const Rational& c);
  static MultiPoly variable(const Roster& roster, std::size_t index);
  static MultiPoly variable(const Roster& roster, const std::string& name);

  const Roster& roster() const { return roster_; }
  std::size_t nvars() const { return roster_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Adds c * x^e; drops the term if the sum cancels.
  void add_term(const Exponents& e, const Rational& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Maximal total degree restricted to the given variable indices.
  int block_degree(std::span<const std::size_t> vars) const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  Rational eval(std::span<const Rational> point) const;
  MultiPoly derivative(std::size_t var) const;

  /// Re-expresses the polynomial over another roster (matched by name).
  /// Throws std::invalid_argument if a variable that occurs is missing from the target.
  MultiPoly with_roster(const Roster& target) const;

  /// Substitutes images[i] for variable i; all images share one roster.
  MultiPoly compose(std::span<const MultiPoly> images, const Roster& target) const;

  MultiPoly operator-() const;
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.roster_ == b.roster_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Roster roster_;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

/// Exact sum, difference or product; rosters are united (left roster order first) when they differ.
MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op);

/// Roster union: the variables of a followed by new variables of b.
Roster roster_union(const Roster& a, const Roster& b);

/// Evaluates p at univariate images h[i] (one per roster variable) modulo m.
UniPoly eval_mod(const MultiPoly& p, std::span<const UniPoly> h, const UniPoly& m);

/// Square matrix of polynomials, row-major.
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MultiPoly> entries;

  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

/// All k x k minors, one per (row subset, column subset) pair in lexicographic order.
/// With `symmetric`, only pairs with row subset <= column subset are produced.
std::vector<MultiPoly> minors(const PolyMatrix& a, std::size_t k, bool symmetric = false);

/// Determinant of a square polynomial matrix.
MultiPoly determinant(const PolyMatrix& a);

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace exactlmi
