#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exactlmi/rational.hpp"

namespace exactlmi {

/// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  QMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend std::vector<Rational> operator*(const QMatrix& a, const std::vector<Rational>& v);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  QMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Exact reduced row-echelon form with the pivot columns.
RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
Rational determinant(const QMatrix& m);
/// Throws std::domain_error on singular input.
QMatrix inverse(const QMatrix& m);

/// Solves A x = b with free variables set to zero. On inconsistency returns an empty
/// vector and sets *consistent to false.
std::vector<Rational> solve(const QMatrix& a, const std::vector<Rational>& b, bool* consistent);

}  // namespace exactlmi
