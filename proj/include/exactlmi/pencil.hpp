#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exactlmi/multipoly.hpp"
#include "exactlmi/qmatrix.hpp"

namespace exactlmi {

using Seed = std::uint64_t;

/// A(x) = A0 + x1 A1 + ... + xn An with m x m symmetric rational matrices.
class SymmetricPencil {
 public:
  SymmetricPencil() = default;
  /// Throws std::invalid_argument on size mismatch or an asymmetric matrix.
  explicit SymmetricPencil(std::vector<QMatrix> mats);

  std::size_t m() const { return m_; }
  std::size_t n() const { return mats_.size() - 1; }
  const std::vector<QMatrix>& mats() const { return mats_; }
  const QMatrix& operator[](std::size_t i) const { return mats_[i]; }

  QMatrix eval(const std::vector<Rational>& x) const;

  /// Entries of A(x) as polynomials over the given roster (first n variables are x).
  PolyMatrix symbolic(const Roster& roster) const;

  friend bool operator==(const SymmetricPencil&, const SymmetricPencil&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<QMatrix> mats_;
};

/// B(x) = A(Mx): B0 = A0, Bj = sum_i M(i,j) Ai. Throws std::domain_error for singular M.
SymmetricPencil change_of_variables(const SymmetricPencil& p, const QMatrix& M);

/// (A0 + t A1, A2, ..., An). Throws std::invalid_argument when n = 0.
SymmetricPencil fix_first_variable(const SymmetricPencil& p, const Rational& t);

/// Entries p/q with |p| <= bound and 1 <= q <= bound, deterministic in the seed.
SymmetricPencil random_pencil(std::size_t m, std::size_t n, Seed seed, long bound);

/// Integer matrix with entries in [-bound, bound], redrawn until invertible.
QMatrix random_invertible(std::size_t n, Seed seed, long bound);

/// Sub-seed for a tagged random draw; keeps every run reproducible.
Seed derive_seed(Seed root, std::uint64_t level, std::uint64_t purpose, std::uint64_t attempt = 0);

/// Uniform integer in [lo, hi].
long draw_integer(std::mt19937_64& rng, long lo, long hi);

SymmetricPencil parse_pencil_json(const std::string& text);
std::string pencil_to_json(const SymmetricPencil& p);

/// x1..xn
Roster x_roster(std::size_t n);

}  // namespace exactlmi
