#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "exactlmi/pencil.hpp"
#include "exactlmi/ratpar.hpp"
#include "exactlmi/real_roots.hpp"

namespace exactlmi {

/// Solution of A(x) = 0 (free variables set to zero), if any.
std::optional<std::vector<Rational>> solve_linear(const SymmetricPencil& p);

/// det(A(x) + s I) = s^m + f[0] s^(m-1) + ... + f[m-1]; f[k-1] is the k-th elementary
/// symmetric function of the eigenvalues, so A(x) is PSD iff every f[k] >= 0.
struct CharPolyCoeffs {
  std::vector<MultiPoly> f;
};

CharPolyCoeffs char_poly_coeffs(const SymmetricPencil& p);

struct RootSigns {
  RealAlgebraicNumber root;
  /// sign of f_1, ..., f_m at the point
  std::vector<int> signs;
  bool accepted = false;
};

/// Signs of the characteristic coefficients at every real point of the set, ascending in t.
std::vector<RootSigns> check_lmi_all(const SymmetricPencil& p, const RationalParametrization& rp);

/// First real point (ascending t) where A is PSD.
std::optional<RootSigns> check_lmi(const SymmetricPencil& p, const RationalParametrization& rp);

/// Exact rank of A at the point of rp labelled by the real root; cross-checked with minors.
std::size_t rank_at(const SymmetricPencil& p, const RationalParametrization& rp, const RealAlgebraicNumber& root);

/// Decimal approximations of the coordinates of a point, refined until every coordinate is
/// known to within 10^-digits.
std::vector<Rational> approximate_point(const RationalParametrization& rp, const RealAlgebraicNumber& root, int digits);

}  // namespace exactlmi
