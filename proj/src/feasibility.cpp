#include "exactlmi/feasibility.hpp"

#include <stdexcept>

#include "exactlmi/errors.hpp"

namespace exactlmi {

std::optional<std::vector<Rational>> solve_linear(const SymmetricPencil& p) {
  const std::size_t m = p.m(), n = p.n();
  const std::size_t eqs = m * (m + 1) / 2;
  QMatrix a(eqs, n);
  std::vector<Rational> b(eqs);
  std::size_t row = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j, ++row) {
      for (std::size_t k = 0; k < n; ++k) a(row, k) = p[k + 1](i, j);
      b[row] = -p[0](i, j);
    }
  }
  if (n == 0) {
    if (p[0].is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  bool consistent = true;
  auto x = solve(a, b, &consistent);
  if (!consistent) return std::nullopt;
  return x;
}

CharPolyCoeffs char_poly_coeffs(const SymmetricPencil& p) {
  const std::size_t m = p.m();
  const Roster roster = x_roster(p.n());
  const PolyMatrix a = p.symbolic(roster);
  auto mul = [&](const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix z{m, m, std::vector<MultiPoly>(m * m, MultiPoly(roster))};
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) z(i, j) = z(i, j) + x(i, k) * y(k, j);
      }
    return z;
  };
  // Newton's identities on power sums tr(A^k)
  std::vector<MultiPoly> power_sums;
  PolyMatrix pw = a;
  for (std::size_t k = 1; k <= m; ++k) {
    if (k > 1) pw = mul(pw, a);
    MultiPoly tr(roster);
    for (std::size_t i = 0; i < m; ++i) tr = tr + pw(i, i);
    power_sums.push_back(std::move(tr));
  }
  std::vector<MultiPoly> e{MultiPoly::constant(roster, 1)};
  for (std::size_t k = 1; k <= m; ++k) {
    MultiPoly acc(roster);
    for (std::size_t i = 1; i <= k; ++i) {
      MultiPoly term = e[k - i] * power_sums[i - 1];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    e.push_back(acc * Rational(1, static_cast<long>(k)));
  }
  return {std::vector<MultiPoly>(e.begin() + 1, e.end())};
}

namespace {

struct Evaluator {
  const RationalParametrization& rp;
  std::vector<UniPoly> g;  // numerators f_k(x(t)) q0(t)^k

  Evaluator(const SymmetricPencil& p, const RationalParametrization& rp_) : rp(rp_) {
    if (p.n() != rp.n) throw std::invalid_argument("parametrization dimension differs from the pencil");
    const auto cp = char_poly_coeffs(p);
    for (std::size_t k = 0; k < cp.f.size(); ++k) g.push_back(eval_homogenized(cp.f[k], rp, static_cast<int>(k + 1)));
  }

  std::vector<int> signs(const RealAlgebraicNumber& root) const {
    const int s0 = sign_at(rp.q0, root);
    if (s0 == 0) throw InternalError("q0 vanishes at a root of qn1");
    std::vector<int> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
      int s = sign_at(g[k], root);
      if ((k + 1) % 2 == 1) s *= s0;
      out.push_back(s);
    }
    return out;
  }
};

}  // namespace

std::vector<RootSigns> check_lmi_all(const SymmetricPencil& p, const RationalParametrization& rp) {
  std::vector<RootSigns> out;
  if (rp.is_empty()) return out;
  const Evaluator ev(p, rp);
  for (auto& root : isolate_roots(rp.qn1)) {
    RootSigns rs{root, ev.signs(root), false};
    rs.accepted = std::all_of(rs.signs.begin(), rs.signs.end(), [](int s) { return s >= 0; });
    out.push_back(std::move(rs));
  }
  return out;
}

std::optional<RootSigns> check_lmi(const SymmetricPencil& p, const RationalParametrization& rp) {
  if (rp.is_empty()) return std::nullopt;
  const Evaluator ev(p, rp);
  for (auto& root : isolate_roots(rp.qn1)) {
    RootSigns rs{root, ev.signs(root), false};
    rs.accepted = std::all_of(rs.signs.begin(), rs.signs.end(), [](int s) { return s >= 0; });
    if (rs.accepted) return rs;
  }
  return std::nullopt;
}

std::size_t rank_at(const SymmetricPencil& p, const RationalParametrization& rp, const RealAlgebraicNumber& root) {
  const Evaluator ev(p, rp);
  const auto s = ev.signs(root);
  std::size_t rank = 0;
  for (std::size_t k = s.size(); k > 0; --k) {
    if (s[k - 1] != 0) {
      rank = k;
      break;
    }
  }
  // minors: some rank x rank minor is nonzero and every larger one vanishes
  const PolyMatrix a = p.symbolic(x_roster(p.n()));
  auto any_nonzero = [&](std::size_t k) {
    for (const auto& mnr : minors(a, k, true)) {
      if (sign_at(eval_homogenized(mnr, rp, static_cast<int>(k)), root) != 0) return true;
    }
    return false;
  };
  const bool ok = (rank == 0 || any_nonzero(rank)) && (rank == p.m() || !any_nonzero(rank + 1));
  if (!ok) throw InternalError("rank from characteristic coefficients disagrees with minors");
  return rank;
}

std::vector<Rational> approximate_point(const RationalParametrization& rp, const RealAlgebraicNumber& root, int digits) {
  Rational tol(1);
  for (int i = 0; i < digits; ++i) tol /= 10;
  // tighten the interval until every coordinate q_i/q0 is pinned down to tol
  RealAlgebraicNumber r = root;
  // q0 is coprime to qn1, so refinement eventually clears its zeros from the interval
  while (!r.is_rational() && (rp.q0(r.lo) == 0 || rp.q0(r.hi) == 0 || descartes_bound(rp.q0, r.lo, r.hi) > 0))
    r = refine(r, r.width() / 16);
  while (true) {
    std::vector<Rational> lo, hi;
    bool ok = true;
    for (const auto& q : rp.qi) {
      const Rational a = q(r.lo) / rp.q0(r.lo);
      const Rational b = q(r.hi) / rp.q0(r.hi);
      const Rational mid = q(r.midpoint()) / rp.q0(r.midpoint());
      if (abs(a - b) > tol / 4 || abs(a - mid) > tol / 4) ok = false;
      lo.push_back(mid);
    }
    if (ok || r.is_rational()) return lo;
    r = refine(r, r.width() / 1024);
  }
}

}  // namespace exactlmi
