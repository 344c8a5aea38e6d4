#include "exactlmi/real_roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactlmi {

int descartes_bound(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::domain_error("descartes_bound: zero polynomial");
  // roots of p in (a, b) <-> roots of P(y) = p(a + (b - a) y) in (0, 1) <-> positive roots of
  // (1 + x)^d P(1 / (1 + x))
  const UniPoly scaled = p.shift(a).scale_variable(b - a);
  std::vector<Rational> rev(scaled.coeffs().rbegin(), scaled.coeffs().rend());
  const UniPoly q = UniPoly(std::move(rev)).shift(1);
  int changes = 0, last = 0;
  for (const auto& c : q.coeffs()) {
    const int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

// 2^k with 2^k > 1 + max |a_i / a_d|
Rational cauchy_bound(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  Rational b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

void isolate(const UniPoly& p, const Rational& a, const Rational& b, std::vector<RealAlgebraicNumber>& out) {
  const int v = descartes_bound(p, a, b);
  if (v == 0) return;
  if (v == 1) {
    out.push_back({p, a, b});
    return;
  }
  const Rational mid = (a + b) / 2;
  if (p(mid) != 0) {
    isolate(p, a, mid, out);
    isolate(p, mid, b, out);
    return;
  }
  // exact rational root: cut out a gap around it so no endpoint is a root
  Rational eps = (b - a) / 4;
  while (p(mid - eps) == 0 || p(mid + eps) == 0 || descartes_bound(p, mid - eps, mid + eps) != 1) eps /= 2;
  isolate(p, a, mid - eps, out);
  out.push_back({p, mid, mid});
  isolate(p, mid + eps, b, out);
}

}  // namespace

std::vector<RealAlgebraicNumber> isolate_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
  const UniPoly sf = squarefree_part(p);
  std::vector<RealAlgebraicNumber> out;
  if (sf.degree() <= 0) return out;
  const Rational b = cauchy_bound(sf);
  isolate(sf, -b, b, out);
  return out;
}

RealAlgebraicNumber refine(const RealAlgebraicNumber& alpha, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine: width must be positive");
  RealAlgebraicNumber r = alpha;
  if (r.is_rational()) return r;
  int slo = sign(r.poly(r.lo));
  while (r.width() > width) {
    const Rational mid = r.midpoint();
    const int sm = sign(r.poly(mid));
    if (sm == 0) {
      r.lo = r.hi = mid;
      break;
    }
    if (sm == slo) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
  return r;
}

int sign_at(const UniPoly& p, const RealAlgebraicNumber& alpha) {
  if (p.is_zero()) return 0;
  if (alpha.is_rational()) return sign(p(alpha.lo));
  const UniPoly g = gcd(p, alpha.poly);
  if (g.degree() > 0 && sign(g(alpha.lo)) * sign(g(alpha.hi)) < 0) return 0;
  RealAlgebraicNumber r = alpha;
  while (true) {
    if (r.is_rational()) return sign(p(r.lo));
    const int s = sign(p(r.lo));
    if (s != 0 && descartes_bound(p, r.lo, r.hi) == 0) return s;
    r = refine(r, r.width() / 2);
  }
}

int sign_of_quotient(const UniPoly& num, const UniPoly& den, const RealAlgebraicNumber& alpha) {
  const int d = sign_at(den, alpha);
  if (d == 0) throw std::domain_error("sign_of_quotient: denominator vanishes at the root");
  return sign_at(num, alpha) * d;
}

}  // namespace exactlmi
