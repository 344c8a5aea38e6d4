#include "exactlmi/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace exactlmi {

namespace {

using IntVec = std::vector<Integer>;

void trim_int(IntVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(IntVec& v) {
  trim_int(v);
  if (v.empty()) return;
  Integer g = content(v);
  if (v.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// lc(b)^(deg a - deg b + 1) * a mod b over the integers.
IntVec pseudo_remainder(IntVec a, const IntVec& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
  return a;
}

IntVec to_primitive_ints(const std::vector<Rational>& coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.get_den());
  IntVec v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c.get_num() * (den / c.get_den()));
  make_primitive(v);
  return v;
}

// a mod b computed over the integers: denominators are cleared up front and divided out once.
UniPoly exact_remainder(const UniPoly& a, const UniPoly& b) {
  Integer den = 1;
  for (const auto& c : a.coeffs()) den = lcm(den, c.get_den());
  IntVec x;
  x.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) x.emplace_back(c.get_num() * (den / c.get_den()));
  const IntVec y = to_primitive_ints(b.coeffs());
  const std::size_t dy = y.size() - 1;
  const Integer& ly = y.back();
  Integer scale = den;
  while (!x.empty() && x.size() - 1 >= dy) {
    const std::size_t shift = x.size() - 1 - dy;
    const Integer lx = x.back();
    for (auto& c : x) c *= ly;
    scale *= ly;
    for (std::size_t i = 0; i <= dy; ++i) x[i + shift] -= lx * y[i];
    trim_int(x);
  }
  std::vector<Rational> r;
  r.reserve(x.size());
  for (auto& c : x) {
    Rational q(c, scale);
    q.canonicalize();
    r.push_back(std::move(q));
  }
  return UniPoly(std::move(r));
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const std::vector<Integer>& coeffs) {
  coeffs_.reserve(coeffs.size());
  for (const auto& c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::identity() { return UniPoly(std::vector<Rational>{0, 1}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

UniPoly UniPoly::shift(const Rational& s) const {
  // Horner in the ring Q[t]: p(t+s) = (...(a_d (t+s) + a_{d-1})(t+s) + ...)
  UniPoly acc;
  const UniPoly lin(std::vector<Rational>{s, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

UniPoly UniPoly::scale_variable(const Rational& c) const {
  UniPoly r = *this;
  Rational p = 1;
  for (auto& x : r.coeffs_) {
    x *= p;
    p *= c;
  }
  r.trim();
  return r;
}

UniPoly UniPoly::primitive() const { return UniPoly(to_primitive_ints(coeffs_)); }

std::vector<Integer> UniPoly::integer_coeffs() const { return to_primitive_ints(coeffs_); }

bool UniPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || k == 0) os << exactlmi::to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational inv_lead = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return a;
  return exact_remainder(a, b);
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntVec x = to_primitive_ints(a.coeffs());
  IntVec y = to_primitive_ints(b.coeffs());
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntVec r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return UniPoly(x).monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(1);
  const UniPoly g = gcd(p, p.derivative());
  return (p / g).primitive();
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  // extended Euclid on (a mod m, m); track s with s*a = r (mod m)
  UniPoly r0 = m, r1 = a % m;
  UniPoly s0, s1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial is not invertible modulo m");
  return (s0 * (Rational(1) / r0.leading())) % m;
}

UniPoly mul_mod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return (a * b) % m; }

}  // namespace exactlmi
