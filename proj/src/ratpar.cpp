#include "exactlmi/ratpar.hpp"

#include <span>

#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "exactlmi/errors.hpp"
#include "json.hpp"

namespace exactlmi {

RationalParametrization RationalParametrization::empty(std::size_t n) {
  RationalParametrization rp;
  rp.n = n;
  rp.qi.assign(n, UniPoly());
  return rp;
}

RationalParametrization RationalParametrization::from_fractions(const UniPoly& qn1, const UniPoly& q0,
                                                                std::vector<UniPoly> qi,
                                                                std::optional<std::vector<Rational>> lambda) {
  const std::size_t n = qi.size();
  if (qn1.degree() <= 0) return empty(n);
  RationalParametrization rp;
  rp.n = n;
  rp.qn1 = qn1.primitive();
  rp.lambda = std::move(lambda);
  UniPoly r0 = q0 % rp.qn1;
  for (auto& u : qi) u = u % rp.qn1;

  // scale (q0, q1, ..., qn) jointly to coprime integers
  Integer den = 1;
  auto collect_den = [&](const UniPoly& u) {
    for (const auto& c : u.coeffs()) den = lcm(den, c.get_den());
  };
  collect_den(r0);
  for (const auto& u : qi) collect_den(u);
  Integer g = 0;
  auto collect_num = [&](const UniPoly& u) {
    for (const auto& c : u.coeffs()) g = gcd(g, Integer(c.get_num() * (den / c.get_den())));
  };
  collect_num(r0);
  for (const auto& u : qi) collect_num(u);
  if (g == 0) throw std::invalid_argument("parametrization: q0 vanishes modulo qn1");
  Rational scale(den, g);
  scale.canonicalize();
  rp.q0 = r0 * scale;
  for (auto& u : qi) rp.qi.push_back(u * scale);
  return rp;
}

RationalParametrization RationalParametrization::from_coordinates(const UniPoly& q, std::vector<UniPoly> h,
                                                                  std::optional<std::vector<Rational>> lambda) {
  if (q.is_zero()) throw std::invalid_argument("parametrization: eliminating polynomial is zero");
  const UniPoly sf = squarefree_part(q);
  if (sf.degree() <= 0) return empty(h.size());
  const UniPoly q0 = sf.derivative();
  for (auto& hi : h) hi = mul_mod(hi % sf, q0, sf);
  return from_fractions(sf, q0, std::move(h), std::move(lambda));
}

std::vector<UniPoly> RationalParametrization::coordinate_functions() const {
  if (is_empty()) return std::vector<UniPoly>(n);
  const UniPoly inv = inverse_mod(q0, qn1);
  std::vector<UniPoly> h;
  for (const auto& q : qi) h.push_back(mul_mod(q, inv, qn1));
  return h;
}

void RationalParametrization::check_invariants() const {
  if (qi.size() != n) throw InternalError("parametrization: wrong number of coordinates");
  if (is_empty()) {
    if (!(qn1 == UniPoly::constant(1))) throw InternalError("parametrization: empty set must have qn1 = 1");
    if (!q0.is_zero()) throw InternalError("parametrization: empty set must have q0 = 0");
    for (const auto& q : qi)
      if (!q.is_zero()) throw InternalError("parametrization: empty set must have zero coordinates");
    return;
  }
  if (!(qn1.primitive() == qn1)) throw InternalError("parametrization: qn1 is not a primitive integer polynomial");
  if (gcd(qn1, qn1.derivative()).degree() != 0) throw InternalError("parametrization: qn1 is not squarefree");
  if (gcd(qn1, q0).degree() != 0) throw InternalError("parametrization: gcd(qn1, q0) != 1");
  const int d = qn1.degree();
  std::vector<Integer> all;
  auto check = [&](const UniPoly& u, const char* what) {
    if (u.degree() >= d) throw InternalError(std::string("parametrization: ") + what + " has degree >= deg qn1");
    if (!u.has_integer_coeffs()) throw InternalError(std::string("parametrization: ") + what + " is not integer");
    for (const auto& c : u.coeffs()) all.push_back(c.get_num());
  };
  check(q0, "q0");
  for (const auto& q : qi) check(q, "a coordinate");
  if (content(all) != 1) throw InternalError("parametrization: (q0, q1, ..., qn) has content != 1");
}

namespace {

nlohmann::json int_list(const UniPoly& u) {
  auto arr = nlohmann::json::array();
  if (u.is_zero()) return arr;
  for (const auto& c : u.coeffs()) {
    const Integer z = c.get_num();
    if (z.fits_slong_p() && sizeof(long) == 8) {
      arr.push_back(z.get_si());
    } else {
      arr.push_back(z.get_str());
    }
  }
  return arr;
}

UniPoly parse_int_list(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("parametrization: coefficient list expected");
  std::vector<Rational> c;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      c.emplace_back(v.get<long>());
    } else if (v.is_string()) {
      Rational q = parse_rational(v.get<std::string>());
      if (q.get_den() != 1) throw ParseError("parametrization: coefficients must be integers");
      c.push_back(q);
    } else {
      throw ParseError("parametrization: coefficients must be integers");
    }
  }
  return UniPoly(std::move(c));
}

}  // namespace

std::string ratpar_to_json(const RationalParametrization& rp) {
  nlohmann::json j;
  j["n"] = rp.n;
  if (rp.lambda) {
    auto l = nlohmann::json::array();
    for (const auto& x : *rp.lambda) l.push_back(to_string(x));
    j["lambda"] = l;
  } else {
    j["lambda"] = nullptr;
  }
  j["q0"] = int_list(rp.q0);
  j["qi"] = nlohmann::json::array();
  for (const auto& q : rp.qi) j["qi"].push_back(int_list(q));
  j["qn1"] = int_list(rp.qn1);
  return j.dump();
}

RationalParametrization ratpar_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  for (const char* key : {"n", "q0", "qi", "qn1"}) {
    if (!j.contains(key)) throw ParseError(std::string("parametrization: missing field ") + key);
  }
  RationalParametrization rp;
  rp.n = j["n"].get<std::size_t>();
  rp.q0 = parse_int_list(j["q0"]);
  if (!j["qi"].is_array() || j["qi"].size() != rp.n) throw ParseError("parametrization: qi must hold n lists");
  for (const auto& q : j["qi"]) rp.qi.push_back(parse_int_list(q));
  rp.qn1 = parse_int_list(j["qn1"]);
  if (j.contains("lambda") && !j["lambda"].is_null()) {
    std::vector<Rational> l;
    for (const auto& v : j["lambda"]) l.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>()));
    if (l.size() != rp.n) throw ParseError("parametrization: lambda must have n entries");
    rp.lambda = std::move(l);
  }
  try {
    rp.check_invariants();
  } catch (const InternalError& e) {
    throw ParseError(e.what());
  }
  return rp;
}

RatParResult ratpar(const LagrangeSystem& lag, const std::vector<Rational>& lambda, Seed seed, long bound,
                    const ResourceLimits& limits) {
  const std::size_t n = lag.n;
  if (lambda.size() != n) throw std::invalid_argument("ratpar: lambda must have one entry per x variable");
  RatParResult out{RationalParametrization::empty(n), 0};
  const GroebnerBasis gb = buchberger(lag.polys, MonomialOrder::grevlex(), limits);
  if (gb.is_unit()) return out;
  const int dim = ideal_dimension(gb);
  if (dim != 0) {
    throw GenericityError(GenericityStage::Dimension,
                          "critical points of " + lag.iota.to_string() + " form a set of dimension " + std::to_string(dim));
  }
  std::vector<std::size_t> xv;
  for (std::size_t i = 0; i < n; ++i) xv.push_back(lag.x_var(i));
  std::mt19937_64 rng(seed);
  std::vector<Rational> lam = lambda;
  constexpr int kAttempts = 4;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    if (attempt > 0) {
      for (auto& l : lam) l = draw_integer(rng, -bound, bound);
    }
    std::vector<Rational> full(lag.nvars(), Rational(0));
    for (std::size_t i = 0; i < n; ++i) full[xv[i]] = lam[i];
    try {
      const ShapeBasis s = fglm_to_lex(gb, full, limits, xv);
      out.rp = RationalParametrization::from_coordinates(s.eliminant, s.coordinates, lam);
      out.critical_points = s.quotient_dimension;
      return out;
    } catch (const NotShapeError&) {
    }
  }
  throw GenericityError(GenericityStage::Shape, "no separating linear form found for " + lag.iota.to_string());
}

namespace {

using IntPoly = std::vector<Integer>;

// a * b reduced modulo a monic integer polynomial
IntPoly mul_mod_monic(const IntPoly& a, const IntPoly& b, const IntPoly& mod) {
  if (a.empty() || b.empty()) return {};
  IntPoly x(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) x[i + j] += a[i] * b[j];
  const std::size_t dm = mod.size() - 1;
  for (std::size_t k = x.size(); k-- > dm;) {
    if (x[k] == 0) continue;
    const Integer c = x[k];
    for (std::size_t i = 0; i <= dm; ++i) x[k - dm + i] -= c * mod[i];
  }
  x.resize(std::min(x.size(), dm));
  while (!x.empty() && x.back() == 0) x.pop_back();
  return x;
}

}  // namespace

UniPoly eval_homogenized(const MultiPoly& f, const RationalParametrization& rp, int d) {
  if (rp.is_empty()) return UniPoly();
  if (f.nvars() != rp.n) throw std::invalid_argument("eval_homogenized: roster size differs from n");
  // With L = lc(qn1) and t = s / L, L^(e-1) qn1(s / L) is monic in s (e = deg qn1) and every
  // q becomes an integer polynomial, so the whole evaluation stays in Z[s].
  const IntPoly qn1 = rp.qn1.integer_coeffs();
  const std::size_t e = qn1.size() - 1;
  const Integer lead = qn1.back();
  std::vector<Integer> lpow(e + 1, Integer(1));
  for (std::size_t k = 1; k <= e; ++k) lpow[k] = lpow[k - 1] * lead;
  auto to_s = [&](const UniPoly& q) {
    IntPoly out;
    for (int k = 0; k <= q.degree(); ++k) {
      const Rational& c = q.coeffs()[static_cast<std::size_t>(k)];
      if (c.get_den() != 1) throw InternalError("eval_homogenized: parametrization is not integral");
      out.push_back(c.get_num() * lpow[e - 1 - static_cast<std::size_t>(k)]);
    }
    return out;
  };
  IntPoly mod(e + 1);
  for (std::size_t k = 0; k < e; ++k) mod[k] = qn1[k] * lpow[e - 1 - k];
  mod[e] = 1;

  std::vector<IntPoly> base;
  for (const auto& q : rp.qi) base.push_back(to_s(q));
  base.push_back(to_s(rp.q0));
  std::vector<std::vector<IntPoly>> pow(rp.n + 1);
  auto power = [&](std::size_t var, std::uint32_t k) -> const IntPoly& {
    auto& cache = pow[var];
    if (cache.empty()) cache.push_back(IntPoly{Integer(1)});
    while (cache.size() <= k) cache.push_back(mul_mod_monic(cache.back(), base[var], mod));
    return cache[k];
  };

  Integer den = 1;
  for (const auto& [ex, c] : f.terms()) den = lcm(den, c.get_den());
  IntPoly acc;
  for (const auto& [ex, c] : f.terms()) {
    int deg = 0;
    IntPoly term{c.get_num() * (den / c.get_den())};
    for (std::size_t v = 0; v < ex.size(); ++v) {
      if (ex[v] == 0) continue;
      deg += static_cast<int>(ex[v]);
      term = mul_mod_monic(term, power(v, ex[v]), mod);
    }
    if (deg > d) throw std::invalid_argument("eval_homogenized: term degree exceeds the bound");
    if (deg < d) term = mul_mod_monic(term, power(rp.n, static_cast<std::uint32_t>(d - deg)), mod);
    if (acc.size() < term.size()) acc.resize(term.size(), Integer(0));
    for (std::size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
  }
  // back to t: G(t) = G~(L t) / (L^((e-1) d) den)
  Integer scale = den;
  for (int i = 0; i < d; ++i) scale *= lpow[e - 1];
  std::vector<Rational> out;
  Integer lk = 1;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    Rational c(acc[k] * lk, scale);
    c.canonicalize();
    out.push_back(std::move(c));
    lk *= lead;
  }
  return UniPoly(std::move(out));
}

bool vanishes_on(std::span<const MultiPoly> polys, const RationalParametrization& rp) {
  if (rp.is_empty()) return true;
  for (const auto& f : polys) {
    if (f.is_zero()) continue;
    if (!eval_homogenized(f, rp, f.total_degree()).is_zero()) return false;
  }
  return true;
}

namespace {

// Laplace expansion along the first chosen row, every product reduced modulo `mod`.
UniPoly minor_mod(const std::vector<UniPoly>& e, std::size_t m, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols, const UniPoly& mod) {
  if (rows.size() == 1) return e[rows[0] * m + cols[0]];
  UniPoly out;
  std::vector<std::size_t> rest(cols.size() - 1);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const UniPoly& a = e[rows[0] * m + cols[j]];
    if (a.is_zero()) continue;
    for (std::size_t k = 0, w = 0; k < cols.size(); ++k)
      if (k != j) rest[w++] = cols[k];
    const UniPoly term = mul_mod(a, minor_mod(e, m, rows.subspan(1), rest, mod), mod);
    if (j % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

}  // namespace

RationalParametrization project(const RationalParametrization& rp, const SymmetricPencil& p, const QMatrix& M,
                                std::size_t r) {
  if (rp.is_empty() || r == 0) return rp;
  const SymmetricPencil b = change_of_variables(p, M);
  const std::size_t m = b.m();
  // q0 * A(Mx) at the points, entrywise
  std::vector<UniPoly> e(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      UniPoly v = rp.q0 * b[0](i, j);
      for (std::size_t k = 0; k < b.n(); ++k)
        if (b[k + 1](i, j) != 0) v += rp.qi[k] * b[k + 1](i, j);
      e[i * m + j] = v % rp.qn1;
    }
  UniPoly g = rp.qn1;
  const auto sets = subsets(m, r);
  for (std::size_t a = 0; a < sets.size() && g.degree() > 0; ++a) {
    for (std::size_t c = a; c < sets.size() && g.degree() > 0; ++c) {
      const UniPoly d = minor_mod(e, m, sets[a], sets[c], g);
      const UniPoly h = gcd(g, d);
      if (h.degree() < g.degree()) {
        g = h;
        for (auto& x : e) x = x % g;
      }
    }
  }
  if (g.degree() <= 0) return rp;
  return restrict_to(rp, rp.qn1 / g);
}

RationalParametrization restrict_to(const RationalParametrization& rp, const UniPoly& factor) {
  if (rp.is_empty() || factor.degree() <= 0) return RationalParametrization::empty(rp.n);
  if (!(rp.qn1 % factor).is_zero()) throw std::invalid_argument("restrict_to: not a factor of qn1");
  return RationalParametrization::from_fractions(factor, rp.q0, rp.qi, rp.lambda);
}

RationalParametrization image(const RationalParametrization& rp, const QMatrix& M) {
  if (M.rows() != rp.n || M.cols() != rp.n) throw std::invalid_argument("image: matrix size differs from n");
  const QMatrix inv = inverse(M);
  if (rp.is_empty()) return RationalParametrization::empty(rp.n);
  std::vector<UniPoly> out(rp.n);
  for (std::size_t i = 0; i < rp.n; ++i)
    for (std::size_t j = 0; j < rp.n; ++j)
      if (inv(i, j) != 0) out[i] += rp.qi[j] * inv(i, j);
  return RationalParametrization::from_fractions(rp.qn1, rp.q0, std::move(out));
}

RationalParametrization set_union(const RationalParametrization& a, const RationalParametrization& b) {
  if (a.n != b.n) throw std::invalid_argument("union: parametrizations live in different dimensions");
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  const UniPoly g = gcd(a.qn1, b.qn1);
  if (g.degree() > 0) {
    // shared labels must name the same point: q_a/q0_a = q_b/q0_b modulo g
    const UniPoly a0 = a.q0 % g, b0 = b.q0 % g;
    for (std::size_t i = 0; i < a.n; ++i) {
      if (!(mul_mod(a.qi[i], b0, g) - mul_mod(b.qi[i], a0, g)).is_zero())
        throw CollisionError("union: one label maps to two different points");
    }
  }
  std::optional<std::vector<Rational>> lam;
  if (a.lambda && b.lambda && *a.lambda == *b.lambda) lam = a.lambda;
  const UniPoly rest = b.qn1 / g;
  if (rest.degree() <= 0) {
    RationalParametrization out = a;
    out.lambda = lam;
    return out;
  }
  // b restricted to the new labels, then glued: q = rest * q_a + qn1_a * q_b
  const UniPoly b0 = b.q0 % rest;
  UniPoly q0 = rest * a.q0 + a.qn1 * b0;
  std::vector<UniPoly> qi;
  for (std::size_t i = 0; i < a.n; ++i) qi.push_back(rest * a.qi[i] + a.qn1 * (b.qi[i] % rest));
  return RationalParametrization::from_fractions(a.qn1 * rest, q0, std::move(qi), lam);
}

RationalParametrization lift(const RationalParametrization& rp, const Rational& t0) {
  if (rp.is_empty()) return RationalParametrization::empty(rp.n + 1);
  std::vector<UniPoly> qi = rp.qi;
  qi.insert(qi.begin(), rp.q0 * t0);
  std::optional<std::vector<Rational>> lam;
  if (rp.lambda) {
    lam = *rp.lambda;
    lam->insert(lam->begin(), Rational(0));
  }
  return RationalParametrization::from_fractions(rp.qn1, rp.q0, std::move(qi), lam);
}

RationalParametrization shift_labels(const RationalParametrization& rp, const Rational& s) {
  if (rp.is_empty()) return rp;
  std::vector<UniPoly> qi;
  for (const auto& u : rp.qi) qi.push_back(u.shift(s));
  return RationalParametrization::from_fractions(rp.qn1.shift(s), rp.q0.shift(s), std::move(qi));
}

bool same_set(const RationalParametrization& a, const RationalParametrization& b) {
  if (a.n != b.n) return false;
  if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
  if (!(a.qn1.primitive() == b.qn1.primitive())) return false;
  for (std::size_t i = 0; i < a.n; ++i) {
    if (!(mul_mod(a.qi[i], b.q0, a.qn1) - mul_mod(b.qi[i], a.q0, a.qn1)).is_zero()) return false;
  }
  return true;
}

}  // namespace exactlmi
