#include "exactlmi/groebner.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "exactlmi/errors.hpp"
#include "exactlmi/qmatrix.hpp"

namespace exactlmi {

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  const std::size_t n = a.size();
  auto grevlex_range = [&](std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  };
  switch (kind) {
    case OrderKind::Grevlex:
      return grevlex_range(0, n);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::BlockGrevlex: {
      const std::size_t k = std::min(block, n);
      if (int c = grevlex_range(0, k)) return c;
      return grevlex_range(k, n);
    }
  }
  return 0;
}

ResourceLimits ResourceLimits::with_seconds(double seconds) {
  ResourceLimits l;
  if (seconds > 0) {
    l.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
  }
  return l;
}

void ResourceLimits::check_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw TimeoutError("wall-time limit exceeded");
}

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero();
}

std::vector<Exponents> GroebnerBasis::leading_monomials() const {
  std::vector<Exponents> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(leading_monomial(g, order));
  return out;
}

Exponents leading_monomial(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::domain_error("leading monomial of the zero polynomial");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (!best || order.compare(e, *best) > 0) best = &e;
  }
  return *best;
}

namespace {

constexpr std::size_t kMaxVars = 32;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  std::uint32_t mask = 0;

  friend bool operator==(const Mono& a, const Mono& b) { return a.deg == b.deg && a.e == b.e; }
};

Mono mono_mul(const Mono& a, const Mono& b, std::size_t n) {
  Mono r;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned s = unsigned{a.e[i]} + b.e[i];
    if (s > 0xFFFFu) throw std::overflow_error("monomial exponent overflow in Groebner engine");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  r.mask = a.mask | b.mask;
  return r;
}

bool mono_divides(const Mono& a, const Mono& b, std::size_t n) {
  if (a.deg > b.deg || (a.mask & ~b.mask) != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

// b / a, assuming a | b
Mono mono_div(const Mono& b, const Mono& a, std::size_t n) {
  Mono r;
  r.deg = b.deg - a.deg;
  for (std::size_t i = 0; i < n; ++i) {
    r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    if (r.e[i]) r.mask |= 1u << i;
  }
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b, std::size_t n) {
  Mono r;
  for (std::size_t i = 0; i < n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  r.mask = a.mask | b.mask;
  return r;
}

bool mono_coprime(const Mono& a, const Mono& b) { return (a.mask & b.mask) == 0; }

Mono mono_from(const Exponents& e) {
  Mono m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0xFFFFu) throw std::overflow_error("monomial exponent overflow in Groebner engine");
    m.e[i] = static_cast<std::uint16_t>(e[i]);
    m.deg += e[i];
    if (e[i]) m.mask |= 1u << i;
  }
  return m;
}

Exponents mono_to(const Mono& m, std::size_t n) {
  Exponents e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = m.e[i];
  return e;
}

struct Order {
  OrderKind kind;
  std::size_t n;
  std::size_t block;

  int grevlex_range(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi, bool whole) const {
    if (whole) {
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    } else {
      unsigned da = 0, db = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
      }
      if (da != db) return da > db ? 1 : -1;
    }
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  int cmp(const Mono& a, const Mono& b) const {
    switch (kind) {
      case OrderKind::Grevlex:
        return grevlex_range(a, b, 0, n, true);
      case OrderKind::Lex:
        for (std::size_t i = 0; i < n; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case OrderKind::BlockGrevlex: {
        const std::size_t k = std::min(block, n);
        if (int c = grevlex_range(a, b, 0, k, false)) return c;
        return grevlex_range(a, b, k, n, false);
      }
    }
    return 0;
  }
};

struct Term {
  Mono m;
  Integer c;
};

using Poly = std::vector<Term>;  // strictly decreasing monomials, nonzero coefficients

void make_primitive(Poly& p, Rational* factor = nullptr) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g == 1) return;
  for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  if (factor) *factor *= g;
}

std::size_t max_bits(const Poly& p) {
  std::size_t b = 0;
  for (const auto& t : p) b = std::max(b, bit_length(t.c));
  return b;
}

// Integer polynomial with content 1; `scale` receives q with p = scale * result.
Poly to_internal(const MultiPoly& p, const Order& ord, Rational* scale = nullptr) {
  if (p.nvars() > kMaxVars) throw std::invalid_argument("Groebner engine supports at most 32 variables");
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) den = lcm(den, c.get_den());
  Poly r;
  r.reserve(p.size());
  for (const auto& [e, c] : p.terms()) r.push_back({mono_from(e), c.get_num() * (den / c.get_den())});
  std::sort(r.begin(), r.end(), [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  Rational f(1, den);
  make_primitive(r, &f);
  f.canonicalize();
  if (scale) *scale = f;
  return r;
}

MultiPoly to_external(const Poly& p, const Roster& roster, const Rational& scale) {
  MultiPoly r(roster);
  for (const auto& t : p) r.add_term(mono_to(t.m, roster.size()), Rational(t.c) * scale);
  return r;
}

MultiPoly to_external_monic(const Poly& p, const Roster& roster) {
  if (p.empty()) return MultiPoly(roster);
  Rational inv(Integer(1), p.front().c);
  inv.canonicalize();
  return to_external(p, roster, inv);
}

class Reducer {
 public:
  Reducer(const Order& ord, const ResourceLimits& limits) : ord_(ord), limits_(limits) {}

  void add(Poly p) {
    weight_.push_back(weight(p));
    basis_.push_back(std::move(p));
    active_.push_back(true);
  }
  void deactivate(std::size_t i) { active_[i] = false; }
  bool active(std::size_t i) const { return active_[i]; }
  const Poly& operator[](std::size_t i) const { return basis_[i]; }
  std::size_t size() const { return basis_.size(); }

  // Full reduction. With `factor`, tracks NF(input) = factor * result; otherwise the
  // result is only defined up to a nonzero scalar and is returned primitive.
  // `skip` excludes one basis element from the reducers.
  Poly reduce(Poly p, Rational* factor = nullptr, std::size_t skip = SIZE_MAX) const {
    Poly out;
    std::size_t steps = 0;
    std::size_t checked_bits = max_bits(p);
    Poly scratch;
    while (!p.empty()) {
      const Term& head = p.front();
      const std::size_t gi = find_reducer(head.m, skip);
      if (gi == SIZE_MAX) {
        out.push_back(std::move(p.front()));
        p.erase(p.begin());
        continue;
      }
      const Poly& g = basis_[gi];
      Integer a = g.front().c;
      Integer c = head.c;
      Integer d = gcd(a, c);
      if (d != 1) {
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
      }
      if (a < 0) {
        a = -a;
        c = -c;
      }
      const Mono u = mono_div(head.m, g.front().m, ord_.n);
      sub_mul(p, a, c, u, g, scratch);
      std::swap(p, scratch);
      if (a != 1) {
        for (auto& t : out) t.c *= a;
        if (factor) *factor /= a;
      }
      if ((++steps & 63u) == 0) limits_.check_deadline();
      if (!p.empty()) {
        const std::size_t bits = bit_length(p.front().c);
        if (bits > 2 * checked_bits + 64) {
          remove_common_content(p, out, factor);
          checked_bits = max_bits(p);
        }
      }
    }
    if (factor) {
      Rational f = 1;
      make_primitive(out, &f);
      *factor *= f;
    } else {
      make_primitive(out);
    }
    return out;
  }

  // Brings element i to the form head + NF(tail), keeping it primitive.
  void tail_reduce(std::size_t i) {
    const Term head = basis_[i].front();
    Poly tail(basis_[i].begin() + 1, basis_[i].end());
    Rational f = 1;
    Poly t = reduce(std::move(tail), &f, i);
    const Rational hc = Rational(head.c) / f;
    Poly r;
    r.reserve(t.size() + 1);
    r.push_back({head.m, hc.get_num()});
    for (auto& term : t) {
      term.c *= hc.get_den();
      r.push_back(std::move(term));
    }
    make_primitive(r);
    weight_[i] = weight(r);
    basis_[i] = std::move(r);
  }

  bool tail_divisible_by(std::size_t i, const Mono& m) const {
    for (std::size_t k = 1; k < basis_[i].size(); ++k) {
      if (mono_divides(m, basis_[i][k].m, ord_.n)) return true;
    }
    return false;
  }

  std::size_t find_reducer(const Mono& m, std::size_t skip = SIZE_MAX) const {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!active_[i] || i == skip) continue;
      if (!mono_divides(basis_[i].front().m, m, ord_.n)) continue;
      if (best == SIZE_MAX || weight_[i] < weight_[best]) best = i;
    }
    return best;
  }

 private:
  // out := a*p - c*u*g with the (cancelling) heads dropped
  void sub_mul(const Poly& p, const Integer& a, const Integer& c, const Mono& u, const Poly& g, Poly& out) const {
    out.clear();
    out.reserve(p.size() + g.size());
    const bool scale = a != 1;
    std::size_t i = 1, j = 1;
    Term t;
    while (i < p.size() || j < g.size()) {
      int cmp;
      Mono mg;
      if (j < g.size()) mg = mono_mul(u, g[j].m, ord_.n);
      if (i >= p.size()) {
        cmp = -1;
      } else if (j >= g.size()) {
        cmp = 1;
      } else {
        cmp = ord_.cmp(p[i].m, mg);
      }
      if (cmp > 0) {
        t.m = p[i].m;
        if (scale) {
          mpz_mul(t.c.get_mpz_t(), p[i].c.get_mpz_t(), a.get_mpz_t());
        } else {
          t.c = p[i].c;
        }
        out.push_back(std::move(t));
        ++i;
      } else if (cmp < 0) {
        t.m = mg;
        mpz_mul(t.c.get_mpz_t(), g[j].c.get_mpz_t(), c.get_mpz_t());
        mpz_neg(t.c.get_mpz_t(), t.c.get_mpz_t());
        out.push_back(std::move(t));
        ++j;
      } else {
        t.m = mg;
        if (scale) {
          mpz_mul(t.c.get_mpz_t(), p[i].c.get_mpz_t(), a.get_mpz_t());
        } else {
          t.c = p[i].c;
        }
        mpz_submul(t.c.get_mpz_t(), g[j].c.get_mpz_t(), c.get_mpz_t());
        if (t.c != 0) out.push_back(std::move(t));
        ++i;
        ++j;
      }
    }
  }

  static void remove_common_content(Poly& p, Poly& out, Rational* factor) {
    Integer g = 0;
    for (const auto* poly : {&p, &out}) {
      for (const auto& t : *poly) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g == 0 || g == 1) return;
    for (auto* poly : {&p, &out}) {
      for (auto& t : *poly) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
    if (factor) *factor *= g;
  }

  // total coefficient size; cheaper reducers keep remainders small
  static std::size_t weight(const Poly& p) {
    std::size_t w = 0;
    for (const auto& t : p) w += bit_length(t.c) + 1;
    return w;
  }

  Order ord_;
  const ResourceLimits& limits_;
  std::vector<Poly> basis_;
  std::vector<bool> active_;
  std::vector<std::size_t> weight_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Mono lcm;
};

class Buchberger {
 public:
  Buchberger(const Order& ord, const ResourceLimits& limits) : ord_(ord), limits_(limits), red_(ord, limits) {}

  // Returns false when the unit ideal was detected.
  bool run(std::vector<Poly> input) {
    for (auto& f : input) {
      Poly h = red_.reduce(std::move(f));
      if (h.empty()) continue;
      if (!insert(std::move(h))) return false;
    }
    while (!pairs_.empty()) {
      limits_.check_deadline();
      Pair pr = pairs_.back();
      pairs_.pop_back();
      Poly s = spoly(pr);
      Poly h = red_.reduce(std::move(s));
      if (h.empty()) continue;
      if (!insert(std::move(h))) return false;
    }
    return true;
  }

  // Reduced basis (monic in the external form), sorted by increasing leading monomial.
  std::vector<Poly> reduced() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < red_.size(); ++i) {
      if (!red_.active(i)) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < red_.size() && !redundant; ++j) {
        if (j == i || !red_.active(j)) continue;
        if (mono_divides(red_[j].front().m, red_[i].front().m, ord_.n)) {
          redundant = !(red_[j].front().m == red_[i].front().m) || j < i;
        }
      }
      if (!redundant) keep.push_back(i);
    }
    Reducer minimal(ord_, limits_);
    for (auto i : keep) minimal.add(red_[i]);
    std::vector<Poly> out;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      minimal.tail_reduce(k);
      out.push_back(minimal[k]);
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return ord_.cmp(a.front().m, b.front().m) < 0; });
    return out;
  }

 private:
  Poly spoly(const Pair& pr) const {
    const Poly& f = red_[pr.i];
    const Poly& g = red_[pr.j];
    const Mono uf = mono_div(pr.lcm, f.front().m, ord_.n);
    const Mono ug = mono_div(pr.lcm, g.front().m, ord_.n);
    Integer a = g.front().c, c = f.front().c;
    Integer d = gcd(a, c);
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    // a*uf*f - c*ug*g
    Poly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 1, j = 1;
    while (i < f.size() || j < g.size()) {
      Mono mf, mg;
      if (i < f.size()) mf = mono_mul(uf, f[i].m, ord_.n);
      if (j < g.size()) mg = mono_mul(ug, g[j].m, ord_.n);
      int cmp = i >= f.size() ? -1 : (j >= g.size() ? 1 : ord_.cmp(mf, mg));
      if (cmp > 0) {
        out.push_back({mf, f[i].c * a});
        ++i;
      } else if (cmp < 0) {
        out.push_back({mg, -(g[j].c * c)});
        ++j;
      } else {
        Integer v = f[i].c * a - g[j].c * c;
        if (v != 0) out.push_back({mf, std::move(v)});
        ++i;
        ++j;
      }
    }
    make_primitive(out);
    return out;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    // sorted so that the smallest lcm sits at the back
    int c = ord_.cmp(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  }

  bool insert(Poly h) {
    if (h.front().m.deg == 0) return false;
    if (limits_.max_coeff_bits && max_bits(h) > limits_.max_coeff_bits) {
      throw TimeoutError("coefficient size limit exceeded");
    }
    const std::size_t hi = red_.size();
    const Mono hm = h.front().m;
    red_.add(std::move(h));
    if (limits_.max_basis_size && hi + 1 > limits_.max_basis_size) throw TimeoutError("basis size limit exceeded");

    // Gebauer-Moeller update
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!red_.active(g)) continue;
      cand.push_back({g, hi, mono_lcm(red_[g].front().m, hm, ord_.n)});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const Pair& p = cand[k];
      const bool coprime = mono_coprime(red_[p.i].front().m, hm);
      bool keep = coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < cand.size() && keep; ++l) {
          if (mono_divides(cand[l].lcm, p.lcm, ord_.n)) keep = false;
        }
        for (std::size_t l = 0; l < d.size() && keep; ++l) {
          if (mono_divides(d[l].lcm, p.lcm, ord_.n)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (const auto& p : d) {
      if (!mono_coprime(red_[p.i].front().m, hm)) e.push_back(p);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + e.size());
    for (const auto& p : pairs_) {
      const bool drop = mono_divides(hm, p.lcm, ord_.n) &&
                        !(mono_lcm(red_[p.i].front().m, hm, ord_.n) == p.lcm) &&
                        !(mono_lcm(red_[p.j].front().m, hm, ord_.n) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    for (auto& p : e) kept.push_back(p);
    std::sort(kept.begin(), kept.end(), [&](const Pair& a, const Pair& b) { return pair_less(a, b); });
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < hi; ++g) {
      if (red_.active(g) && mono_divides(hm, red_[g].front().m, ord_.n)) red_.deactivate(g);
    }
    // keep the working basis inter-reduced; otherwise coefficients swell along reduction chains
    for (std::size_t g = 0; g < hi; ++g) {
      if (red_.active(g) && red_.tail_divisible_by(g, hm)) red_.tail_reduce(g);
    }
    return true;
  }

  Order ord_;
  const ResourceLimits& limits_;
  Reducer red_;
  std::vector<Pair> pairs_;
};

Order make_order(const MonomialOrder& o, std::size_t n) { return Order{o.kind, n, o.block}; }

// Linear interreduction of the input (rows of the coefficient matrix in row-echelon form).
std::vector<MultiPoly> linear_preprocess(std::span<const MultiPoly> polys, const MonomialOrder& order) {
  std::vector<Exponents> monos;
  {
    std::set<Exponents> all;
    for (const auto& p : polys)
      for (const auto& [e, c] : p.terms()) all.insert(e);
    monos.assign(all.begin(), all.end());
    std::sort(monos.begin(), monos.end(), [&](const Exponents& a, const Exponents& b) { return order.compare(a, b) > 0; });
  }
  std::map<Exponents, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
  std::vector<const MultiPoly*> nonzero;
  for (const auto& p : polys)
    if (!p.is_zero()) nonzero.push_back(&p);
  if (nonzero.empty()) return {};
  QMatrix m(nonzero.size(), monos.size());
  for (std::size_t r = 0; r < nonzero.size(); ++r)
    for (const auto& [e, c] : nonzero[r]->terms()) m(r, index.at(e)) = c;
  const auto red = rref(m);
  std::vector<MultiPoly> out;
  const Roster& roster = nonzero.front()->roster();
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    MultiPoly p(roster);
    for (std::size_t k = 0; k < monos.size(); ++k) p.add_term(monos[k], red.matrix(r, k));
    out.push_back(std::move(p));
  }
  // smallest leading monomials first
  std::reverse(out.begin(), out.end());
  return out;
}

Roster common_roster(std::span<const MultiPoly> polys) {
  Roster r;
  for (const auto& p : polys) {
    if (p.roster().empty() && p.is_zero()) continue;
    if (r.empty()) {
      r = p.roster();
    } else if (p.roster() != r) {
      throw std::invalid_argument("buchberger: polynomials must share one roster");
    }
  }
  return r;
}

}  // namespace

GroebnerBasis buchberger(std::span<const MultiPoly> polys, MonomialOrder order, const ResourceLimits& limits) {
  Roster roster = common_roster(polys);
  const std::size_t n = roster.size();
  if (n > kMaxVars) throw std::invalid_argument("Groebner engine supports at most 32 variables");
  const Order ord = make_order(order, n);
  GroebnerBasis gb{{}, order, roster};

  const auto pre = linear_preprocess(polys, order);
  std::vector<Poly> input;
  for (const auto& p : pre) input.push_back(to_internal(p, ord));
  for (const auto& p : input) {
    if (p.front().m.deg == 0) {
      gb.generators.push_back(MultiPoly::constant(roster, 1));
      return gb;
    }
  }
  if (input.empty()) return gb;

  Buchberger engine(ord, limits);
  if (!engine.run(std::move(input))) {
    gb.generators.push_back(MultiPoly::constant(roster, 1));
    return gb;
  }
  for (const auto& p : engine.reduced()) gb.generators.push_back(to_external_monic(p, roster));
  return gb;
}

int ideal_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const std::size_t n = gb.roster.size();
  if (n > 64) throw std::invalid_argument("ideal_dimension: too many variables");
  std::vector<std::uint64_t> supports;
  for (const auto& e : gb.leading_monomials()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) s |= std::uint64_t{1} << i;
    supports.push_back(s);
  }
  // largest set of variables containing no leading-monomial support
  int best = 0;
  auto independent = [&](std::uint64_t set) {
    for (auto s : supports)
      if ((s & ~set) == 0) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t idx, std::uint64_t set, int count) -> void {
    if (count + static_cast<int>(n - idx) <= best) return;
    if (idx == n) {
      best = count;
      return;
    }
    const std::uint64_t with = set | (std::uint64_t{1} << idx);
    if (independent(with)) self(self, idx + 1, with, count + 1);
    self(self, idx + 1, set, count);
  };
  search(search, 0, 0, 0);
  return best;
}

QuotientBasis quotient_basis(const GroebnerBasis& gb) {
  if (ideal_dimension(gb) != 0) throw std::domain_error("quotient basis requires a zero-dimensional ideal");
  const std::size_t n = gb.roster.size();
  const auto lms = gb.leading_monomials();
  auto standard = [&](const Exponents& e) {
    for (const auto& l : lms) {
      bool divides = true;
      for (std::size_t i = 0; i < n && divides; ++i) divides = l[i] <= e[i];
      if (divides) return false;
    }
    return true;
  };
  std::set<Exponents> seen;
  std::vector<Exponents> queue{Exponents(n, 0)};
  seen.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      Exponents e = queue[k];
      e[v] += 1;
      if (seen.count(e) || !standard(e)) continue;
      seen.insert(e);
      queue.push_back(e);
    }
  }
  std::sort(queue.begin(), queue.end(), [&](const Exponents& a, const Exponents& b) { return gb.order.compare(a, b) < 0; });
  return {std::move(queue)};
}

namespace {

struct GbReducer {
  Order ord;
  ResourceLimits limits;
  Reducer red;

  explicit GbReducer(const GroebnerBasis& gb)
      : ord(make_order(gb.order, gb.roster.size())), red(ord, limits) {
    if (gb.roster.size() > kMaxVars) throw std::invalid_argument("Groebner engine supports at most 32 variables");
    for (const auto& g : gb.generators) red.add(to_internal(g, ord));
  }

  MultiPoly normal_form(const MultiPoly& p, const Roster& roster) {
    if (p.is_zero()) return MultiPoly(roster);
    Rational scale;
    Poly q = to_internal(p.with_roster(roster), ord, &scale);
    Rational factor = 1;
    Poly r = red.reduce(std::move(q), &factor);
    return to_external(r, roster, scale * factor);
  }
};

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
  if (gb.is_unit()) return MultiPoly(gb.roster);
  GbReducer r(gb);
  return r.normal_form(p, gb.roster);
}

bool reduces_to_zero(const MultiPoly& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

GroebnerBasis ShapeBasis::as_lex_basis(const std::string& tvar) const {
  Roster r = roster;
  r.push_back(tvar);
  const std::size_t tpos = roster.size();
  auto univariate = [&](const UniPoly& u) {
    MultiPoly p(r);
    for (int k = 0; k <= u.degree(); ++k) {
      Exponents e(r.size(), 0);
      e[tpos] = static_cast<std::uint32_t>(k);
      p.add_term(e, u.coeff(k));
    }
    return p;
  };
  GroebnerBasis gb{{}, MonomialOrder::lex(), r};
  gb.generators.push_back(univariate(eliminant.monic()));
  for (std::size_t i = roster.size(); i-- > 0;) {
    gb.generators.push_back(MultiPoly::variable(r, i) - univariate(coordinates[i]));
  }
  return gb;
}

namespace {

using Vec = std::vector<Rational>;

// Linear algebra over the standard monomials of a zero-dimensional ideal. Normal forms of
// monomials are derived from the tails of the reduced basis: NF(lm(g)) = lm(g) - g, and any
// other nonstandard monomial u = x_w u' gives NF(u) = x_w NF(u'), expanded over smaller monomials.
class QuotientRing {
 public:
  explicit QuotientRing(const GroebnerBasis& gb, const ResourceLimits& limits)
      : gb_(gb), limits_(limits), basis_(quotient_basis(gb)) {
    for (std::size_t k = 0; k < basis_.monomials.size(); ++k) index_.emplace(basis_.monomials[k], k);
    for (std::size_t g = 0; g < gb.generators.size(); ++g) lead_.emplace(leading_monomial(gb.generators[g], gb.order), g);
  }

  std::size_t dimension() const { return basis_.dimension(); }

  Vec unit() const {
    Vec v(dimension(), Rational(0));
    v[index_.at(Exponents(gb_.roster.size(), 0))] = 1;
    return v;
  }

  const Vec& monomial_nf(const Exponents& u) {
    auto memo = nf_.find(u);
    if (memo != nf_.end()) return memo->second;
    Vec v(dimension(), Rational(0));
    if (auto it = index_.find(u); it != index_.end()) {
      v[it->second] = 1;
    } else if (auto lt = lead_.find(u); lt != lead_.end()) {
      for (const auto& [e, c] : gb_.generators[lt->second].terms()) {
        if (e != u) v[index_.at(e)] = -c;
      }
    } else {
      limits_.check_deadline();
      std::size_t w = 0;
      Exponents smaller;
      for (; w < u.size(); ++w) {
        if (u[w] == 0) continue;
        smaller = u;
        smaller[w] -= 1;
        if (!index_.count(smaller)) break;
      }
      if (w == u.size()) throw InternalError("nonstandard monomial with only standard divisors is not a leading monomial");
      const Vec inner = monomial_nf(smaller);
      for (std::size_t k = 0; k < inner.size(); ++k) {
        if (inner[k] == 0) continue;
        Exponents up = basis_.monomials[k];
        up[w] += 1;
        const Vec& part = monomial_nf(up);
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (part[i] != 0) v[i] += inner[k] * part[i];
        }
      }
    }
    return nf_.emplace(u, std::move(v)).first->second;
  }

  Vec coords(const MultiPoly& p) {
    Vec v(dimension(), Rational(0));
    const MultiPoly q = p.with_roster(gb_.roster);
    for (const auto& [e, c] : q.terms()) {
      const Vec& part = monomial_nf(e);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (part[i] != 0) v[i] += c * part[i];
      }
    }
    return v;
  }

  // (sum lambda_v x_v) * element
  Vec apply(std::span<const Rational> lambda, const Vec& v) {
    Vec out(dimension(), Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      for (std::size_t var = 0; var < lambda.size(); ++var) {
        if (lambda[var] == 0) continue;
        Exponents e = basis_.monomials[k];
        e[var] += 1;
        const Vec& part = monomial_nf(e);
        const Rational f = lambda[var] * v[k];
        for (std::size_t i = 0; i < out.size(); ++i) {
          if (part[i] != 0) out[i] += f * part[i];
        }
      }
    }
    return out;
  }

  // Echelon basis of Q[T]·1 built one power at a time. Each stored vector has a unit pivot and
  // carries the polynomial in T it represents, so reductions never see raw powers T^k·1.
  struct Krylov {
    struct Row {
      Vec vec;
      std::size_t pivot;
      UniPoly record;
    };
    UniPoly minpoly;
    std::vector<Row> rows;

    // Reduces v (with its record) against the rows; returns true when v becomes zero.
    bool reduce(Vec& v, UniPoly& record) const {
      for (const auto& row : rows) {
        const Rational c = v[row.pivot];
        if (c == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (row.vec[i] != 0) v[i] -= c * row.vec[i];
        }
        record -= row.record * c;
      }
      for (const auto& x : v)
        if (x != 0) return false;
      return true;
    }
  };

  Krylov krylov(std::span<const Rational> lambda) {
    Krylov k;
    Vec v = unit();
    UniPoly rec = UniPoly::constant(1);
    while (true) {
      limits_.check_deadline();
      if (k.reduce(v, rec)) {
        k.minpoly = rec.monic();
        return k;
      }
      std::size_t p = 0;
      while (v[p] == 0) ++p;
      const Rational inv = 1 / v[p];
      for (auto& x : v) x *= inv;
      rec *= inv;
      k.rows.push_back({v, p, rec});
      v = apply(lambda, k.rows.back().vec);
      rec = k.rows.back().record * UniPoly::identity();
    }
  }

 private:
  const GroebnerBasis& gb_;
  const ResourceLimits& limits_;
  QuotientBasis basis_;
  std::map<Exponents, std::size_t> index_;
  std::map<Exponents, std::size_t> lead_;
  std::map<Exponents, Vec> nf_;
};

MultiPoly univariate_in(const UniPoly& u, const Roster& roster, std::size_t var) {
  MultiPoly p(roster);
  for (int k = 0; k <= u.degree(); ++k) {
    Exponents e(roster.size(), 0);
    e[var] = static_cast<std::uint32_t>(k);
    p.add_term(e, u.coeff(k));
  }
  return p;
}

// Expresses the given variables as polynomials in T = lambda.x; empty when one of them is not
// a function of T in the quotient ring.
std::optional<std::vector<UniPoly>> coordinates_in_krylov(QuotientRing& ring, const QuotientRing::Krylov& kr,
                                                         const Roster& roster, std::span<const std::size_t> vars) {
  std::vector<UniPoly> out;
  for (auto v : vars) {
    Vec x = ring.coords(MultiPoly::variable(roster, v));
    UniPoly rec;
    if (!kr.reduce(x, rec)) return std::nullopt;
    out.push_back(-rec);
  }
  return out;
}

ShapeBasis shape_attempt(const GroebnerBasis& gb, std::span<const Rational> lambda, const ResourceLimits& limits,
                         std::span<const std::size_t> vars, bool allow_radical) {
  QuotientRing ring(gb, limits);
  const std::size_t d = ring.dimension();
  auto kr = ring.krylov(lambda);
  auto coords = coordinates_in_krylov(ring, kr, gb.roster, vars);
  if (!coords) {
    if (!allow_radical) throw NotShapeError("separating form takes equal values on distinct points");
    // Seidenberg: adding the squarefree parts of the univariate minimal polynomials yields the radical
    std::vector<MultiPoly> gens = gb.generators;
    bool changed = false;
    for (std::size_t v = 0; v < gb.roster.size(); ++v) {
      std::vector<Rational> e(gb.roster.size(), Rational(0));
      e[v] = 1;
      const UniPoly mp = ring.krylov(e).minpoly;
      const UniPoly sf = squarefree_part(mp);
      if (sf.degree() < mp.degree()) {
        gens.push_back(univariate_in(sf, gb.roster, v));
        changed = true;
      }
    }
    if (!changed) throw NotShapeError("separating form takes equal values on distinct points");
    const GroebnerBasis radical = buchberger(gens, gb.order, limits);
    ShapeBasis s = shape_attempt(radical, lambda, limits, vars, false);
    s.quotient_dimension = d;
    return s;
  }
  ShapeBasis s;
  for (auto v : vars) s.roster.push_back(gb.roster[v]);
  s.lambda.assign(lambda.begin(), lambda.end());
  s.quotient_dimension = d;
  s.eliminant = squarefree_part(kr.minpoly);
  s.coordinates = std::move(*coords);
  if (s.eliminant.degree() < kr.minpoly.degree()) {
    for (auto& c : s.coordinates) c = c % s.eliminant;
  }
  return s;
}

}  // namespace

ShapeBasis fglm_to_lex(const GroebnerBasis& gb, std::span<const Rational> lambda, const ResourceLimits& limits,
                       std::optional<std::vector<std::size_t>> vars) {
  if (lambda.size() != gb.roster.size()) throw std::invalid_argument("fglm_to_lex: lambda length differs from roster");
  std::vector<std::size_t> keep;
  if (vars) {
    keep = *vars;
    for (auto v : keep)
      if (v >= gb.roster.size()) throw std::invalid_argument("fglm_to_lex: variable index out of range");
  } else {
    for (std::size_t v = 0; v < gb.roster.size(); ++v) keep.push_back(v);
  }
  if (ideal_dimension(gb) != 0) throw std::domain_error("fglm_to_lex requires a zero-dimensional ideal");
  return shape_attempt(gb, lambda, limits, keep, true);
}

UniPoly minimal_polynomial(const GroebnerBasis& gb, std::span<const Rational> lambda) {
  ResourceLimits none;
  QuotientRing ring(gb, none);
  return ring.krylov(lambda).minpoly;
}

}  // namespace exactlmi
