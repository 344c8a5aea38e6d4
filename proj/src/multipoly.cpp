#include "exactlmi/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace exactlmi {

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t s = std::uint64_t{a[i]} + b[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("monomial exponent overflow");
    r[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

std::vector<std::size_t> roster_map(const Roster& from, const Roster& to) {
  std::vector<std::size_t> map(from.size(), to.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    if (it != to.end()) map[i] = static_cast<std::size_t>(it - to.begin());
  }
  return map;
}

}  // namespace

MultiPoly MultiPoly::constant(const Roster& roster, const Rational& c) {
  MultiPoly p(roster);
  p.add_term(Exponents(roster.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Roster& roster, std::size_t index) {
  if (index >= roster.size()) throw std::out_of_range("variable index out of range");
  MultiPoly p(roster);
  Exponents e(roster.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::variable(const Roster& roster, const std::string& name) {
  auto it = std::find(roster.begin(), roster.end(), name);
  if (it == roster.end()) throw std::invalid_argument("unknown variable " + name);
  return variable(roster, static_cast<std::size_t>(it - roster.begin()));
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != roster_.size()) throw std::invalid_argument("exponent vector length differs from roster size");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (auto x : e) s += x;
    d = std::max(d, static_cast<int>(s));
  }
  return d;
}

int MultiPoly::block_degree(std::span<const std::size_t> vars) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (auto v : vars) s += e[v];
    d = std::max(d, static_cast<int>(s));
  }
  return d;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(roster_.size(), 0)); }

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != roster_.size()) throw std::invalid_argument("evaluation point length differs from roster size");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(roster_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::with_roster(const Roster& target) const {
  if (target == roster_) return *this;
  const auto map = roster_map(roster_, target);
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] == target.size()) throw std::invalid_argument("variable " + roster_[i] + " missing from target roster");
      f[map[i]] = e[i];
    }
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images, const Roster& target) const {
  if (images.size() != roster_.size()) throw std::invalid_argument("compose needs one image per variable");
  std::vector<std::vector<MultiPoly>> powers(roster_.size());
  MultiPoly result(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(images[i].with_roster(target));
      while (pw.size() < e[i]) pw.push_back(pw.back() * pw.front());
      t = t * pw[e[i] - 1];
    }
    result = result + t;
  }
  return result;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Roster roster_union(const Roster& a, const Roster& b) {
  Roster r = a;
  for (const auto& v : b) {
    if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
  }
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return poly_arith(a, b, PolyOp::Add); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return poly_arith(a, b, PolyOp::Sub); }
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return poly_arith(a, b, PolyOp::Mul); }

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op) {
  if (p.roster() != q.roster()) {
    const Roster r = roster_union(p.roster(), q.roster());
    return poly_arith(p.with_roster(r), q.with_roster(r), op);
  }
  MultiPoly r(p.roster());
  switch (op) {
    case PolyOp::Add:
    case PolyOp::Sub: {
      r = p;
      for (const auto& [e, c] : q.terms()) r.add_term(e, op == PolyOp::Add ? Rational(c) : Rational(-c));
      break;
    }
    case PolyOp::Mul: {
      for (const auto& [e1, c1] : p.terms()) {
        for (const auto& [e2, c2] : q.terms()) r.add_term(add_exponents(e1, e2), c1 * c2);
      }
      break;
    }
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << roster_[i];
      if (e[i] > 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) {
      os << exactlmi::to_string(mag);
    } else if (mag == 1) {
      os << mono.str();
    } else {
      os << exactlmi::to_string(mag) << "*" << mono.str();
    }
  }
  return os.str();
}

UniPoly eval_mod(const MultiPoly& p, std::span<const UniPoly> h, const UniPoly& m) {
  if (h.size() != p.nvars()) throw std::invalid_argument("eval_mod needs one image per variable");
  std::vector<std::vector<UniPoly>> powers(h.size());
  UniPoly acc;
  for (const auto& [e, c] : p.terms()) {
    UniPoly t = UniPoly::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(h[i] % m);
      while (pw.size() < e[i]) pw.push_back(mul_mod(pw.back(), pw.front(), m));
      t = mul_mod(t, pw[e[i] - 1], m);
    }
    acc += t;
  }
  return acc % m;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

using Mask = std::uint64_t;

Mask to_mask(const std::vector<std::size_t>& s) {
  Mask m = 0;
  for (auto i : s) m |= Mask{1} << i;
  return m;
}

// All k x k minors with the given rows, keyed by column mask, via Laplace expansion
// along the last row with memoized lower-order minors.
std::unordered_map<Mask, MultiPoly> minors_for_rows(const PolyMatrix& a, const std::vector<std::size_t>& rows,
                                                    const Roster& roster) {
  const std::size_t k = rows.size();
  std::unordered_map<Mask, MultiPoly> prev;
  prev.emplace(0, MultiPoly::constant(roster, 1));
  for (std::size_t level = 1; level <= k; ++level) {
    std::unordered_map<Mask, MultiPoly> cur;
    const std::size_t row = rows[level - 1];
    for (const auto& cols : subsets(a.cols, level)) {
      MultiPoly det(roster);
      for (std::size_t idx = 0; idx < level; ++idx) {
        const MultiPoly& entry = a(row, cols[idx]);
        if (entry.is_zero()) continue;
        Mask sub = to_mask(cols) & ~(Mask{1} << cols[idx]);
        auto it = prev.find(sub);
        if (it == prev.end() || it->second.is_zero()) continue;
        MultiPoly term = entry * it->second;
        if ((level - 1 + idx) % 2 == 1) term = -term;
        det = det + term;
      }
      cur.emplace(to_mask(cols), std::move(det));
    }
    prev = std::move(cur);
  }
  return prev;
}

Roster matrix_roster(const PolyMatrix& a) {
  for (const auto& e : a.entries) {
    if (!e.roster().empty()) return e.roster();
  }
  return {};
}

}  // namespace

std::vector<MultiPoly> minors(const PolyMatrix& a, std::size_t k, bool symmetric) {
  if (a.cols > 64) throw std::invalid_argument("minors: at most 64 columns supported");
  std::vector<MultiPoly> out;
  if (k == 0 || k > a.rows || k > a.cols) return out;
  const Roster roster = matrix_roster(a);
  const auto col_sets = subsets(a.cols, k);
  for (const auto& rows : subsets(a.rows, k)) {
    auto table = minors_for_rows(a, rows, roster);
    for (const auto& cols : col_sets) {
      if (symmetric && cols < rows) continue;
      out.push_back(table.at(to_mask(cols)));
    }
  }
  return out;
}

MultiPoly determinant(const PolyMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows == 0) return MultiPoly::constant(matrix_roster(a), 1);
  return minors(a, a.rows).front();
}

}  // namespace exactlmi
