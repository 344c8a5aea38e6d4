#include "exactlmi/incidence.hpp"

#include <sstream>
#include <stdexcept>

namespace exactlmi {

void KernelConfiguration::validate() const {
  if (r >= m || iota.size() != m - r) throw std::invalid_argument("kernel configuration must have m - r rows");
  for (std::size_t k = 0; k < iota.size(); ++k) {
    if (iota[k] >= m || (k > 0 && iota[k] <= iota[k - 1])) {
      throw std::invalid_argument("kernel configuration rows must be distinct, sorted and below m");
    }
  }
}

std::vector<std::size_t> KernelConfiguration::complement() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (k < iota.size() && iota[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::string KernelConfiguration::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < iota.size(); ++k) os << (k ? "," : "") << iota[k] + 1;
  os << '}';
  return os.str();
}

std::vector<KernelConfiguration> kernel_configurations(std::size_t m, std::size_t r) {
  std::vector<KernelConfiguration> out;
  for (auto& s : subsets(m, m - r)) out.push_back({m, r, s});
  return out;
}

IncidenceSystem build_incidence(const SymmetricPencil& p, const QMatrix& M, const KernelConfiguration& iota) {
  iota.validate();
  if (iota.m != p.m()) throw std::invalid_argument("build_incidence: configuration and pencil sizes differ");
  const SymmetricPencil b = change_of_variables(p, M);
  IncidenceSystem sys;
  sys.m = p.m();
  sys.n = p.n();
  sys.r = iota.r;
  sys.iota = iota;
  const std::size_t m = sys.m, n = sys.n, k = m - sys.r;
  sys.roster = x_roster(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) sys.roster.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  sys.c = m * k + static_cast<std::size_t>(binomial(static_cast<long>(k) + 1, 2).get_ui());
  sys.e = static_cast<std::size_t>(binomial(static_cast<long>(k), 2).get_ui());

  const PolyMatrix a = b.symbolic(sys.roster);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      MultiPoly entry(sys.roster);
      for (std::size_t l = 0; l < m; ++l) entry = entry + a(i, l) * MultiPoly::variable(sys.roster, sys.y_index(l, j));
      sys.polys_full.push_back(std::move(entry));
    }
  }
  for (std::size_t a_ = 0; a_ < k; ++a_) {
    for (std::size_t j = 0; j < k; ++j) {
      MultiPoly e = MultiPoly::variable(sys.roster, sys.y_index(iota.iota[a_], j));
      if (a_ == j) e = e - MultiPoly::constant(sys.roster, 1);
      sys.polys_full.push_back(std::move(e));
    }
  }
  return sys;
}

IncidenceSystem reduce_redundancies(IncidenceSystem sys) {
  const std::size_t m = sys.m, k = m - sys.r;
  // position of each row inside iota, or k when outside
  std::vector<std::size_t> pos(m, k);
  for (std::size_t a = 0; a < k; ++a) pos[sys.iota.iota[a]] = a;
  sys.polys_red.clear();
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (pos[i] < k && j > pos[i]) continue;
      sys.polys_red.push_back(sys.polys_full[j * m + i]);
    }
  }
  for (std::size_t q = m * k; q < sys.polys_full.size(); ++q) sys.polys_red.push_back(sys.polys_full[q]);
  return sys;
}

ReducedSystem substitute_kernel(const IncidenceSystem& sys) {
  const std::size_t m = sys.m, n = sys.n, k = m - sys.r;
  const auto kappa = sys.iota.complement();
  ReducedSystem out;
  out.n = n;
  out.roster = x_roster(n);
  for (auto i : kappa)
    for (std::size_t j = 0; j < k; ++j) out.roster.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  std::vector<MultiPoly> images;
  for (std::size_t v = 0; v < n; ++v) images.push_back(MultiPoly::variable(out.roster, v));
  std::vector<std::size_t> pos(m, k);
  for (std::size_t a = 0; a < k; ++a) pos[sys.iota.iota[a]] = a;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (pos[i] < k) {
        images.push_back(MultiPoly::constant(out.roster, pos[i] == j ? 1 : 0));
      } else {
        images.push_back(MultiPoly::variable(out.roster, sys.roster[sys.y_index(i, j)]));
      }
    }
  }
  for (std::size_t q = 0; q < m * k; ++q) {
    const std::size_t j = q / m, i = q % m;
    if (pos[i] < k && j > pos[i]) continue;
    out.polys.push_back(sys.polys_full[q].compose(images, out.roster));
  }
  return out;
}

const char* to_string(Regularity r) {
  switch (r) {
    case Regularity::Regular: return "regular";
    case Regularity::NotRegular: return "not-regular";
    case Regularity::Empty: return "empty";
  }
  return "unknown";
}

Regularity is_reg(const SymmetricPencil& p, const KernelConfiguration& iota, const ResourceLimits& limits) {
  const auto sys = reduce_redundancies(build_incidence(p, QMatrix::identity(p.n()), iota));
  const auto g = substitute_kernel(sys);
  const GroebnerBasis gb = buchberger(g.polys, MonomialOrder::grevlex(), limits);
  if (gb.is_unit()) return Regularity::Empty;
  const long expected = static_cast<long>(g.roster.size()) - static_cast<long>(g.polys.size());
  if (ideal_dimension(gb) != expected) return Regularity::NotRegular;
  const std::size_t nv = g.roster.size(), np = g.polys.size();
  if (np > nv) return Regularity::NotRegular;
  PolyMatrix jac{np, nv, {}};
  for (const auto& f : g.polys)
    for (std::size_t v = 0; v < nv; ++v) jac.entries.push_back(f.derivative(v));
  std::vector<MultiPoly> gens = g.polys;
  for (auto& mnr : minors(jac, np)) {
    if (!mnr.is_zero()) gens.push_back(std::move(mnr));
  }
  return buchberger(gens, MonomialOrder::grevlex(), limits).is_unit() ? Regularity::Regular : Regularity::NotRegular;
}

}  // namespace exactlmi
