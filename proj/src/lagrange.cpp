#include "exactlmi/lagrange.hpp"

#include <span>
#include <stdexcept>

#include "exactlmi/errors.hpp"

namespace exactlmi {

LagrangeSystem build_lagrange(const IncidenceSystem& sys, std::span<const Rational> chart) {
  if (sys.polys_red.empty()) throw std::invalid_argument("build_lagrange: reduce the incidence system first");
  const ReducedSystem g = substitute_kernel(sys);
  if (!chart.empty() && chart.size() != g.polys.size()) throw std::invalid_argument("build_lagrange: chart size differs from p_r");
  LagrangeSystem lag;
  lag.n = sys.n;
  lag.ny = g.roster.size() - sys.n;
  lag.p_r = g.polys.size();
  lag.iota = sys.iota;
  lag.roster = g.roster;
  for (std::size_t k = 2; k <= lag.p_r; ++k) lag.roster.push_back("z" + std::to_string(k));
  for (const auto& f : g.polys) lag.polys.push_back(f.with_roster(lag.roster));
  const std::size_t nv = g.roster.size();
  // multipliers: z1 = (1 - c2 z2 - ... - cp zp) / c1
  const Rational c1 = chart.empty() ? Rational(1) : chart[0];
  if (c1 == 0) throw std::invalid_argument("build_lagrange: the first chart entry must be nonzero");
  std::vector<MultiPoly> z;
  MultiPoly z1 = MultiPoly::constant(lag.roster, 1);
  for (std::size_t k = 1; k < lag.p_r; ++k) {
    z.push_back(MultiPoly::variable(lag.roster, nv + k - 1));
    z1 = z1 - z.back() * (chart.empty() ? Rational(1) : chart[k]);
  }
  z.insert(z.begin(), z1 * (1 / c1));
  for (std::size_t v = 1; v < nv; ++v) {
    MultiPoly row(lag.roster);
    for (std::size_t k = 0; k < lag.p_r; ++k) {
      MultiPoly d = g.polys[k].derivative(v).with_roster(lag.roster);
      if (!d.is_zero()) row = row + d * z[k];
    }
    lag.polys.push_back(std::move(row));
  }
  // multipliers first and x1 last: the smaller-x convention keeps the Groebner computation cheap
  Roster rev(lag.roster.rbegin(), lag.roster.rend());
  for (auto& f : lag.polys) f = f.with_roster(rev);
  lag.roster = std::move(rev);
  return lag;
}

FullLagrangeSystem build_full_lagrange(const IncidenceSystem& sys) {
  FullLagrangeSystem out;
  out.n = sys.n;
  const std::size_t nxy = sys.roster.size();
  const std::size_t nz = sys.polys_full.size();
  for (std::size_t v = sys.n; v < nxy; ++v) out.roster.push_back(sys.roster[v]);
  for (std::size_t k = 1; k <= nz; ++k) out.roster.push_back("z" + std::to_string(k));
  for (std::size_t v = 0; v < sys.n; ++v) out.roster.push_back(sys.roster[v]);
  for (const auto& f : sys.polys_full) out.polys.push_back(f.with_roster(out.roster));
  const std::size_t zoff = nxy - sys.n;
  for (std::size_t v = 0; v < nxy; ++v) {
    MultiPoly row(out.roster);
    for (std::size_t k = 0; k < nz; ++k) {
      MultiPoly d = sys.polys_full[k].derivative(v).with_roster(out.roster);
      if (!d.is_zero()) row = row + d * MultiPoly::variable(out.roster, zoff + k);
    }
    if (v == 0) row = row - MultiPoly::constant(out.roster, 1);
    out.polys.push_back(std::move(row));
  }
  return out;
}

namespace {

// x-part of a zero-dimensional or elimination ideal: the squarefree minimal polynomial of a
// linear form on x and the coordinate images.
std::vector<Rational> default_lambda(std::size_t n) {
  std::vector<Rational> l;
  for (std::size_t i = 1; i <= n; ++i) l.emplace_back(static_cast<long>(i));
  return l;
}

}  // namespace

CrossCheck verify_full_vs_simplified(const IncidenceSystem& sys, const LagrangeSystem& lag,
                                     const ResourceLimits& limits) {
  CrossCheck out;
  const std::size_t n = sys.n;
  const auto lam = default_lambda(n);

  // simplified: x-points through a shape basis
  const GroebnerBasis gs = buchberger(lag.polys, MonomialOrder::grevlex(), limits);
  std::vector<UniPoly> xs;
  UniPoly qs = UniPoly::constant(1);
  if (!gs.is_unit()) {
    if (ideal_dimension(gs) != 0) {
      out.detail = "simplified system is not zero-dimensional";
      return out;
    }
    std::vector<Rational> full_lam(lag.nvars(), Rational(0));
    std::vector<std::size_t> xv;
    for (std::size_t i = 0; i < n; ++i) {
      full_lam[lag.x_var(i)] = lam[i];
      xv.push_back(lag.x_var(i));
    }
    const ShapeBasis s = fglm_to_lex(gs, full_lam, limits, xv);
    qs = s.eliminant;
    xs = s.coordinates;
  }
  out.simplified_points = static_cast<std::size_t>(qs.degree());

  // full: eliminate (y, z)
  const FullLagrangeSystem full = build_full_lagrange(sys);
  const std::size_t nyz = full.roster.size() - n;
  const GroebnerBasis gf = buchberger(full.polys, MonomialOrder::block_grevlex(nyz), limits);
  Roster xr(full.roster.begin() + static_cast<long>(nyz), full.roster.end());
  std::vector<MultiPoly> elim;
  for (const auto& g : gf.generators) {
    bool x_only = true;
    for (const auto& [e, c] : g.terms())
      for (std::size_t v = 0; v < nyz && x_only; ++v) x_only = e[v] == 0;
    if (x_only) elim.push_back(g.with_roster(xr));
  }
  if (gf.is_unit()) {
    out.full_points = 0;
  } else {
    const GroebnerBasis ge = buchberger(elim, MonomialOrder::grevlex(), limits);
    if (ideal_dimension(ge) != 0) {
      out.detail = "projection of the full system is not finite";
      return out;
    }
    out.full_points = static_cast<std::size_t>(squarefree_part(minimal_polynomial(ge, lam)).degree());
    // every simplified point must lie on the projection of the full system
    for (const auto& g : elim) {
      if (!xs.empty() && !eval_mod(g, xs, qs).is_zero()) {
        out.detail = "a simplified critical point is not a critical point of the full system";
        return out;
      }
    }
  }
  out.agree = out.full_points == out.simplified_points;
  if (!out.agree) {
    out.detail = "point counts differ: " + std::to_string(out.simplified_points) + " vs " + std::to_string(out.full_points);
  }
  return out;
}

}  // namespace exactlmi
