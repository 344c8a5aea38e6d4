#pragma once

#include <span>

#include "exactlmi/incidence.hpp"

namespace exactlmi {

/// Critical points of x1 on the incidence variety after the kernel substitution:
/// g = 0 and z^T jac g = 0 outside the x1 column, with the multipliers normalized by c.z = 1
/// for a chart vector c (z1 is eliminated through that relation).
struct LagrangeSystem {
  /// z_p..z2, the free y variables in reverse, then xn..x1.
  Roster roster;
  std::vector<MultiPoly> polys;
  std::size_t n = 0;
  std::size_t ny = 0;
  std::size_t p_r = 0;
  KernelConfiguration iota;

  std::size_t nvars() const { return roster.size(); }
  /// Roster position of x_{i+1}.
  std::size_t x_var(std::size_t i) const { return roster.size() - 1 - i; }
};

/// chart: the vector c, with c1 != 0 (all ones when empty). Any c off a hyperplane arrangement
/// gives the same critical points at regular points.
LagrangeSystem build_lagrange(const IncidenceSystem& sys, std::span<const Rational> chart = {});

/// The unsimplified system (f, z^T jac f - (e1^T, 0)) over y, z and then x, so that an
/// elimination order on the first block projects onto x.
struct FullLagrangeSystem {
  Roster roster;
  std::vector<MultiPoly> polys;
  std::size_t n = 0;
};

FullLagrangeSystem build_full_lagrange(const IncidenceSystem& sys);

struct CrossCheck {
  bool agree = false;
  /// Distinct x-points found by each system.
  std::size_t simplified_points = 0;
  std::size_t full_points = 0;
  std::string detail;
};

/// Compares the x-projections of the simplified and full critical-point systems.
CrossCheck verify_full_vs_simplified(const IncidenceSystem& sys, const LagrangeSystem& lag,
                                     const ResourceLimits& limits = {});

}  // namespace exactlmi
