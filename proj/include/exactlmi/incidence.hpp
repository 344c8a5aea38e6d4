#pragma once

#include <vector>

#include "exactlmi/groebner.hpp"
#include "exactlmi/pencil.hpp"

namespace exactlmi {

/// Rows of the kernel matrix pinned to the identity. Indices are 0-based and sorted.
struct KernelConfiguration {
  std::size_t m = 0;
  std::size_t r = 0;
  std::vector<std::size_t> iota;

  /// Throws std::invalid_argument unless |iota| = m - r with distinct sorted entries below m.
  void validate() const;
  /// Rows not in iota, ascending.
  std::vector<std::size_t> complement() const;
  std::string to_string() const;
};

/// All configurations for (m, r) in lexicographic order.
std::vector<KernelConfiguration> kernel_configurations(std::size_t m, std::size_t r);

struct IncidenceSystem {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  KernelConfiguration iota;
  /// x1..xn followed by y_{i,j} row-major (i < m, j < m - r).
  Roster roster;
  /// Entries of A(Mx) Y(y) column-major, then Y_iota - I row-major.
  std::vector<MultiPoly> polys_full;
  /// Subsystem generating the same ideal, of size c.
  std::vector<MultiPoly> polys_red;
  std::size_t c = 0;
  std::size_t e = 0;

  std::size_t y_index(std::size_t i, std::size_t j) const { return n + i * (m - r) + j; }
};

IncidenceSystem build_incidence(const SymmetricPencil& p, const QMatrix& M, const KernelConfiguration& iota);

/// Fills polys_red.
IncidenceSystem reduce_redundancies(IncidenceSystem sys);

/// The p_r equations left after substituting Y_iota = I, over x1..xn and the y rows outside iota.
struct ReducedSystem {
  Roster roster;
  std::vector<MultiPoly> polys;
  std::size_t n = 0;
};

ReducedSystem substitute_kernel(const IncidenceSystem& sys);

enum class Regularity { Regular, NotRegular, Empty };

const char* to_string(Regularity r);

Regularity is_reg(const SymmetricPencil& p, const KernelConfiguration& iota, const ResourceLimits& limits = {});

}  // namespace exactlmi
