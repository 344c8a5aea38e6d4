#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exactlmi/feasibility.hpp"
#include "exactlmi/groebner.hpp"
#include "exactlmi/ratpar.hpp"

namespace exactlmi {

struct SolverConfig {
  Seed seed = 0;
  long coeff_bound = 100;
  bool skip_isreg = false;
  /// 0 disables the wall-clock ceiling.
  double max_seconds = 0;
  std::size_t max_basis_size = 0;
  std::size_t max_coeff_bits = 0;
  int verbosity = 0;
  /// Re-verify the parametrization normal form after every set operation (InternalError on failure).
  bool check_invariants = false;

  void validate() const;
  ResourceLimits limits() const;
};

/// Critical points of one kernel chart at one recursion level (after the rank filter).
struct TraceEntry {
  std::size_t r = 0;
  std::size_t level = 0;
  std::size_t n = 0;
  std::string iota;
  int degree = 0;
  std::size_t critical_points = 0;
  double seconds = 0;
};

/// Union over all charts at one recursion level. direct marks a level where the
/// determinantal set itself was parametrized (or found empty) instead of critical points.
struct LevelEntry {
  std::size_t r = 0;
  std::size_t level = 0;
  std::size_t n = 0;
  int degree = 0;
  bool direct = false;
};

struct StageTimings {
  double isreg = 0;
  double lagrange = 0;
  double ratpar = 0;
  double project = 0;
  double check = 0;
};

struct LowRankResult {
  RationalParametrization rp;
  std::vector<TraceEntry> trace;
  std::vector<LevelEntry> levels;
  StageTimings timings;
  std::size_t retries = 0;

  /// Sum of the per-level degrees.
  int total_degree() const;
};

/// Finite set meeting every connected component of {x : rank A(x) <= r} in R^n; empty when
/// that set is empty. Throws GenericityError and TimeoutError.
LowRankResult low_rank_sym(const SymmetricPencil& p, std::size_t r, const SolverConfig& cfg);

/// The recursion without the regularity gate; depth only feeds the seeds.
LowRankResult low_rank_sym_rec(const SymmetricPencil& p, std::size_t r, const SolverConfig& cfg, std::size_t depth = 0);

struct FeasibilityOutcome {
  enum class Kind { Empty, LinearPoint, Witness };
  Kind kind = Kind::Empty;
  std::vector<Rational> point;  // LinearPoint
  RationalParametrization rp;   // Witness
  RealAlgebraicNumber root;     // Witness: first accepted root
  std::vector<RealAlgebraicNumber> accepted;
  std::size_t rank = 0;
  std::vector<TraceEntry> trace;
  std::vector<LevelEntry> levels;
  StageTimings timings;
};

const char* to_string(FeasibilityOutcome::Kind k);

FeasibilityOutcome solve_lmi(const SymmetricPencil& p, const SolverConfig& cfg);

std::string outcome_to_json(const FeasibilityOutcome& out, const SymmetricPencil& p, const SolverConfig& cfg,
                            int precision, bool with_timings);
std::string lowrank_to_json(const LowRankResult& res, std::size_t r, const SolverConfig& cfg, bool with_timings);

}  // namespace exactlmi
