#include "exactlmi/driver.hpp"

#include <chrono>
#include <stdexcept>

#include "exactlmi/bounds.hpp"
#include "exactlmi/errors.hpp"
#include "exactlmi/incidence.hpp"
#include "exactlmi/lagrange.hpp"
#include "json.hpp"

namespace exactlmi {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// tags for derive_seed
constexpr std::uint64_t kSeedM = 'M';
constexpr std::uint64_t kSeedLambda = 'L';
constexpr std::uint64_t kSeedRatpar = 'R';
constexpr std::uint64_t kSeedFiber = 'T';
constexpr std::uint64_t kSeedShift = 'S';
constexpr std::uint64_t kSeedDirect = 'D';
constexpr std::uint64_t kSeedChart = 'C';

constexpr int kLambdaRedraws = 4;

std::vector<Rational> draw_lambda(std::size_t n, Seed seed, long bound) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> lam(n);
  for (auto& l : lam) l = draw_integer(rng, -bound, bound);
  return lam;
}

const RationalParametrization& checked(const RationalParametrization& rp, const SolverConfig& cfg) {
  if (cfg.check_invariants) rp.check_invariants();
  return rp;
}

std::size_t chart_threshold(std::size_t m, std::size_t r) { return (m - r + 1) * (m - r) / 2; }

// Too few variables for the generic dimension count: the determinantal set is expected to be
// empty. Zero-dimensional sets are parametrized directly.
LowRankResult small_dimension(const SymmetricPencil& p, std::size_t r, const SolverConfig& cfg, std::size_t depth) {
  LowRankResult out{RationalParametrization::empty(p.n()), {}, {}, {}, 0};
  const auto t0 = Clock::now();
  const std::size_t n = p.n();
  if (n == 0) {
    if (rank(p[0]) <= r) {
      out.rp = RationalParametrization::from_coordinates(UniPoly({Rational(0), Rational(1)}), {},
                                                         std::vector<Rational>{});
    }
    out.levels.push_back({r, depth, n, out.rp.degree(), true});
    return out;
  }
  const Roster roster = x_roster(n);
  std::vector<MultiPoly> gens;
  for (auto& mnr : minors(p.symbolic(roster), r + 1, true)) {
    if (!mnr.is_zero()) gens.push_back(std::move(mnr));
  }
  if (gens.empty()) {
    throw GenericityError(GenericityStage::Dimension, "every (" + std::to_string(r + 1) + ")-minor vanishes identically");
  }
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(), cfg.limits());
  const int dim = ideal_dimension(gb);
  if (dim < 0) {
    out.levels.push_back({r, depth, n, 0, true});
    return out;
  }
  if (dim > 0) {
    throw GenericityError(GenericityStage::Dimension,
                          "rank <= " + std::to_string(r) + " locus has dimension " + std::to_string(dim) + " with n = " +
                              std::to_string(n));
  }
  std::vector<Rational> lam;
  for (std::size_t i = 0; i < n; ++i) lam.emplace_back(static_cast<long>(i + 1));
  for (int attempt = 0; attempt < kLambdaRedraws; ++attempt) {
    if (attempt > 0) lam = draw_lambda(n, derive_seed(cfg.seed, depth, kSeedDirect, attempt), cfg.coeff_bound);
    try {
      const ShapeBasis s = fglm_to_lex(gb, lam, cfg.limits());
      out.rp = checked(RationalParametrization::from_coordinates(s.eliminant, s.coordinates, lam), cfg);
      out.levels.push_back({r, depth, n, out.rp.degree(), true});
      out.timings.ratpar += since(t0);
      return out;
    } catch (const NotShapeError&) {
    }
  }
  throw GenericityError(GenericityStage::Shape, "no separating linear form for the rank <= " + std::to_string(r) + " locus");
}

std::vector<Rational> transpose_apply(const QMatrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) out[j] += a(i, j) * v[i];
  return out;
}

// One recursion level for one choice of M and lambda: critical points of every chart,
// mapped back to the input coordinates and merged under the common label t = lambda.(M^-1 x).
struct LevelResult {
  RationalParametrization rp;
  std::vector<TraceEntry> trace;
};

LevelResult critical_points(const SymmetricPencil& p, std::size_t r, const SolverConfig& cfg, std::size_t depth,
                            std::size_t attempt, StageTimings& timings) {
  const std::size_t n = p.n();
  const QMatrix M = random_invertible(n, derive_seed(cfg.seed, depth, kSeedM, attempt), cfg.coeff_bound);
  const QMatrix Minv = inverse(M);
  std::vector<Rational> lam;
  for (std::size_t i = 0; i < n; ++i) lam.emplace_back(static_cast<long>(i + 1));
  if (attempt > 0) lam = draw_lambda(n, derive_seed(cfg.seed, depth, kSeedLambda, attempt << 8), cfg.coeff_bound);

  for (int redraw = 0; redraw < kLambdaRedraws; ++redraw) {
    LevelResult level{RationalParametrization::empty(n), {}};
    bool restart = false;
    for (const auto& iota : kernel_configurations(p.m(), r)) {
      auto t0 = Clock::now();
      const IncidenceSystem sys = reduce_redundancies(build_incidence(p, M, iota));
      std::mt19937_64 crng(derive_seed(cfg.seed, depth, kSeedChart, attempt));
      std::vector<Rational> chart(substitute_kernel(sys).polys.size());
      for (auto& c : chart) c = draw_integer(crng, 1, cfg.coeff_bound);
      const LagrangeSystem lag = build_lagrange(sys, chart);
      timings.lagrange += since(t0);
      t0 = Clock::now();
      const auto res = ratpar(lag, lam, derive_seed(cfg.seed, depth, kSeedRatpar, (attempt << 8) | redraw),
                              cfg.coeff_bound, cfg.limits());
      checked(res.rp, cfg);
      const double t_ratpar = since(t0);
      timings.ratpar += t_ratpar;
      if (res.rp.lambda && *res.rp.lambda != lam) {
        // ratpar had to change the form; every chart must share it
        lam = *res.rp.lambda;
        restart = true;
        break;
      }
      t0 = Clock::now();
      const RationalParametrization pr = checked(project(res.rp, p, M, r), cfg);
      RationalParametrization im = checked(image(pr, Minv), cfg);
      if (!im.is_empty()) im.lambda = transpose_apply(Minv, lam);
      timings.project += since(t0);
      level.trace.push_back({r, depth, n, iota.to_string(), pr.degree(), res.critical_points, t_ratpar});
      try {
        level.rp = checked(set_union(level.rp, im), cfg);
      } catch (const CollisionError&) {
        lam = draw_lambda(n, derive_seed(cfg.seed, depth, kSeedLambda, (attempt << 8) | (redraw + 1)), cfg.coeff_bound);
        restart = true;
        break;
      }
    }
    if (!restart) return level;
  }
  throw GenericityError(GenericityStage::Shape, "charts for rank " + std::to_string(r) + " at level " +
                                                    std::to_string(depth) + " keep colliding");
}

}  // namespace

void SolverConfig::validate() const {
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be at least 1");
  if (max_seconds < 0) throw std::invalid_argument("time limit must not be negative");
}

ResourceLimits SolverConfig::limits() const {
  ResourceLimits l = max_seconds > 0 ? ResourceLimits::with_seconds(max_seconds) : ResourceLimits{};
  l.max_basis_size = max_basis_size;
  l.max_coeff_bits = max_coeff_bits;
  return l;
}

int LowRankResult::total_degree() const {
  int d = 0;
  for (const auto& l : levels) d += l.degree;
  return d;
}

LowRankResult low_rank_sym_rec(const SymmetricPencil& p, std::size_t r, const SolverConfig& cfg, std::size_t depth) {
  if (r >= p.m()) throw std::invalid_argument("low_rank_sym: need r < m");
  const std::size_t n = p.n();
  if (n < chart_threshold(p.m(), r)) return small_dimension(p, r, cfg, depth);

  LowRankResult out{RationalParametrization::empty(n), {}, {}, {}, 0};
  LevelResult level;
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      level = critical_points(p, r, cfg, depth, attempt, out.timings);
      break;
    } catch (const GenericityError& e) {
      if (attempt >= 1 || e.stage() == GenericityStage::IsReg) throw;
      ++out.retries;
    }
  }
  out.trace = std::move(level.trace);
  out.levels.push_back({r, depth, n, level.rp.degree(), false});

  std::mt19937_64 rng(derive_seed(cfg.seed, depth, kSeedFiber));
  const Rational t(draw_integer(rng, -cfg.coeff_bound, cfg.coeff_bound));
  LowRankResult sub = low_rank_sym_rec(fix_first_variable(p, t), r, cfg, depth + 1);
  out.trace.insert(out.trace.end(), sub.trace.begin(), sub.trace.end());
  out.levels.insert(out.levels.end(), sub.levels.begin(), sub.levels.end());
  out.retries += sub.retries;
  out.timings.lagrange += sub.timings.lagrange;
  out.timings.ratpar += sub.timings.ratpar;
  out.timings.project += sub.timings.project;

  RationalParametrization lifted = checked(lift(sub.rp, t), cfg);
  std::mt19937_64 shift_rng(derive_seed(cfg.seed, depth, kSeedShift));
  for (int tries = 0;; ++tries) {
    try {
      out.rp = checked(set_union(level.rp, lifted), cfg);
      break;
    } catch (const CollisionError&) {
      if (tries >= kLambdaRedraws) throw GenericityError(GenericityStage::Shape, "lifted points collide with level labels");
      lifted = checked(shift_labels(lifted, Rational(draw_integer(shift_rng, 1, cfg.coeff_bound))), cfg);
    }
  }
  return out;
}

LowRankResult low_rank_sym(const SymmetricPencil& p, std::size_t r, const SolverConfig& cfg) {
  cfg.validate();
  if (r >= p.m()) throw std::invalid_argument("low_rank_sym: need r < m");
  if (p.n() >= chart_threshold(p.m(), r) && !cfg.skip_isreg) {
    const auto t0 = Clock::now();
    for (const auto& iota : kernel_configurations(p.m(), r)) {
      if (is_reg(p, iota, cfg.limits()) == Regularity::NotRegular) {
        throw GenericityError(GenericityStage::IsReg, "incidence chart " + iota.to_string() + " for rank " +
                                                          std::to_string(r) + " is not regular");
      }
    }
    auto res = low_rank_sym_rec(p, r, cfg, 0);
    res.timings.isreg = since(t0) - res.timings.lagrange - res.timings.ratpar - res.timings.project;
    return res;
  }
  return low_rank_sym_rec(p, r, cfg, 0);
}

const char* to_string(FeasibilityOutcome::Kind k) {
  switch (k) {
    case FeasibilityOutcome::Kind::Empty: return "empty";
    case FeasibilityOutcome::Kind::LinearPoint: return "linear_point";
    case FeasibilityOutcome::Kind::Witness: return "witness";
  }
  return "unknown";
}

FeasibilityOutcome solve_lmi(const SymmetricPencil& p, const SolverConfig& cfg) {
  cfg.validate();
  FeasibilityOutcome out;
  if (auto x = solve_linear(p)) {
    out.kind = FeasibilityOutcome::Kind::LinearPoint;
    out.point = std::move(*x);
    return out;
  }
  for (std::size_t r = 1; r < p.m(); ++r) {
    LowRankResult res = low_rank_sym(p, r, cfg);
    out.trace.insert(out.trace.end(), res.trace.begin(), res.trace.end());
    out.levels.insert(out.levels.end(), res.levels.begin(), res.levels.end());
    out.timings.isreg += res.timings.isreg;
    out.timings.lagrange += res.timings.lagrange;
    out.timings.ratpar += res.timings.ratpar;
    out.timings.project += res.timings.project;
    if (res.rp.is_empty()) continue;
    const auto t0 = Clock::now();
    const auto signs = check_lmi_all(p, res.rp);
    out.timings.check += since(t0);
    for (const auto& s : signs) {
      if (s.accepted) out.accepted.push_back(s.root);
    }
    if (out.accepted.empty()) continue;
    out.kind = FeasibilityOutcome::Kind::Witness;
    out.rp = std::move(res.rp);
    out.root = out.accepted.front();
    out.rank = rank_at(p, out.rp, out.root);
    if (out.rank != r) {
      throw InternalError("witness has rank " + std::to_string(out.rank) + " but was found at rank " + std::to_string(r));
    }
    return out;
  }
  return out;
}

namespace {

nlohmann::json trace_json(const std::vector<TraceEntry>& trace, bool with_timings) {
  auto arr = nlohmann::json::array();
  for (const auto& t : trace) {
    nlohmann::json e = {{"r", t.r},           {"level", t.level},   {"n", t.n},
                        {"iota", t.iota},     {"degree", t.degree}, {"critical_points", t.critical_points}};
    if (with_timings) e["seconds"] = t.seconds;
    arr.push_back(std::move(e));
  }
  return arr;
}

nlohmann::json levels_json(const std::vector<LevelEntry>& levels) {
  auto arr = nlohmann::json::array();
  for (const auto& l : levels)
    arr.push_back({{"r", l.r}, {"level", l.level}, {"n", l.n}, {"degree", l.degree}, {"direct", l.direct}});
  return arr;
}

nlohmann::json timings_json(const StageTimings& t) {
  return {{"isreg", t.isreg}, {"lagrange", t.lagrange}, {"ratpar", t.ratpar}, {"project", t.project}, {"check", t.check}};
}

nlohmann::json root_json(const RealAlgebraicNumber& a) { return {{"lo", to_string(a.lo)}, {"hi", to_string(a.hi)}}; }

}  // namespace

std::string outcome_to_json(const FeasibilityOutcome& out, const SymmetricPencil& p, const SolverConfig& cfg,
                            int precision, bool with_timings) {
  nlohmann::json j;
  j["outcome"] = to_string(out.kind);
  j["seed"] = cfg.seed;
  j["m"] = p.m();
  j["n"] = p.n();
  if (out.kind == FeasibilityOutcome::Kind::LinearPoint) {
    auto pt = nlohmann::json::array();
    for (const auto& x : out.point) pt.push_back(to_string(x));
    j["point"] = pt;
    j["rank"] = 0;
  }
  if (out.kind == FeasibilityOutcome::Kind::Witness) {
    j["rank"] = out.rank;
    j["parametrization"] = nlohmann::json::parse(ratpar_to_json(out.rp));
    j["root"] = root_json(out.root);
    auto acc = nlohmann::json::array();
    for (const auto& a : out.accepted) {
      auto pt = nlohmann::json::array();
      for (const auto& x : approximate_point(out.rp, a, precision)) pt.push_back(to_decimal(x, precision));
      acc.push_back({{"root", root_json(a)}, {"point", pt}});
    }
    j["accepted"] = acc;
  }
  j["levels"] = levels_json(out.levels);
  j["trace"] = trace_json(out.trace, with_timings);
  if (with_timings) j["timings"] = timings_json(out.timings);
  return j.dump(2);
}

std::string lowrank_to_json(const LowRankResult& res, std::size_t r, const SolverConfig& cfg, bool with_timings) {
  nlohmann::json j;
  j["outcome"] = res.rp.is_empty() ? "empty" : "parametrization";
  j["seed"] = cfg.seed;
  j["r"] = r;
  j["degree"] = res.rp.degree();
  j["total_degree"] = res.total_degree();
  j["parametrization"] = nlohmann::json::parse(ratpar_to_json(res.rp));
  j["levels"] = levels_json(res.levels);
  j["trace"] = trace_json(res.trace, with_timings);
  if (with_timings) j["timings"] = timings_json(res.timings);
  return j.dump(2);
}

}  // namespace exactlmi
