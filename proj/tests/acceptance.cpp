// Acceptance run: one PASS/FAIL line per criterion. Optional arguments select criteria by number.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "exactlmi/bounds.hpp"
#include "exactlmi/driver.hpp"
#include "exactlmi/errors.hpp"
#include "exactlmi/feasibility.hpp"
#include "exactlmi/groebner.hpp"
#include "exactlmi/incidence.hpp"
#include "oracles.hpp"
#include "table_data.hpp"

using namespace exactlmi;

namespace {

// tolerances and budgets
constexpr double kThetaSeconds = 1.0;
const Rational kCoordinateTolerance(1, 1000000000);  // 1e-9
constexpr int kRefineDigits = 15;
constexpr int kSoundnessPencils = 20;
constexpr int kPsdPoints = 200;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SolverConfig base_config(Seed seed) {
  SolverConfig cfg;
  cfg.seed = seed;
  cfg.coeff_bound = 3;
  cfg.skip_isreg = true;
  cfg.check_invariants = true;
  return cfg;
}

SymmetricPencil load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pencil_json(ss.str());
}

// "-0.125" -> -1/8
Rational parse_decimal(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rational(s);
  const std::string frac = s.substr(dot + 1);
  Rational den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const bool neg = s[0] == '-';
  const Rational whole = abs(parse_rational(s.substr(0, dot)));
  const Rational v = whole + parse_rational(frac) / den;
  return neg ? -v : v;
}

struct Report {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

// Seeded degree runs shared by criteria 2, 3, 7 and 9.
struct DegreeRun {
  long m, r, n;
  LowRankResult res;
  SymmetricPencil p;
  Seed seed = 1;
  std::string error;
  double seconds = 0;
};

std::map<std::tuple<long, long, long>, DegreeRun>& degree_runs() {
  static std::map<std::tuple<long, long, long>, DegreeRun> runs;
  return runs;
}

const DegreeRun& degree_run(long m, long r, long n) {
  auto& runs = degree_runs();
  auto it = runs.find({m, r, n});
  if (it != runs.end()) return it->second;
  DegreeRun run{m, r, n, {}, random_pencil(m, n, 7, 3)};
  const auto t0 = Clock::now();
  // one redraw of the solver seed on a genericity failure
  for (Seed seed : {Seed(1), Seed(2)}) {
    run.seed = seed;
    try {
      run.res = low_rank_sym(run.p, r, base_config(seed));
      run.error.clear();
      break;
    } catch (const GenericityError& e) {
      run.error = e.what();
    } catch (const Error& e) {
      run.error = e.what();
      break;
    }
  }
  run.seconds = since(t0);
  return runs.emplace(std::tuple{m, r, n}, std::move(run)).first->second;
}

struct DegreeCase {
  long m, r, n;
  int deg;
};
constexpr DegreeCase kDegreeCases[] = {{3, 2, 2, 6}, {3, 2, 3, 4}, {4, 2, 3, 10}, {4, 3, 3, 16}, {5, 4, 2, 20}};

std::string triple(long m, long r, long n) {
  return "(" + std::to_string(m) + "," + std::to_string(r) + "," + std::to_string(n) + ")";
}

Report theta_table() {
  Report rep;
  const auto t0 = Clock::now();
  int matched = 0;
  for (const auto& row : table::rows) {
    const Integer got = theta(row.m, row.n, row.r);
    if (got == Integer(row.theta)) {
      ++matched;
    } else {
      rep.fail(triple(row.m, row.r, row.n) + " gave " + got.get_str());
    }
  }
  const double s = since(t0);
  if (s >= kThetaSeconds) rep.fail("took " + std::to_string(s) + " s");
  rep.note(std::to_string(matched) + "/" + std::to_string(std::size(table::rows)) + " rows in " + std::to_string(s) + " s");
  return rep;
}

Report output_degrees() {
  Report rep;
  for (const auto& c : kDegreeCases) {
    const auto& run = degree_run(c.m, c.r, c.n);
    const std::string name = triple(c.m, c.r, c.n);
    if (!run.error.empty()) {
      rep.fail(name + " " + run.error);
      continue;
    }
    const int got = run.res.levels.empty() ? 0 : run.res.levels.front().degree;
    if (got != c.deg) rep.fail(name + " deg " + std::to_string(got) + " != " + std::to_string(c.deg));
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s=%d (seed %llu, %.1fs)", name.c_str(), got,
                  static_cast<unsigned long long>(run.seed), run.seconds);
    rep.note(buf);
  }
  return rep;
}

Report total_degrees() {
  Report rep;
  for (const auto& [m, r, n, want] : {std::tuple{3L, 2L, 2L, 9}, std::tuple{3L, 2L, 3L, 13}}) {
    const auto& run = degree_run(m, r, n);
    if (!run.error.empty()) {
      rep.fail(triple(m, r, n) + " " + run.error);
      continue;
    }
    const int got = run.res.total_degree();
    if (got != want) rep.fail(triple(m, r, n) + " totaldeg " + std::to_string(got) + " != " + std::to_string(want));
    rep.note(triple(m, r, n) + " totaldeg=" + std::to_string(got));
  }
  return rep;
}

Report scheiderer() {
  Report rep;
  const char* expected[2][6] = {
      {"-0.930402926", "-1.000000000", "0.731299211", "-0.268700788", "0.930402926", "-0.930402926"},
      {"-0.127050844", "-1.000000000", "-0.967716166", "-1.967716166", "0.127050844", "-0.127050844"}};
  const auto p = load("fixtures/scheiderer.json");
  const auto t0 = Clock::now();
  const auto out = solve_lmi(p, base_config(1));
  if (out.kind != FeasibilityOutcome::Kind::Witness) {
    rep.fail(std::string("outcome ") + to_string(out.kind));
    return rep;
  }
  if (out.rank != 2) rep.fail("rank " + std::to_string(out.rank));
  if (out.rp.degree() != 3) rep.fail("deg qn1 " + std::to_string(out.rp.degree()));
  const auto roots = isolate_roots(out.rp.qn1);
  if (roots.size() != 3) rep.fail(std::to_string(roots.size()) + " real roots");
  if (out.accepted.size() != 2) rep.fail(std::to_string(out.accepted.size()) + " accepted roots");
  Rational worst = 0;
  for (const auto& root : out.accepted) {
    if (rank_at(p, out.rp, root) != 2) rep.fail("rank at an accepted root is not 2");
    const auto x = approximate_point(out.rp, root, kRefineDigits);
    // match against whichever published point is closest
    Rational best = -1;
    for (const auto& pt : expected) {
      Rational d = 0;
      for (std::size_t i = 0; i < 6; ++i) d = std::max<Rational>(d, abs(x[i] - parse_decimal(pt[i])));
      if (best < 0 || d < best) best = d;
    }
    worst = std::max(worst, best);
  }
  if (worst >= kCoordinateTolerance) rep.fail("max |delta| " + to_decimal(worst, 12));
  char buf[128];
  std::snprintf(buf, sizeof buf, "r=%zu deg=%d accepted=%zu max|delta|=%s in %.2fs", out.rank, out.rp.degree(),
                out.accepted.size(), to_decimal(worst, 12).c_str(), since(t0));
  rep.note(buf);
  return rep;
}

SymmetricPencil infeasible_pencil(Seed seed) {
  const auto block = random_pencil(2, 2, seed, 5);
  std::vector<QMatrix> mats;
  for (std::size_t k = 0; k <= 2; ++k) {
    QMatrix a(3, 3);
    if (k == 0) a(0, 0) = -1;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) a(i + 1, j + 1) = block[k](i, j);
    mats.push_back(a);
  }
  return SymmetricPencil(mats);
}

SymmetricPencil planted_pencil(Seed seed) {
  const auto base = random_pencil(3, 2, seed, 5);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  QMatrix a0 = QMatrix::identity(3);
  for (std::size_t k = 1; k <= 2; ++k) a0 -= base[k] * Rational(draw_integer(rng, -3, 3));
  return SymmetricPencil({a0, base[1], base[2]});
}

Report emptiness() {
  Report rep;
  int empty = 0, witnesses = 0, errors = 0;
  for (int s = 0; s < kSoundnessPencils; ++s) {
    try {
      if (solve_lmi(infeasible_pencil(100 + s), base_config(1)).kind == FeasibilityOutcome::Kind::Empty) ++empty;
      else rep.fail("infeasible seed " + std::to_string(100 + s) + " not empty");
    } catch (const Error& e) {
      rep.fail("infeasible seed " + std::to_string(100 + s) + ": " + e.what());
    }
  }
  for (int s = 0; s < kSoundnessPencils; ++s) {
    try {
      const auto out = solve_lmi(planted_pencil(200 + s), base_config(1));
      if (out.kind == FeasibilityOutcome::Kind::Empty) rep.fail("planted seed " + std::to_string(200 + s) + " empty");
      else ++witnesses;
    } catch (const GenericityError& e) {
      ++errors;
      rep.note("planted seed " + std::to_string(200 + s) + " raised " + e.what());
    }
  }
  rep.note(std::to_string(empty) + "/" + std::to_string(kSoundnessPencils) + " infeasible empty, " +
           std::to_string(witnesses) + "/" + std::to_string(kSoundnessPencils) + " planted found, " +
           std::to_string(errors) + " genericity errors");
  return rep;
}

Report redundancy_suite() {
  Report rep;
  int instances = 0;
  for (long m = 2; m <= 4; ++m)
    for (long r = 1; r < m; ++r)
      for (long n = 1; n <= 4; ++n) {
        const auto p = random_pencil(m, n, 300 + 10 * m + r + 100 * n, 5);
        const auto iotas = kernel_configurations(m, r);
        const auto& iota = iotas[static_cast<std::size_t>(n) % iotas.size()];
        const auto sys = reduce_redundancies(build_incidence(p, QMatrix::identity(n), iota));
        const long want = m * (m - r) + (m - r + 1) * (m - r) / 2;
        const std::string name = triple(m, r, n) + " " + iota.to_string();
        if (static_cast<long>(sys.polys_red.size()) != want) rep.fail(name + " |f_red| = " + std::to_string(sys.polys_red.size()));
        const auto gr = buchberger(sys.polys_red);
        const auto gf = buchberger(sys.polys_full);
        for (const auto& f : sys.polys_full)
          if (!reduces_to_zero(f, gr)) {
            rep.fail(name + " f not in <f_red>");
            break;
          }
        for (const auto& f : sys.polys_red)
          if (!reduces_to_zero(f, gf)) {
            rep.fail(name + " f_red not in <f>");
            break;
          }
        ++instances;
      }
  rep.note(std::to_string(instances) + " instances");
  return rep;
}

// every (r+1)-minor vanishes at every real point, decided by sign_at
bool minors_vanish(const SymmetricPencil& p, const RationalParametrization& rp, std::size_t r, std::size_t& roots) {
  if (rp.is_empty()) return true;
  const auto real_roots = isolate_roots(rp.qn1);
  roots += real_roots.size();
  for (const auto& f : minors(p.symbolic(x_roster(p.n())), r + 1, true)) {
    const UniPoly g = eval_homogenized(f, rp, static_cast<int>(r + 1));
    for (const auto& root : real_roots)
      if (sign_at(g, root) != 0) return false;
  }
  return true;
}

Report invariants() {
  Report rep;
  std::size_t roots = 0;
  for (const auto& c : kDegreeCases) {
    const auto& run = degree_run(c.m, c.r, c.n);
    if (!run.error.empty()) {
      rep.fail(triple(c.m, c.r, c.n) + " " + run.error);
      continue;
    }
    try {
      run.res.rp.check_invariants();
    } catch (const InternalError& e) {
      rep.fail(triple(c.m, c.r, c.n) + " " + e.what());
    }
    if (!minors_vanish(run.p, run.res.rp, static_cast<std::size_t>(c.r), roots))
      rep.fail(triple(c.m, c.r, c.n) + " minor nonzero at a root");
  }
  const auto p = load("fixtures/scheiderer.json");
  const auto out = solve_lmi(p, base_config(1));
  out.rp.check_invariants();
  if (!minors_vanish(p, out.rp, out.rank, roots)) rep.fail("scheiderer minor nonzero at a root");
  rep.note("checked after every set operation; " + std::to_string(roots) + " real roots evaluated");
  return rep;
}

Report oracles() {
  Report rep;
  int thetas = 0;
  for (long m = 2; m <= 6; ++m)
    for (long r = 1; r < m; ++r)
      for (long n = 1; n <= 9; ++n, ++thetas)
        if (theta(m, n, r) != oracle::theta(m, n, r)) rep.fail("theta " + triple(m, r, n));

  std::mt19937_64 rng(2024);
  int psd_agree = 0;
  for (int k = 0; k < kPsdPoints; ++k) {
    const std::size_t m = 1 + static_cast<std::size_t>(k % 4);
    const auto p = random_pencil(m, 2, 500 + k, 4);
    const std::vector<Rational> x{oracle::random_rational(rng, 3), oracle::random_rational(rng, 3)};
    // half the points are pushed onto PSD matrices by a Gram shift
    QMatrix a = p.eval(x);
    if (k % 2) {
      QMatrix b(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) b(i, j) = oracle::random_rational(rng, 3);
      a = b.transpose() * b;
    }
    bool ours = true;
    for (const auto& f : char_poly_coeffs(SymmetricPencil({a})).f) ours = ours && f.eval(std::vector<Rational>{}) >= 0;
    if (ours == oracle::is_psd(a)) ++psd_agree;
    else rep.fail("psd disagreement at point " + std::to_string(k));
  }

  int ranks = 0;
  for (int k = 0; k < 40; ++k) {
    const std::size_t m = 2 + static_cast<std::size_t>(k % 3);
    QMatrix b(static_cast<std::size_t>(k) % m, m);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < m; ++j) b(i, j) = oracle::random_rational(rng, 3);
    const QMatrix a = b.transpose() * b;
    const auto base = random_pencil(m, 1, 700 + k, 3);
    const Rational t = oracle::random_rational(rng, 3);
    const SymmetricPencil p({a - base[1] * t, base[1]});
    const auto rp = RationalParametrization::from_coordinates(UniPoly({-t, Rational(1)}), {UniPoly::identity()});
    if (rank_at(p, rp, isolate_roots(rp.qn1).front()) == rank(a)) ++ranks;
    else rep.fail("rank disagreement at sample " + std::to_string(k));
  }
  rep.note(std::to_string(thetas) + " theta values, " + std::to_string(psd_agree) + "/" + std::to_string(kPsdPoints) +
           " psd, " + std::to_string(ranks) + "/40 ranks");
  return rep;
}

Report bound_consistency() {
  Report rep;
  int entries = 0;
  for (const auto& c : kDegreeCases) {
    const auto& run = degree_run(c.m, c.r, c.n);
    if (!run.error.empty()) {
      rep.fail(triple(c.m, c.r, c.n) + " " + run.error);
      continue;
    }
    for (const auto& t : run.res.trace) {
      ++entries;
      if (Integer(t.degree) > theta(c.m, static_cast<long>(t.n), c.r))
        rep.fail(triple(c.m, c.r, c.n) + " chart " + t.iota + " degree " + std::to_string(t.degree));
    }
    if (Integer(run.res.total_degree()) > aggregate_bound(c.m, c.n, c.r))
      rep.fail(triple(c.m, c.r, c.n) + " total above aggregate");
  }
  const auto p = load("fixtures/scheiderer.json");
  const auto out = solve_lmi(p, base_config(1));
  for (const auto& t : out.trace) {
    ++entries;
    if (Integer(t.degree) > theta(static_cast<long>(p.m()), static_cast<long>(t.n), static_cast<long>(t.r)))
      rep.fail("scheiderer chart " + t.iota + " above theta");
  }
  // levels parametrized directly (finite determinantal set below the generic dimension count)
  // lie outside the generic bound and are reported, not compared
  long total = 0, direct = 0;
  for (const auto& l : out.levels) {
    if (l.level != 0) continue;
    if (l.direct) direct += l.degree;
    else total += l.degree;
  }
  if (Integer(total) > aggregate_bound(static_cast<long>(p.m()), static_cast<long>(p.n()), static_cast<long>(out.rank)))
    rep.fail("scheiderer total above aggregate");
  rep.note("scheiderer: critical-point total " + std::to_string(total) + ", direct-level degree " + std::to_string(direct) +
           " not compared");
  rep.note(std::to_string(entries) + " chart degrees checked");
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Report()>>> criteria = {
      {"theta table", theta_table},
      {"output degrees", output_degrees},
      {"total degrees", total_degrees},
      {"scheiderer witness", scheiderer},
      {"emptiness soundness", emptiness},
      {"redundancy elimination", redundancy_suite},
      {"parametrization invariants", invariants},
      {"oracle equivalence", oracles},
      {"bound consistency", bound_consistency},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!wanted.empty() && !wanted.count(id)) continue;
    Report rep;
    try {
      rep = criteria[i].second();
    } catch (const std::exception& e) {
      rep.fail(std::string("exception: ") + e.what());
    }
    failures += !rep.ok;
    std::printf("%s %d %s: %s\n", rep.ok ? "PASS" : "FAIL", id, criteria[i].first, rep.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
