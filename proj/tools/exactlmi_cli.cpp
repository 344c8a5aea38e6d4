// Command-line front end: solve, lowrank, bound, check, random.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "exactlmi/bounds.hpp"
#include "exactlmi/driver.hpp"
#include "exactlmi/errors.hpp"
#include "json.hpp"

using namespace exactlmi;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitTimeout = 4;
constexpr int kExitInternal = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  Seed seed = 0;
  long coeff_bound = 100;
  bool skip_isreg = false;
  bool json = false;
  bool deterministic = false;
  double max_seconds = 0;
  int precision = 9;

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.coeff_bound = coeff_bound;
    cfg.skip_isreg = skip_isreg;
    cfg.max_seconds = max_seconds;
    return cfg;
  }
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "root seed for every random choice");
  cmd->add_option("--coeff-bound", o.coeff_bound, "entries of M, lambda and fibers are drawn from [-N, N]")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--skip-isreg", o.skip_isreg, "skip the regularity check of the incidence varieties");
  cmd->add_flag("--json", o.json, "structured output");
  cmd->add_flag("--deterministic", o.deterministic, "leave timings out of the output");
  cmd->add_option("--max-seconds", o.max_seconds, "wall-clock ceiling (0 = none)");
  cmd->add_option("--precision", o.precision, "decimal digits for approximate coordinates")->check(CLI::Range(1, 1000));
}

void print_point(std::ostream& os, const std::vector<Rational>& x, int precision) {
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << to_decimal(x[i], precision);
  os << ")";
}

int run_solve(const std::string& file, const Options& o) {
  const SymmetricPencil p = parse_pencil_json(read_file(file));
  const SolverConfig cfg = o.config();
  const FeasibilityOutcome out = solve_lmi(p, cfg);
  if (o.json) {
    std::cout << outcome_to_json(out, p, cfg, o.precision, !o.deterministic) << "\n";
    return 0;
  }
  switch (out.kind) {
    case FeasibilityOutcome::Kind::Empty:
      std::cout << "the spectrahedron is empty\n";
      break;
    case FeasibilityOutcome::Kind::LinearPoint:
      std::cout << "A(x) = 0 at x = (";
      for (std::size_t i = 0; i < out.point.size(); ++i) std::cout << (i ? ", " : "") << to_string(out.point[i]);
      std::cout << ")\n";
      break;
    case FeasibilityOutcome::Kind::Witness: {
      std::cout << "feasible; minimal rank " << out.rank << "\n";
      std::cout << "qn1(t) = " << out.rp.qn1.to_string() << "\n";
      std::cout << "q0(t)  = " << out.rp.q0.to_string() << "\n";
      for (std::size_t i = 0; i < out.rp.n; ++i) std::cout << "q" << i + 1 << "(t)  = " << out.rp.qi[i].to_string() << "\n";
      std::cout << out.accepted.size() << " of " << out.rp.degree() << " points satisfy A(x) >= 0\n";
      for (const auto& a : out.accepted) {
        std::cout << "  t in [" << to_string(a.lo) << ", " << to_string(a.hi) << "], x ~ ";
        print_point(std::cout, approximate_point(out.rp, a, o.precision), o.precision);
        std::cout << "\n";
      }
      break;
    }
  }
  return 0;
}

int run_lowrank(const std::string& file, std::size_t r, const Options& o) {
  const SymmetricPencil p = parse_pencil_json(read_file(file));
  const SolverConfig cfg = o.config();
  const LowRankResult res = low_rank_sym(p, r, cfg);
  if (o.json) {
    std::cout << lowrank_to_json(res, r, cfg, !o.deterministic) << "\n";
    return 0;
  }
  if (res.rp.is_empty()) {
    std::cout << "no real point of rank <= " << r << "\n";
  } else {
    std::cout << "degree " << res.rp.degree() << " parametrization\n";
    std::cout << "qn1(t) = " << res.rp.qn1.to_string() << "\n";
  }
  for (const auto& l : res.levels) std::cout << "  n = " << l.n << ": degree " << l.degree << (l.direct ? " (direct)" : "") << "\n";
  std::cout << "total degree " << res.total_degree() << "\n";
  return 0;
}

int run_bound(long m, long n, long r, const Options& o) {
  const BoundReport rep = bound_report(m, n, r);
  if (o.json) {
    nlohmann::json j = {{"m", rep.m}, {"n", rep.n}, {"r", rep.r}, {"p_r", rep.p_r}, {"index_set", rep.index_set},
                        {"theta", to_string(rep.theta)}, {"cube_bound", to_string(rep.cube_bound)}};
    if (r >= 1) j["aggregate"] = to_string(aggregate_bound(m, n, r));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "theta " << rep.theta << "\n";
  std::cout << "p_r " << rep.p_r << "\n";
  std::cout << "binom(p_r+n, n)^3 " << rep.cube_bound << "\n";
  if (r >= 1) std::cout << "aggregate over r' <= " << r << " " << aggregate_bound(m, n, r) << "\n";
  return 0;
}

int run_check(const std::string& pencil_file, const std::string& rp_file, const Options& o) {
  const SymmetricPencil p = parse_pencil_json(read_file(pencil_file));
  std::string text = read_file(rp_file);
  // accept the output of `lowrank --json` as well as a bare parametrization
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.is_object() && j.contains("parametrization")) text = j["parametrization"].dump();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const RationalParametrization rp = ratpar_from_json(text);
  if (rp.n != p.n()) throw ParseError("parametrization and pencil have different numbers of variables");
  const auto roots = check_lmi_all(p, rp);
  std::size_t accepted = 0;
  for (const auto& s : roots) accepted += s.accepted;
  if (o.json) {
    nlohmann::json j;
    j["accepted"] = accepted;
    j["real_roots"] = roots.size();
    j["roots"] = nlohmann::json::array();
    for (const auto& s : roots) {
      nlohmann::json e = {{"lo", to_string(s.root.lo)}, {"hi", to_string(s.root.hi)}, {"signs", s.signs}, {"accepted", s.accepted}};
      if (s.accepted) e["rank"] = rank_at(p, rp, s.root);
      j["roots"].push_back(std::move(e));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << roots.size() << " real points, " << accepted << " with A(x) >= 0\n";
  for (const auto& s : roots) {
    std::cout << "  t in [" << to_string(s.root.lo) << ", " << to_string(s.root.hi) << "] "
              << (s.accepted ? "accepted, rank " + std::to_string(rank_at(p, rp, s.root)) : std::string("rejected")) << "\n";
  }
  return 0;
}

int run_random(std::size_t m, std::size_t n, Seed seed, long bound, const std::string& out) {
  const std::string text = pencil_to_json(random_pencil(m, n, seed, bound));
  if (out.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot write " + out);
  f << text << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact feasibility certificates for linear matrix inequalities"};
  app.require_subcommand(1);
  Options o;

  std::string file, rp_file, out_file;
  std::size_t r = 1;
  long bm = 0, bn = 0, br = 0;
  std::size_t rm = 0, rn = 0;
  long rbound = 10;

  auto* solve = app.add_subcommand("solve", "decide whether A(x) >= 0 has a solution");
  solve->add_option("file", file, "pencil JSON")->required()->check(CLI::ExistingFile);
  add_common(solve, o);

  auto* lowrank = app.add_subcommand("lowrank", "sample the real points where rank A(x) <= r");
  lowrank->add_option("file", file, "pencil JSON")->required()->check(CLI::ExistingFile);
  lowrank->add_option("--r", r, "rank bound")->required();
  add_common(lowrank, o);

  auto* bound = app.add_subcommand("bound", "degree bounds for dense pencils");
  bound->add_option("--m", bm)->required();
  bound->add_option("--n", bn)->required();
  bound->add_option("--r", br)->required();
  bound->add_flag("--json", o.json);

  auto* check = app.add_subcommand("check", "test a parametrization against A(x) >= 0");
  check->add_option("pencil", file, "pencil JSON")->required()->check(CLI::ExistingFile);
  check->add_option("parametrization", rp_file, "parametrization JSON")->required()->check(CLI::ExistingFile);
  add_common(check, o);

  auto* random = app.add_subcommand("random", "write a seeded random pencil");
  random->add_option("--m", rm)->required();
  random->add_option("--n", rn)->required();
  random->add_option("--seed", o.seed);
  random->add_option("--bound", rbound)->check(CLI::PositiveNumber);
  random->add_option("--out", out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*solve) return run_solve(file, o);
    if (*lowrank) return run_lowrank(file, r, o);
    if (*bound) return run_bound(bm, bn, br, o);
    if (*check) return run_check(file, rp_file, o);
    if (*random) return run_random(rm, rn, o.seed, rbound, out_file);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const GenericityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGenericity;
  } catch (const TimeoutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
