#include "exactlmi/pencil.hpp"

#include "json.hpp"
#include <stdexcept>

#include "exactlmi/errors.hpp"

namespace exactlmi {

SymmetricPencil::SymmetricPencil(std::vector<QMatrix> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) throw std::invalid_argument("pencil needs at least the constant matrix");
  m_ = mats_.front().rows();
  for (const auto& a : mats_) {
    if (a.rows() != m_ || a.cols() != m_) throw std::invalid_argument("pencil matrices must all be m x m");
    if (!a.is_symmetric()) throw std::invalid_argument("pencil matrix is not symmetric");
  }
}

QMatrix SymmetricPencil::eval(const std::vector<Rational>& x) const {
  if (x.size() != n()) throw std::invalid_argument("pencil_eval: point has the wrong length");
  QMatrix out = mats_.front();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) out += mats_[i + 1] * x[i];
  }
  return out;
}

PolyMatrix SymmetricPencil::symbolic(const Roster& roster) const {
  PolyMatrix a{m_, m_, std::vector<MultiPoly>(m_ * m_, MultiPoly(roster))};
  const std::size_t nv = roster.size();
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      MultiPoly& e = a(i, j);
      e.add_term(Exponents(nv, 0), mats_[0](i, j));
      for (std::size_t k = 1; k < mats_.size(); ++k) {
        Exponents ex(nv, 0);
        ex[k - 1] = 1;
        e.add_term(ex, mats_[k](i, j));
      }
    }
  }
  return a;
}

SymmetricPencil change_of_variables(const SymmetricPencil& p, const QMatrix& M) {
  const std::size_t n = p.n();
  if (M.rows() != n || M.cols() != n) throw std::invalid_argument("change_of_variables: M must be n x n");
  if (rank(M) != n) throw std::domain_error("change_of_variables: singular matrix");
  std::vector<QMatrix> mats{p[0]};
  for (std::size_t j = 0; j < n; ++j) {
    QMatrix b(p.m(), p.m());
    for (std::size_t i = 0; i < n; ++i) {
      if (M(i, j) != 0) b += p[i + 1] * M(i, j);
    }
    mats.push_back(std::move(b));
  }
  return SymmetricPencil(std::move(mats));
}

SymmetricPencil fix_first_variable(const SymmetricPencil& p, const Rational& t) {
  if (p.n() == 0) throw std::invalid_argument("fix_first_variable: pencil has no variables");
  std::vector<QMatrix> mats{p[0] + p[1] * t};
  for (std::size_t i = 2; i <= p.n(); ++i) mats.push_back(p[i]);
  return SymmetricPencil(std::move(mats));
}

long draw_integer(std::mt19937_64& rng, long lo, long hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % range);
}

SymmetricPencil random_pencil(std::size_t m, std::size_t n, Seed seed, long bound) {
  if (bound < 1) throw std::invalid_argument("random_pencil: bound must be positive");
  std::mt19937_64 rng(seed);
  std::vector<QMatrix> mats;
  for (std::size_t k = 0; k <= n; ++k) {
    QMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        const long num = draw_integer(rng, -bound, bound);
        const long den = draw_integer(rng, 1, bound);
        Rational q(num, den);
        q.canonicalize();
        a(i, j) = q;
        a(j, i) = q;
      }
    }
    mats.push_back(std::move(a));
  }
  return SymmetricPencil(std::move(mats));
}

QMatrix random_invertible(std::size_t n, Seed seed, long bound) {
  if (n == 0) return QMatrix(0, 0);
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, 0, 0x4d, attempt));
    QMatrix a(n, n);
    for (auto i = 0u; i < n; ++i)
      for (auto j = 0u; j < n; ++j) a(i, j) = draw_integer(rng, -bound, bound);
    if (rank(a) == n) return a;
  }
}

Seed derive_seed(Seed root, std::uint64_t level, std::uint64_t purpose, std::uint64_t attempt) {
  // splitmix64 over a mixed key
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(root);
  h = mix(h ^ level);
  h = mix(h ^ (purpose << 8));
  h = mix(h ^ (attempt << 16));
  return h;
}

Roster x_roster(std::size_t n) {
  Roster r;
  for (std::size_t i = 1; i <= n; ++i) r.push_back("x" + std::to_string(i));
  return r;
}

namespace {

Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("matrix entries must be rational strings or integers");
}

}  // namespace

SymmetricPencil parse_pencil_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("matrices")) {
    throw ParseError("pencil file needs fields m, n and matrices");
  }
  const long m = j["m"].get<long>();
  const long n = j["n"].get<long>();
  const auto& ms = j["matrices"];
  if (m < 1 || n < 0 || !ms.is_array() || ms.size() != static_cast<std::size_t>(n + 1)) {
    throw ParseError("pencil file: expected n+1 matrices");
  }
  std::vector<QMatrix> mats;
  for (const auto& mj : ms) {
    if (!mj.is_array() || mj.size() != static_cast<std::size_t>(m)) throw ParseError("pencil file: matrix must have m rows");
    QMatrix a(m, m);
    for (long i = 0; i < m; ++i) {
      if (!mj[i].is_array() || mj[i].size() != static_cast<std::size_t>(m)) {
        throw ParseError("pencil file: row must have m entries");
      }
      for (long k = 0; k < m; ++k) a(i, k) = json_rational(mj[i][k]);
    }
    if (!a.is_symmetric()) throw ParseError("pencil file: matrix is not symmetric");
    mats.push_back(std::move(a));
  }
  return SymmetricPencil(std::move(mats));
}

std::string pencil_to_json(const SymmetricPencil& p) {
  nlohmann::json j;
  j["m"] = p.m();
  j["n"] = p.n();
  j["matrices"] = nlohmann::json::array();
  for (const auto& a : p.mats()) {
    nlohmann::json mj = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(to_string(a(i, k)));
      mj.push_back(row);
    }
    j["matrices"].push_back(mj);
  }
  return j.dump(1);
}

}  // namespace exactlmi
