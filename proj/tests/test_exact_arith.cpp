#include <gtest/gtest.h>

#include <random>

#include "exactlmi/errors.hpp"
#include "exactlmi/multipoly.hpp"
#include "exactlmi/qmatrix.hpp"
#include "exactlmi/unipoly.hpp"
#include "oracles.hpp"

using namespace exactlmi;

namespace {

UniPoly up(std::vector<long> c) {
  std::vector<Rational> q;
  for (long v : c) q.emplace_back(v);
  return UniPoly(q);
}

const UniPoly kCubic = up({-1, -8, 0, 8});  // 8t^3 - 8t - 1

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, Decimal) {
  EXPECT_EQ(to_decimal(Rational(-1, 3), 4), "-0.3333");
  EXPECT_EQ(to_decimal(Rational(2, 3), 3), "0.667");
  EXPECT_EQ(to_decimal(Rational(-1), 2), "-1.00");
}

TEST(MultiPoly, Arithmetic) {
  const Roster r{"x1", "x2", "y1", "y2"};
  const auto x1 = MultiPoly::variable(r, 0), x2 = MultiPoly::variable(r, 1);
  const auto y1 = MultiPoly::variable(r, 2), y2 = MultiPoly::variable(r, 3);
  const auto one = MultiPoly::constant(r, 1);
  EXPECT_EQ((x1 + one) * (x1 - one), x1 * x1 - one);
  EXPECT_EQ(x1 + MultiPoly(r), x1);
  const auto prod = (x1 * y1) * (x2 * y2);
  ASSERT_EQ(prod.size(), 1u);
  EXPECT_EQ(prod.terms().begin()->first, (Exponents{1, 1, 1, 1}));
}

TEST(MultiPoly, RosterUnion) {
  const auto a = MultiPoly::variable(Roster{"x1"}, 0);
  const auto b = MultiPoly::variable(Roster{"y1"}, 0);
  const auto s = poly_arith(a, b, PolyOp::Add);
  EXPECT_EQ(s.roster(), (Roster{"x1", "y1"}));
  EXPECT_EQ(s.size(), 2u);
}

TEST(MultiPoly, Eval) {
  const Roster r{"x1"};
  const auto x = MultiPoly::variable(r, 0);
  const auto p = x * x - MultiPoly::constant(r, 1);
  const std::vector<Rational> three{Rational(3)}, zero{Rational(0)};
  EXPECT_EQ(p.eval(three), 8);
  EXPECT_EQ(p.eval(zero), p.constant_term());
}

TEST(UniPoly, Gcd) {
  EXPECT_EQ(gcd(up({-1, 0, 1}), up({-1, 1})), up({-1, 1}));
  EXPECT_EQ(gcd(kCubic, kCubic.derivative()), up({1}));
  EXPECT_EQ(gcd(kCubic, kCubic), kCubic.monic());
}

TEST(UniPoly, SquarefreePart) {
  const UniPoly f = up({-1, 1}) * up({-1, 1}) * up({2, 1});
  EXPECT_EQ(squarefree_part(f), up({-1, 1}) * up({2, 1}));
  EXPECT_EQ(squarefree_part(kCubic), kCubic);
  EXPECT_EQ(squarefree_part(up({5})), up({1}));
}

TEST(UniPoly, DivisionAndInverse) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> a(6), b(4);
    for (auto& c : a) c = oracle::random_rational(rng, 9);
    for (auto& c : b) c = oracle::random_rational(rng, 9);
    if (b.back() == 0) b.back() = 1;
    const UniPoly pa(a), pb(b);
    const auto [q, r] = divmod(pa, pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
    if (gcd(pa, pb).degree() == 0) EXPECT_EQ(mul_mod(inverse_mod(pa, pb), pa, pb), up({1}));
  }
}

TEST(UniPoly, Shift) {
  const UniPoly p = up({1, 2, 3});
  const Rational s(5, 2);
  for (long t = -3; t <= 3; ++t) EXPECT_EQ(p.shift(s)(Rational(t)), p(Rational(t) + s));
}

TEST(QMatrix, Rref) {
  const auto id = rref(QMatrix::identity(3));
  EXPECT_EQ(id.matrix, QMatrix::identity(3));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));
  const auto r = rref(QMatrix::from_rows({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.matrix, QMatrix::from_rows({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(QMatrix, DeterminantMatchesCofactorOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = oracle::random_rational(rng, 7);
    const Rational d = oracle::cofactor_det(a);
    EXPECT_EQ(determinant(a), d);
    EXPECT_EQ(rank(a) == 4, d != 0);
    if (d != 0) EXPECT_EQ(a * inverse(a), QMatrix::identity(4));
  }
}

TEST(QMatrix, Solve) {
  bool ok = false;
  const auto x = solve(QMatrix::from_rows({{1, 1}, {1, -1}}), {Rational(3), Rational(1)}, &ok);
  ASSERT_TRUE(ok);
  EXPECT_EQ(x, (std::vector<Rational>{2, 1}));
  solve(QMatrix::from_rows({{1, 1}, {1, 1}}), {Rational(1), Rational(2)}, &ok);
  EXPECT_FALSE(ok);
}

TEST(PolyMatrix, MinorsAndDeterminant) {
  const Roster r{"x1", "x2"};
  const auto x1 = MultiPoly::variable(r, 0), x2 = MultiPoly::variable(r, 1);
  const auto one = MultiPoly::constant(r, 1);
  PolyMatrix a{2, 2, {x1, one, one, x2}};
  EXPECT_EQ(determinant(a), x1 * x2 - one);
  EXPECT_EQ(minors(a, 1).size(), 4u);
  EXPECT_EQ(minors(a, 1, true).size(), 3u);
  EXPECT_EQ(subsets(4, 2).size(), 6u);
}
