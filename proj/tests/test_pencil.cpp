#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "exactlmi/errors.hpp"
#include "exactlmi/pencil.hpp"
#include "oracles.hpp"

using namespace exactlmi;

namespace {

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> x(n);
  for (auto& v : x) v = oracle::random_rational(rng, 9);
  return x;
}

}  // namespace

TEST(Pencil, EvalAtOrigin) {
  const auto p = random_pencil(3, 2, 5, 10);
  EXPECT_EQ(p.eval({0, 0}), p[0]);
}

TEST(Pencil, EvalToZero) {
  const QMatrix a = QMatrix::from_rows({{1, 2}, {2, 3}});
  const SymmetricPencil p({a * Rational(-1), a});
  EXPECT_TRUE(p.eval({1}).is_zero());
}

TEST(Pencil, RejectsAsymmetric) {
  EXPECT_THROW(SymmetricPencil({QMatrix::from_rows({{1, 2}, {3, 4}})}), std::invalid_argument);
  EXPECT_THROW(SymmetricPencil({QMatrix::identity(2), QMatrix::identity(3)}), std::invalid_argument);
}

TEST(Pencil, ChangeOfVariables) {
  const auto p = random_pencil(3, 2, 1, 10);
  EXPECT_EQ(change_of_variables(p, QMatrix::identity(2)), p);
  const auto swapped = change_of_variables(p, QMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(swapped[1], p[2]);
  EXPECT_EQ(swapped[2], p[1]);

  const auto q = random_pencil(4, 3, 2, 10);
  const QMatrix M = random_invertible(3, 9, 5);
  const auto b = change_of_variables(q, M);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    const auto x = random_point(rng, 3);
    EXPECT_EQ(b.eval(x), q.eval(M * x));
  }
}

TEST(Pencil, FixFirstVariable) {
  const auto p = random_pencil(3, 3, 8, 10);
  const auto f0 = fix_first_variable(p, 0);
  EXPECT_EQ(f0.n(), 2u);
  EXPECT_EQ(f0[0], p[0]);
  EXPECT_EQ(f0[1], p[2]);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    const Rational t = oracle::random_rational(rng, 9);
    const auto x = random_point(rng, 2);
    EXPECT_EQ(fix_first_variable(p, t).eval(x), p.eval({t, x[0], x[1]}));
  }
  const auto one = random_pencil(2, 1, 8, 10);
  const auto c = fix_first_variable(one, 3);
  EXPECT_EQ(c.n(), 0u);
  EXPECT_EQ(c[0], one[0] + one[1] * Rational(3));
}

TEST(Pencil, RandomIsDeterministic) {
  EXPECT_EQ(random_pencil(4, 3, 77, 10), random_pencil(4, 3, 77, 10));
  EXPECT_NE(random_pencil(4, 3, 77, 10), random_pencil(4, 3, 78, 10));
  const auto p = random_pencil(4, 3, 77, 10);
  for (const auto& a : p.mats()) {
    EXPECT_TRUE(a.is_symmetric());
    for (const auto& e : a.entries()) {
      EXPECT_LE(abs(e.get_num()), 10);
      EXPECT_LE(e.get_den(), 10);
    }
  }
}

TEST(Pencil, RandomInvertible) {
  EXPECT_EQ(random_invertible(3, 12, 5), random_invertible(3, 12, 5));
  EXPECT_NE(random_invertible(1, 12, 5)(0, 0), 0);
  for (Seed s = 0; s < 10; ++s) EXPECT_EQ(rref(random_invertible(4, s, 3)).pivots.size(), 4u);
}

TEST(Pencil, JsonRoundTrip) {
  const auto p = random_pencil(3, 2, 6, 10);
  EXPECT_EQ(parse_pencil_json(pencil_to_json(p)), p);
}

TEST(Pencil, JsonErrors) {
  EXPECT_THROW(parse_pencil_json("{"), ParseError);
  EXPECT_THROW(parse_pencil_json(R"({"m": 2, "n": 0, "matrices": [[["1","2"],["3","4"]]]})"), ParseError);
  EXPECT_THROW(parse_pencil_json(R"({"m": 2, "n": 1, "matrices": [[["1","0"],["0","1"]]]})"), ParseError);
  EXPECT_THROW(parse_pencil_json(R"({"m": 1, "n": 0, "matrices": [[["x"]]]})"), ParseError);
}

TEST(Pencil, ScheidererFixtureParses) {
  std::ifstream in(EXACTLMI_FIXTURES "/scheiderer.json");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto p = parse_pencil_json(ss.str());
  EXPECT_EQ(p.m(), 6u);
  EXPECT_EQ(p.n(), 6u);
  EXPECT_EQ(p[0](0, 4), Rational(-3, 2));
  EXPECT_EQ(p[3](3, 3), -2);
}
