#include <gtest/gtest.h>

#include <random>

#include "exactlmi/real_roots.hpp"
#include "oracles.hpp"

using namespace exactlmi;

namespace {

UniPoly up(std::vector<long> c) {
  std::vector<Rational> q;
  for (long v : c) q.emplace_back(v);
  return UniPoly(q);
}

}  // namespace

TEST(RealRoots, SquareRootOfTwo) {
  const auto roots = isolate_roots(up({-2, 0, 1}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_LE(roots[0].hi, 0);
  EXPECT_GE(roots[1].lo, 0);
  const auto fine = refine(roots[1], Rational(1, 1000000));
  EXPECT_LE(fine.width(), Rational(1, 1000000));
  EXPECT_LT(fine.lo * fine.lo, 2);
  EXPECT_GT(fine.hi * fine.hi, 2);
}

TEST(RealRoots, Cubic) {
  const auto roots = isolate_roots(up({-1, -8, 0, 8}));
  ASSERT_EQ(roots.size(), 3u);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) EXPECT_LE(roots[i].hi, roots[i + 1].lo);
}

TEST(RealRoots, NoRealRoots) {
  EXPECT_TRUE(isolate_roots(up({1, 0, 1})).empty());
  EXPECT_THROW(isolate_roots(UniPoly()), std::domain_error);
}

TEST(RealRoots, RationalRoots) {
  const auto roots = isolate_roots(up({0, -1, 0, 1}));  // t^3 - t
  ASSERT_EQ(roots.size(), 3u);
  for (const auto& r : roots) {
    const auto fine = refine(r, Rational(1, 100));
    EXPECT_TRUE(fine.is_rational() || up({0, -1, 0, 1})(fine.lo) != 0);
  }
}

TEST(RealRoots, SturmOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> c;
    const int d = 1 + trial % 7;
    for (int k = 0; k <= d; ++k) c.push_back(oracle::random_rational(rng, 9));
    if (c.back() == 0) c.back() = 1;
    const UniPoly p = squarefree_part(UniPoly(c));
    EXPECT_EQ(static_cast<int>(isolate_roots(p).size()), oracle::sturm_total(p)) << p.to_string();
  }
}

TEST(RealRoots, SignAt) {
  const UniPoly p = up({-2, 0, 1});
  const auto roots = isolate_roots(p);
  EXPECT_EQ(sign_at(up({0, 1}), roots[0]), -1);
  EXPECT_EQ(sign_at(up({0, 1}), roots[1]), 1);
  EXPECT_EQ(sign_at(up({-4, 0, 2}), roots[1]), 0);
  // t^2 - 2 - 10^-12 is positive at -sqrt 2 only after enough refinement
  EXPECT_EQ(sign_at(UniPoly({Rational(-1, 1000000000000), Rational(0), Rational(1, 2)}) - up({1}), roots[0]), -1);
  EXPECT_EQ(sign_of_quotient(up({-3, 2}), up({0, 1}), roots[0]), 1);
}

TEST(RealRoots, DescartesBound) {
  const UniPoly p = up({-1, -8, 0, 8});
  EXPECT_EQ(descartes_bound(p, Rational(2), Rational(5)), 0);
  EXPECT_EQ(descartes_bound(p, Rational(1), Rational(2)), 1);
}
