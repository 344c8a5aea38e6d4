#include <gtest/gtest.h>

#include "exactlmi/errors.hpp"
#include "exactlmi/ratpar.hpp"
#include "exactlmi/real_roots.hpp"

using namespace exactlmi;

namespace {

UniPoly up(std::vector<long> c) {
  std::vector<Rational> q;
  for (long v : c) q.emplace_back(v);
  return UniPoly(q);
}

// x = (t, 1) on t^2 = 2
RationalParametrization sqrt2() { return RationalParametrization::from_coordinates(up({-2, 0, 1}), {up({0, 1}), up({1})}); }

// x = (t, -t) on t = 3
RationalParametrization three() { return RationalParametrization::from_coordinates(up({-3, 1}), {up({0, 1}), up({0, -1})}); }

// point at label t (rational root)
std::vector<Rational> at(const RationalParametrization& rp, const Rational& t) {
  std::vector<Rational> x;
  const Rational d = rp.q0(t);
  for (const auto& q : rp.qi) x.push_back(q(t) / d);
  return x;
}

}  // namespace

TEST(RatPar, NormalForm) {
  const auto rp = RationalParametrization::from_coordinates(up({-2, 0, 1}) * up({-2, 0, 1}), {up({0, 1}), up({1})});
  rp.check_invariants();
  EXPECT_EQ(rp.degree(), 2);
  EXPECT_EQ(rp.q0, rp.qn1.derivative().primitive() * (rp.q0.leading() / rp.qn1.derivative().primitive().leading()));
  EXPECT_TRUE(RationalParametrization::empty(3).is_empty());
  RationalParametrization::empty(3).check_invariants();
}

TEST(RatPar, BrokenInvariantsAreReported) {
  auto rp = sqrt2();
  rp.qi[0] = up({0, 0, 0, 1});
  EXPECT_THROW(rp.check_invariants(), InternalError);
  rp = sqrt2();
  rp.q0 = up({-2, 0, 1});
  EXPECT_THROW(rp.check_invariants(), InternalError);
}

TEST(RatPar, UnionOfDisjointSets) {
  const auto u = set_union(sqrt2(), three());
  u.check_invariants();
  EXPECT_EQ(u.degree(), 3);
  EXPECT_EQ(at(u, 3), (std::vector<Rational>{3, -3}));
  EXPECT_TRUE(same_set(set_union(u, three()), u));
  EXPECT_TRUE(same_set(set_union(three(), sqrt2()), u));
}

TEST(RatPar, UnionCollision) {
  const auto other = RationalParametrization::from_coordinates(up({-3, 1}), {up({1}), up({1})});
  EXPECT_THROW(set_union(three(), other), CollisionError);
}

TEST(RatPar, UnionWithEmpty) {
  EXPECT_TRUE(same_set(set_union(RationalParametrization::empty(2), sqrt2()), sqrt2()));
}

TEST(RatPar, Lift) {
  const auto l = lift(three(), Rational(5, 2));
  l.check_invariants();
  EXPECT_EQ(l.n, 3u);
  EXPECT_EQ(at(l, 3), (std::vector<Rational>{Rational(5, 2), 3, -3}));
}

TEST(RatPar, Image) {
  // M = [[1, 1], [0, 2]], M x = (3, -3) -> x = (9/2, -3/2)
  const QMatrix M = QMatrix::from_rows({{1, 1}, {0, 2}});
  const auto im = image(three(), M);
  im.check_invariants();
  const auto x = at(im, 3);
  EXPECT_EQ(M * x, (std::vector<Rational>{3, -3}));
  EXPECT_THROW(image(three(), QMatrix(2, 2)), std::domain_error);
}

TEST(RatPar, ShiftLabels) {
  const auto s = shift_labels(three(), Rational(1));
  s.check_invariants();
  EXPECT_EQ(at(s, 2), (std::vector<Rational>{3, -3}));
  EXPECT_FALSE(s.lambda.has_value());
}

TEST(RatPar, Restrict) {
  const auto u = set_union(sqrt2(), three());
  const auto r = restrict_to(u, up({-3, 1}));
  r.check_invariants();
  EXPECT_TRUE(same_set(r, three()));
}

TEST(RatPar, ProjectKeepsRankR) {
  // A(x) = diag(x1, x2): rank 1 on (t, 0), rank 0 at the origin
  const SymmetricPencil p({QMatrix(2, 2), QMatrix::from_rows({{1, 0}, {0, 0}}), QMatrix::from_rows({{0, 0}, {0, 1}})});
  const auto rp = RationalParametrization::from_coordinates(up({0, -1, 0, 1}), {up({0, 1}), up({0})});
  const auto kept = project(rp, p, QMatrix::identity(2), 1);
  kept.check_invariants();
  EXPECT_EQ(kept.degree(), 2);
  EXPECT_EQ(project(rp, p, QMatrix::identity(2), 0).degree(), 3);
}

TEST(RatPar, JsonRoundTrip) {
  auto rp = set_union(sqrt2(), three());
  rp.lambda = std::vector<Rational>{Rational(1), Rational(0)};
  const auto back = ratpar_from_json(ratpar_to_json(rp));
  EXPECT_EQ(back, rp);
  EXPECT_THROW(ratpar_from_json("{\"n\": 2}"), ParseError);
}

TEST(RatPar, EvalHomogenized) {
  const MultiPoly f = MultiPoly::variable(x_roster(2), 0) * MultiPoly::variable(x_roster(2), 0) -
                      MultiPoly::constant(x_roster(2), Rational(2)) * MultiPoly::variable(x_roster(2), 1);
  const auto rp = sqrt2();
  EXPECT_TRUE(eval_homogenized(f, rp, 2).is_zero());
  const std::vector<MultiPoly> polys{f};
  EXPECT_TRUE(vanishes_on(polys, rp));
}
