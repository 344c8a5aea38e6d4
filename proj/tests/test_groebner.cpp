#include <gtest/gtest.h>

#include "exactlmi/errors.hpp"
#include "exactlmi/groebner.hpp"
#include "exactlmi/lagrange.hpp"

using namespace exactlmi;

namespace {

const Roster kXY{"x", "y"};

MultiPoly var(std::size_t i) { return MultiPoly::variable(kXY, i); }
MultiPoly cst(long c) { return MultiPoly::constant(kXY, Rational(c)); }

}  // namespace

TEST(Groebner, DuplicatesCollapse) {
  const MultiPoly f = var(0) * var(0) - cst(2);
  const std::vector<MultiPoly> in{f, f, f * cst(3)};
  const auto gb = buchberger(in);
  ASSERT_EQ(gb.generators.size(), 1u);
  EXPECT_EQ(gb.generators[0], f);
}

TEST(Groebner, MonomialIdeal) {
  const std::vector<MultiPoly> in{var(0) * var(0), var(0) * var(1)};
  const auto gb = buchberger(in);
  EXPECT_EQ(gb.generators.size(), 2u);
  EXPECT_EQ(ideal_dimension(gb), 1);
  EXPECT_TRUE(reduces_to_zero(var(0) * var(0) * var(1), gb));
  EXPECT_FALSE(reduces_to_zero(var(1) * var(1), gb));
}

TEST(Groebner, Dimensions) {
  const std::vector<MultiPoly> unit{var(0), var(0) - cst(1)};
  EXPECT_TRUE(buchberger(unit).is_unit());
  EXPECT_EQ(ideal_dimension(buchberger(unit)), -1);

  const std::vector<MultiPoly> points{var(0) * var(0) - cst(1), var(1) * var(1) - var(0)};
  const auto gb = buchberger(points);
  EXPECT_EQ(ideal_dimension(gb), 0);
  EXPECT_EQ(quotient_basis(gb).dimension(), 4u);

  const std::vector<MultiPoly> curve{var(0) * var(1) - cst(1)};
  EXPECT_EQ(ideal_dimension(buchberger(curve)), 1);
  EXPECT_THROW(quotient_basis(buchberger(curve)), std::domain_error);
}

TEST(Groebner, LexEliminates) {
  // x^2 + y^2 - 5, x - y - 1 -> y^2 + y - 2 in the lex basis
  const std::vector<MultiPoly> in{var(0) * var(0) + var(1) * var(1) - cst(5), var(0) - var(1) - cst(1)};
  const auto gb = buchberger(in, MonomialOrder::lex());
  const MultiPoly elim = var(1) * var(1) + var(1) - cst(2);
  EXPECT_TRUE(reduces_to_zero(elim, gb));
  EXPECT_EQ(gb.generators.front(), elim);
}

TEST(Groebner, FglmShape) {
  const std::vector<MultiPoly> in{var(0) * var(0) + var(1) * var(1) - cst(5), var(0) - var(1) - cst(1)};
  const auto gb = buchberger(in);
  const std::vector<Rational> lambda{Rational(0), Rational(1)};
  const auto shape = fglm_to_lex(gb, lambda);
  EXPECT_EQ(shape.eliminant.degree(), 2);
  EXPECT_EQ(shape.quotient_dimension, 2u);
  // roots t = 1, -2 give x = t + 1
  for (long t : {1L, -2L}) {
    EXPECT_EQ(shape.eliminant(Rational(t)), 0);
    EXPECT_EQ(shape.coordinates[0](Rational(t)), Rational(t + 1));
    EXPECT_EQ(shape.coordinates[1](Rational(t)), Rational(t));
  }
}

TEST(Groebner, FglmRejectsNonSeparatingForm) {
  // points (1, 1), (1, -1): x does not separate them
  const std::vector<MultiPoly> in{var(0) - cst(1), var(1) * var(1) - cst(1)};
  const std::vector<Rational> lambda{Rational(1), Rational(0)};
  EXPECT_THROW(fglm_to_lex(buchberger(in), lambda), NotShapeError);
}

TEST(Groebner, FglmTakesTheRadical) {
  const std::vector<MultiPoly> in{var(0) * var(0), var(1) - cst(2)};
  const std::vector<Rational> lambda{Rational(1), Rational(0)};
  const auto shape = fglm_to_lex(buchberger(in), lambda);
  EXPECT_EQ(shape.quotient_dimension, 2u);
  EXPECT_EQ(shape.eliminant.degree(), 1);
}

TEST(Groebner, MinimalPolynomial) {
  const std::vector<MultiPoly> in{var(0) * var(0) - cst(2), var(1) - var(0)};
  const std::vector<Rational> lambda{Rational(1), Rational(1)};
  const auto mp = minimal_polynomial(buchberger(in), lambda);
  EXPECT_EQ(mp.degree(), 2);
  EXPECT_EQ(mp.monic()(Rational(0)), -8);
}

TEST(Groebner, LagrangeQuotientDimension) {
  const auto sys = reduce_redundancies(build_incidence(random_pencil(3, 2, 1, 10), random_invertible(2, 1, 3), {3, 2, {0}}));
  const auto gb = buchberger(build_lagrange(sys).polys);
  EXPECT_EQ(ideal_dimension(gb), 0);
  EXPECT_EQ(quotient_basis(gb).dimension(), 6u);
}

TEST(Groebner, Limits) {
  ResourceLimits limits;
  limits.max_basis_size = 1;
  const std::vector<MultiPoly> in{var(0) * var(0) - cst(1), var(1) * var(1) - var(0), var(0) * var(1) - cst(3)};
  EXPECT_THROW(buchberger(in, MonomialOrder::grevlex(), limits), TimeoutError);
}
