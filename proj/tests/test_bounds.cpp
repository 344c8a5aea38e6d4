#include <gtest/gtest.h>

#include "exactlmi/bounds.hpp"
#include "oracles.hpp"
#include "table_data.hpp"

using namespace exactlmi;

TEST(Bounds, PR) {
  EXPECT_EQ(p_r(3, 2), 3);
  EXPECT_EQ(p_r(4, 2), 7);
  EXPECT_EQ(p_r(5, 4), 5);
}

TEST(Bounds, IndexSet) {
  EXPECT_EQ(index_set(3, 2, 2), (std::vector<long>{0, 1}));
  EXPECT_TRUE(index_set(3, 6, 2).empty());
}

TEST(Bounds, TableOne) {
  for (const auto& row : table::rows)
    EXPECT_EQ(theta(row.m, row.n, row.r), Integer(row.theta)) << row.m << "," << row.r << "," << row.n;
}

TEST(Bounds, MatchesTrivariateOracle) {
  for (long m = 2; m <= 6; ++m)
    for (long r = 1; r < m; ++r)
      for (long n = 1; n <= 9; ++n) EXPECT_EQ(theta(m, n, r), oracle::theta(m, n, r)) << m << "," << r << "," << n;
}

TEST(Bounds, Aggregate) {
  EXPECT_EQ(aggregate_bound(3, 2, 2), Integer(27));
  EXPECT_EQ(aggregate_bound(3, 2, 1), 3 * theta(3, 2, 1));
}

TEST(Bounds, Report) {
  const auto rep = bound_report(3, 2, 2);
  EXPECT_EQ(rep.theta, Integer(9));
  EXPECT_EQ(rep.p_r, 3);
  EXPECT_EQ(rep.cube_bound, Integer(1000));  // binom(5, 2)^3
  EXPECT_LE(rep.theta, rep.cube_bound);
}
