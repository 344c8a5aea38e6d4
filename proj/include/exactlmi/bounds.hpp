#pragma once

#include <vector>

#include "exactlmi/rational.hpp"

namespace exactlmi {

struct BoundReport {
  long m = 0, n = 0, r = 0;
  long p_r = 0;
  std::vector<long> index_set;
  Integer theta;
  Integer cube_bound;  // binom(p_r + n, n)^3
};

long p_r(long m, long r);

/// k with max(0, n - p_r) <= k <= min(n - binom(m-r+1, 2), r(m-r))
std::vector<long> index_set(long m, long n, long r);

Integer theta(long m, long n, long r);

/// sum over r = 1..r_max of binom(m, r) theta(m, n, r)
Integer aggregate_bound(long m, long n, long r_max);

BoundReport bound_report(long m, long n, long r);

}  // namespace exactlmi
