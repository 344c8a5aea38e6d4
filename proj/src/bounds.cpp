#include "exactlmi/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactlmi {

long p_r(long m, long r) {
  if (r < 0 || r > m) throw std::out_of_range("p_r: need 0 <= r <= m");
  return (m - r) * (m + r + 1) / 2;
}

std::vector<long> index_set(long m, long n, long r) {
  const long p = p_r(m, r);
  const long c = (m - r + 1) * (m - r) / 2;
  const long lo = std::max(0L, n - p);
  const long hi = std::min(n - c, r * (m - r));
  std::vector<long> out;
  for (long k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

static void check_range(long m, long n, long r) {
  if (m < 1 || r < 0 || r > m - 1) throw std::out_of_range("theta: need 0 <= r <= m-1");
  if (n < 1) throw std::out_of_range("theta: need n >= 1");
}

Integer theta(long m, long n, long r) {
  check_range(m, n, r);
  const long p = p_r(m, r);
  const long d = r * (m - r);
  Integer sum = 0;
  for (long k : index_set(m, n, r)) sum += binomial(p, n - k) * binomial(n - 1, k + p - 1 - d) * binomial(d, k);
  return sum;
}

Integer aggregate_bound(long m, long n, long r_max) {
  if (r_max < 0 || r_max > m - 1) throw std::out_of_range("aggregate_bound: need 0 <= r_max <= m-1");
  Integer sum = 0;
  for (long r = 1; r <= r_max; ++r) sum += binomial(m, r) * theta(m, n, r);
  return sum;
}

BoundReport bound_report(long m, long n, long r) {
  check_range(m, n, r);
  BoundReport rep;
  rep.m = m;
  rep.n = n;
  rep.r = r;
  rep.p_r = p_r(m, r);
  rep.index_set = index_set(m, n, r);
  rep.theta = theta(m, n, r);
  const Integer b = binomial(rep.p_r + n, n);
  rep.cube_bound = b * b * b;
  return rep;
}

}  // namespace exactlmi
