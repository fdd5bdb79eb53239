#include "nrange/rational.hpp"

#include <cmath>

namespace nrange {

Rat rat_of_double_exact(double v) {
  Rat r;
  mpq_set_d(r.get_mpq_t(), v);
  return r;
}

std::optional<Rat> rationalize(double v, unsigned long max_den, double tol,
                               bool accept_best) {
  if (!std::isfinite(v)) return std::nullopt;
  // continued-fraction convergents of v
  double x = v;
  Int p0 = 1, q0 = 0, p1, q1;
  {
    double a0 = std::floor(x);
    p1 = Int(a0);
    q1 = 1;
    x -= a0;
  }
  Rat best(p1, q1);
  for (int it = 0; it < 64; it++) {
    double err = std::fabs(to_double(best) - v);
    if (err <= tol) return best;
    if (x == 0.0) break;
    x = 1.0 / x;
    double a = std::floor(x);
    if (a > 1e18) break;
    Int ai(a);
    Int p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > Int(max_den)) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    best = Rat(p1, q1);
    best.canonicalize();
    x -= a;
  }
  if (std::fabs(to_double(best) - v) <= tol || accept_best) return best;
  return std::nullopt;
}

Rat simplest_rational_between(const Rat& lo_in, const Rat& hi_in) {
  Rat lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rat(0);
  if (lo < 0) return -simplest_rational_between(-hi, -lo);
  // 0 < lo <= hi
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  Rat n(fl);
  if (lo == n) return lo;
  if (hi >= n + 1) return n + 1;
  // both strictly inside (n, n+1)
  Rat r = simplest_rational_between(1 / (hi - n), 1 / (lo - n));
  if (r == 0) r = simplest_rational_between(1 / (hi - n), 1 / (lo - n) + 1);
  return n + 1 / r;
}

}  // namespace nrange
