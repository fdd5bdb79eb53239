#include "nrange/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace nrange {

double ipoly_root_bound(const IPoly& p) {
  if (p.deg() <= 0) return 1.0;
  double lead = std::fabs(p.lead().get_d());
  double m = 0;
  for (int i = 0; i < p.deg(); i++) m = std::max(m, std::fabs(p.c[i].get_d()));
  if (m == 0) return 1.0;
  if (std::isfinite(lead) && std::isfinite(m) && lead > 0) return 1.0 + m / lead;
  // coefficients overflow double: bound the ratio by bit lengths instead
  long lb = (long)mpz_sizeinbase(p.lead().get_mpz_t(), 2);
  long mb = 1;
  for (int i = 0; i < p.deg(); i++)
    if (p.c[i] != 0) mb = std::max(mb, (long)mpz_sizeinbase(p.c[i].get_mpz_t(), 2));
  long e = mb - lb + 2;
  if (e < 1) e = 1;
  if (e > 1020) return 1e300;
  return 1.0 + std::ldexp(1.0, (int)e);
}

namespace {

// in-place Taylor shift p(x) -> p(x+1)
void shift1(IPoly& p) {
  int d = p.deg();
  for (int i = 0; i < d; i++)
    for (int j = d - 1; j >= i; j--) p.c[j] += p.c[j + 1];
}

int sign_variations(const IPoly& p) {
  int v = 0, last = 0;
  for (const auto& a : p.c) {
    int s = sgn(a);
    if (s != 0) {
      if (last != 0 && s != last) v++;
      last = s;
    }
  }
  return v;
}

// Descartes bound for the number of roots of q in the open interval (0,1):
// variations of (1+x)^d q(1/(1+x)).
int bound01(const IPoly& q) {
  IPoly r;
  r.c.assign(q.c.rbegin(), q.c.rend());
  shift1(r);
  return sign_variations(r);
}

struct Isolator {
  const IPoly* porig;  // squarefree polynomial, for endpoint checks
  std::vector<RootIsolation::Interval> out;
  // q represents porig on (lo, hi) via the affine map x -> lo + (hi-lo)x
  void vca(IPoly q, const Rat& lo, const Rat& hi, int depth) {
    int v = bound01(q);
    if (v == 0) return;
    if (v == 1) {
      out.push_back({lo, hi, 1});
      return;
    }
    if (depth > 4000) throw std::runtime_error("root isolation: depth exceeded");
    Rat mid = (lo + hi) / 2;
    int d = q.deg();
    IPoly q0 = q;
    Int tw = 1;
    for (int i = d; i >= 0; i--) {
      q0.c[i] *= tw;
      tw *= 2;
    }
    IPoly q1 = q0;
    shift1(q1);
    if (q1.c.size() && q1.c[0] == 0) out.push_back({mid, mid, 1});
    vca(q0, lo, mid, depth + 1);
    vca(q1, mid, hi, depth + 1);
  }
};

void refine_interval(const IPoly& pin, RootIsolation::Interval& iv, const Rat& precision) {
  if (iv.lo == iv.hi) return;
  Rat lo = iv.lo, hi = iv.hi;
  IPoly p = pin;
  // An endpoint of the cell may itself be a (rational) root of p that was
  // recorded separately; divide such factors out so signs at endpoints are
  // nonzero. p is squarefree so one division suffices per endpoint.
  for (const Rat& e : {lo, hi}) {
    if (ipoly_sign_at(p, e) == 0) {
      UPoly q = upoly_from_ipoly(p);
      UPoly lin(std::vector<Rat>{-e, Rat(1)});
      q = poly_divexact(q, lin);
      p = upoly_clear_denominators(q);
    }
  }
  int slo = ipoly_sign_at(p, lo);
  while (hi - lo > precision) {
    Rat mid = (lo + hi) / 2;
    int sm = ipoly_sign_at(p, mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  iv.lo = lo;
  iv.hi = hi;
}

}  // namespace

RootIsolation real_roots(const UPoly& pin, const Rat& precision) {
  if (pin.is_zero()) throw std::domain_error("real_roots of zero polynomial");
  RootIsolation res;
  if (pin.deg() == 0) return res;
  std::vector<UPoly> yun = upoly_yun(pin);
  UPoly sqf(Rat(1));
  for (const auto& f : yun) sqf = sqf * f;
  IPoly p = upoly_clear_denominators(sqf);
  if (p.deg() == 0) return res;
  if (p.deg() > kExactDegreeLimit) {
    double b = ipoly_root_bound(p);
    return real_roots_scan(p, -b, b, 4096, precision);
  }
  // enclose (-B, B), B a power of two above the root bound
  Int B = 1;
  while (B.get_d() < ipoly_root_bound(p)) B *= 2;
  // build q with q(x) ~ p(2B x - B), so x in (0,1) covers (-B, B)
  IPoly q = p;
  int d = q.deg();
  {
    Int s = 1;  // scale: p(B x)
    for (int i = 0; i <= d; i++) {
      q.c[i] *= s;
      s *= B;
    }
    for (int i = 0; i < d; i++)  // shift: p(B(x-1))
      for (int j = d - 1; j >= i; j--) q.c[j] -= q.c[j + 1];
    Int t = 1;  // scale: p(B(2x-1))
    for (int i = 0; i <= d; i++) {
      q.c[i] *= t;
      t *= 2;
    }
    q.trim();
  }
  Isolator iso;
  iso.porig = &p;
  iso.vca(q, Rat(-B), Rat(B), 0);
  std::sort(iso.out.begin(), iso.out.end(),
            [](const RootIsolation::Interval& a, const RootIsolation::Interval& b) {
              return a.lo < b.lo;
            });
  std::vector<RootIsolation::Interval> kept;
  for (auto& iv : iso.out) {
    if (!kept.empty() && kept.back().lo == kept.back().hi && iv.lo == iv.hi &&
        kept.back().lo == iv.lo)
      continue;
    kept.push_back(iv);
  }
  for (auto& iv : kept) refine_interval(p, iv, precision);
  std::sort(kept.begin(), kept.end(),
            [](const RootIsolation::Interval& a, const RootIsolation::Interval& b) {
              return a.lo < b.lo;
            });
  // multiplicity hints from the Yun decomposition
  for (auto& iv : kept) {
    for (size_t i = 0; i < yun.size(); i++) {
      if (yun[i].deg() <= 0) continue;
      IPoly fi = upoly_clear_denominators(yun[i]);
      int a = ipoly_sign_at(fi, iv.lo), b2 = ipoly_sign_at(fi, iv.hi);
      if (a == 0 || b2 == 0 || a != b2) {
        iv.mult = (int)i + 1;
        break;
      }
    }
  }
  res.intervals = std::move(kept);
  res.complete = true;
  return res;
}

RootIsolation real_roots_scan(const IPoly& p, double lo, double hi, int grid,
                              const Rat& precision) {
  RootIsolation res;
  res.complete = false;
  if (p.deg() <= 0) return res;
  unsigned long prec = 512;
  for (const auto& a : p.c)
    if (a != 0) prec = std::max(prec, (unsigned long)mpz_sizeinbase(a.get_mpz_t(), 2) + 128);
  mpf_set_default_prec(std::min(prec, 1ul << 20));
  std::vector<mpf_class> cf;
  cf.reserve(p.c.size());
  for (const auto& a : p.c) cf.emplace_back(a);
  auto eval = [&](const mpf_class& x) {
    mpf_class v = 0;
    for (int i = p.deg(); i >= 0; i--) v = v * x + cf[i];
    return v;
  };
  // grid: linear points in [lo, hi] plus a geometric tail out to the root
  // bound when the requested window is smaller
  std::vector<double> xs;
  xs.reserve(grid + 520);
  for (int i = 0; i <= grid; i++) xs.push_back(lo + (hi - lo) * i / grid);
  double b = ipoly_root_bound(p);
  if (b > std::max(std::fabs(lo), std::fabs(hi))) {
    double start = std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)));
    for (double m = start; m < b; m *= 1.07) {
      if (m > hi) xs.push_back(m);
      if (-m < lo) xs.push_back(-m);
    }
    xs.push_back(b);
    xs.push_back(-b);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<int> sg(xs.size());
  for (size_t i = 0; i < xs.size(); i++) {
    mpf_class v = eval(mpf_class(xs[i]));
    sg[i] = (v > 0) - (v < 0);
  }
  for (size_t i = 0; i + 1 < xs.size(); i++) {
    if (sg[i] == 0) {
      Rat r = rat_of_double_exact(xs[i]);
      res.intervals.push_back({r, r, 1});
      continue;
    }
    if (sg[i + 1] != 0 && sg[i + 1] != sg[i]) {
      // bisect in mpf
      mpf_class a(xs[i]), c(xs[i + 1]);
      int sa = sg[i];
      double width = to_double(Rat(precision));
      for (int it = 0; it < 80 && mpf_class(c - a).get_d() > width; it++) {
        mpf_class m = (a + c) / 2;
        mpf_class v = eval(m);
        int sm = (v > 0) - (v < 0);
        if (sm == 0 || sm == sa)
          a = m;
        else
          c = m;
        if (sm == 0) {
          c = m;
          break;
        }
      }
      res.intervals.push_back({rat_of_double_exact(a.get_d()), rat_of_double_exact(c.get_d()), 1});
    }
  }
  std::sort(res.intervals.begin(), res.intervals.end(),
            [](const RootIsolation::Interval& a, const RootIsolation::Interval& b) {
              return a.lo < b.lo;
            });
  return res;
}

std::vector<double> real_roots_double(const std::vector<double>& coeffs, double imag_tol) {
  std::vector<double> c = coeffs;
  double m = 0;
  for (double a : c) m = std::max(m, std::fabs(a));
  if (m == 0) return {};
  while (!c.empty() && std::fabs(c.back()) <= 1e-13 * m) c.pop_back();
  if (c.size() <= 1) return {};
  int d = (int)c.size() - 1;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; i++) C(0, i) = -c[d - 1 - i] / c[d];
  for (int i = 1; i < d; i++) C(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C);
  std::vector<double> roots;
  double scale = 0;
  for (int i = 0; i < d; i++) scale = std::max(scale, std::abs(es.eigenvalues()[i]));
  scale = std::max(scale, 1.0);
  for (int i = 0; i < d; i++) {
    auto z = es.eigenvalues()[i];
    if (std::fabs(z.imag()) <= imag_tol * scale) roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace nrange
