#include "nrange/bipoly.hpp"

#include "nrange/modpoly.hpp"
#include <cmath>
#include <stdexcept>

namespace nrange {

void BiPoly::trim() {
  if (is_zero()) return;
  int na = -1, nb = -1;
  for (int i = 0; i <= da; i++)
    for (int j = 0; j <= db; j++)
      if (at(i, j) != 0) {
        na = std::max(na, i);
        nb = std::max(nb, j);
      }
  if (na < 0) {
    da = db = -1;
    c.clear();
    return;
  }
  if (na == da && nb == db) return;
  BiPoly r(na, nb);
  for (int i = 0; i <= na; i++)
    for (int j = 0; j <= nb; j++) r.at(i, j) = at(i, j);
  *this = std::move(r);
}

int BiPoly::total_degree() const {
  int d = -1;
  for (int i = 0; i <= da; i++)
    for (int j = 0; j <= db; j++)
      if (at(i, j) != 0) d = std::max(d, i + j);
  return d;
}

BiPoly operator+(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  BiPoly r(std::max(p.da, q.da), std::max(p.db, q.db));
  for (int i = 0; i <= r.da; i++)
    for (int j = 0; j <= r.db; j++) r.at(i, j) = p.get(i, j) + q.get(i, j);
  r.trim();
  return r;
}
BiPoly operator-(const BiPoly& p, const BiPoly& q) { return p + q * Rat(-1); }
BiPoly operator*(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return BiPoly();
  BiPoly r(p.da + q.da, p.db + q.db);
  for (int i = 0; i <= p.da; i++)
    for (int j = 0; j <= p.db; j++) {
      if (p.at(i, j) == 0) continue;
      for (int k = 0; k <= q.da; k++)
        for (int l = 0; l <= q.db; l++) r.at(i + k, j + l) += p.at(i, j) * q.at(k, l);
    }
  r.trim();
  return r;
}
BiPoly operator*(const BiPoly& p, const Rat& s) {
  if (p.is_zero() || s == 0) return BiPoly();
  BiPoly r = p;
  for (auto& x : r.c) x *= s;
  return r;
}

BiPoly BiPoly::partial_a() const {
  if (da <= 0) return BiPoly();
  BiPoly r(da - 1, db);
  for (int i = 1; i <= da; i++)
    for (int j = 0; j <= db; j++) r.at(i - 1, j) = at(i, j) * i;
  r.trim();
  return r;
}
BiPoly BiPoly::partial_b() const {
  if (is_zero() || db <= 0) return BiPoly();
  BiPoly r(da, db - 1);
  for (int i = 0; i <= da; i++)
    for (int j = 1; j <= db; j++) r.at(i, j - 1) = at(i, j) * j;
  r.trim();
  return r;
}

Rat BiPoly::eval(const Rat& a, const Rat& b) const {
  if (is_zero()) return Rat(0);
  Rat v(0);
  for (int i = da; i >= 0; i--) {
    Rat row(0);
    for (int j = db; j >= 0; j--) row = row * b + at(i, j);
    v = v * a + row;
  }
  return v;
}
double BiPoly::eval_double(double a, double b) const {
  if (is_zero()) return 0;
  double v = 0;
  for (int i = da; i >= 0; i--) {
    double row = 0;
    for (int j = db; j >= 0; j--) row = row * b + to_double(at(i, j));
    v = v * a + row;
  }
  return v;
}
UPoly BiPoly::eval_at_b(const Rat& b) const {
  UPoly r;
  if (is_zero()) return r;
  r.c.resize(da + 1);
  for (int i = 0; i <= da; i++) {
    Rat row(0);
    for (int j = db; j >= 0; j--) row = row * b + at(i, j);
    r.c[i] = row;
  }
  r.trim();
  return r;
}
UPoly BiPoly::eval_at_a(const Rat& a) const {
  UPoly r;
  if (is_zero()) return r;
  r.c.resize(db + 1);
  for (int j = 0; j <= db; j++) {
    Rat col(0);
    for (int i = da; i >= 0; i--) col = col * a + at(i, j);
    r.c[j] = col;
  }
  r.trim();
  return r;
}

namespace {
// common denominator and content of all coefficients
Rat integer_scale(const BiPoly& p) {
  Int l = 1;
  for (const auto& a : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den().get_mpz_t());
  Int g = 0;
  for (const auto& a : p.c) {
    Rat s = a * Rat(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
  }
  if (g == 0) g = 1;
  Rat f(l, g);
  f.canonicalize();
  return f;  // p * f has integer coprime coefficients
}
}  // namespace

IPoly2 BiPoly::as_poly_in_a() const {
  IPoly2 r;
  if (is_zero()) return r;
  Rat f = integer_scale(*this);
  r.c.resize(da + 1);
  for (int i = 0; i <= da; i++) {
    IPoly row;
    row.c.resize(db + 1);
    for (int j = 0; j <= db; j++) {
      Rat s = at(i, j) * f;
      row.c[j] = Int(s.get_num());
    }
    row.trim();
    r.c[i] = row;
  }
  r.trim();
  return r;
}
IPoly2 BiPoly::as_poly_in_b() const {
  IPoly2 r;
  if (is_zero()) return r;
  Rat f = integer_scale(*this);
  r.c.resize(db + 1);
  for (int j = 0; j <= db; j++) {
    IPoly row;
    row.c.resize(da + 1);
    for (int i = 0; i <= da; i++) {
      Rat s = at(i, j) * f;
      row.c[i] = Int(s.get_num());
    }
    row.trim();
    r.c[j] = row;
  }
  r.trim();
  return r;
}
BiPoly BiPoly::from_poly_in_a(const IPoly2& p) {
  if (p.is_zero()) return BiPoly();
  int da = p.deg(), db = 0;
  for (const auto& row : p.c) db = std::max(db, row.deg());
  BiPoly r(da, std::max(db, 0));
  for (int i = 0; i <= da; i++)
    for (int j = 0; j <= p.c[i].deg(); j++) r.at(i, j) = Rat(p.c[i].c[j]);
  r.trim();
  return r;
}
BiPoly BiPoly::from_poly_in_b(const IPoly2& p) {
  if (p.is_zero()) return BiPoly();
  int db = p.deg(), da = 0;
  for (const auto& row : p.c) da = std::max(da, row.deg());
  BiPoly r(std::max(da, 0), db);
  for (int j = 0; j <= db; j++)
    for (int i = 0; i <= p.c[j].deg(); i++) r.at(i, j) = Rat(p.c[j].c[i]);
  r.trim();
  return r;
}

BiPoly BiPoly::shear_b_plus_a() const {
  // substitute b -> a + b
  if (is_zero()) return BiPoly();
  BiPoly r;
  BiPoly a01(1, 0);
  a01.at(1, 0) = 1;
  BiPoly b01(0, 1);
  b01.at(0, 1) = 1;
  BiPoly ab = a01 + b01;
  // Horner in b
  for (int j = db; j >= 0; j--) {
    BiPoly row;
    for (int i = 0; i <= da; i++) {
      if (at(i, j) == 0) continue;
      BiPoly m(i, 0);
      m.at(i, 0) = at(i, j);
      row = row + m;
    }
    r = r * ab + row;
  }
  r.trim();
  return r;
}

void BiPoly::normalize_canonical() {
  trim();
  if (is_zero()) return;
  Rat f = integer_scale(*this);
  for (auto& x : c) x *= f;
  // lex leading (a first, then b) sign positive
  for (int i = da; i >= 0; i--)
    for (int j = db; j >= 0; j--)
      if (at(i, j) != 0) {
        if (at(i, j) < 0)
          for (auto& x : c) x = -x;
        return;
      }
}

double BiPoly::max_abs_coeff() const {
  double m = 0;
  for (const auto& x : c) m = std::max(m, std::fabs(to_double(x)));
  return m;
}

bool bipoly_divides(const BiPoly& d, const BiPoly& g) {
  if (d.is_zero()) return g.is_zero();
  if (g.is_zero()) return true;
  IPoly2 gp = g.as_poly_in_a(), dp = d.as_poly_in_a();
  if (dp.deg() > gp.deg()) return false;
  if (dp.deg() == 0) {
    // d is univariate in b: must divide the b-content of g
    IPoly cont;
    for (const auto& row : gp.c) cont = poly_gcd(cont, row);
    return poly_divides(dp.c[0], cont);
  }
  return poly_divides(dp, gp);
}

BiPoly bipoly_divexact(const BiPoly& g, const BiPoly& d) {
  IPoly2 gp = g.as_poly_in_a(), dp = d.as_poly_in_a();
  IPoly2 gprim = poly_primitive(gp), dprim = poly_primitive(dp);
  BiPoly q;
  if (dprim.deg() == 0) {
    // divide by a polynomial in b only
    IPoly den = dprim.c.empty() ? IPoly(Int(1)) : dprim.c[0];
    IPoly2 res = gprim;
    for (auto& row : res.c) row = poly_divexact(row, den);
    q = BiPoly::from_poly_in_a(res);
  } else {
    q = BiPoly::from_poly_in_a(poly_divexact(gprim, dprim));
  }
  // fix the scalar: compare a nonzero coefficient of g and d*q
  BiPoly prod = d * q;
  for (int i = 0; i <= g.da; i++)
    for (int j = 0; j <= g.db; j++)
      if (g.at(i, j) != 0) {
        Rat lam = g.at(i, j) / prod.get(i, j);
        return q * lam;
      }
  return q;
}

BiPoly bipoly_squarefree(const BiPoly& gin) {
  if (gin.is_zero()) throw std::domain_error("squarefree of zero polynomial");
  BiPoly g = gin;
  g.normalize_canonical();
  int td = g.total_degree();
  if (td <= 1) return g;
  // specialization certificate: a random line keeping the total degree
  {
    const Rat etas[] = {Rat(3, 7), Rat(5, 11), Rat(2, 9)};
    for (const Rat& eta : etas) {
      // u(t) = g(t, eta*t + 1/5)
      UPoly t_poly(std::vector<Rat>{Rat(0), Rat(1)});
      UPoly b_poly(std::vector<Rat>{Rat(1, 5), eta});
      UPoly u;
      for (int i = g.da; i >= 0; i--) {
        UPoly row;
        for (int j = g.db; j >= 0; j--) row = row * b_poly + UPoly(g.at(i, j));
        u = u * t_poly + row;
      }
      if (u.deg() == td) {
        UPoly w = upoly_gcd(u, u.derivative());
        if (w.deg() == 0) return g;  // specialization squarefree, so g is
        break;
      }
    }
  }
  // full path: b-content times primitive part in a
  IPoly2 gp = g.as_poly_in_a();
  IPoly cont;
  for (const auto& row : gp.c) cont = poly_gcd(cont, row);
  IPoly2 prim = gp;
  for (auto& row : prim.c) row = poly_divexact(row, cont);
  IPoly cont_sf = ipoly_squarefree(cont);
  IPoly2 prim_sf = prim;
  if (prim.deg() >= 1) {
    IPoly2 der = prim.derivative();
    IPoly2 w = poly_gcd(prim, der);
    if (w.deg() >= 1) prim_sf = poly_divexact(prim, w);
  }
  BiPoly res = BiPoly::from_poly_in_a(prim_sf);
  if (cont_sf.deg() >= 1) {
    BiPoly cb(0, cont_sf.deg());
    for (int j = 0; j <= cont_sf.deg(); j++) cb.at(0, j) = Rat(cont_sf.c[j]);
    res = res * cb;
  }
  res.normalize_canonical();
  return res;
}

UPoly bipoly_resultant_a(const BiPoly& g, const BiPoly& h) {
  IPoly2 A = g.as_poly_in_a(), B = h.as_poly_in_a();
  int da1 = A.deg(), da2 = B.deg();
  if (da1 < 0 || da2 < 0) return UPoly();
  if (da1 == 0 && da2 == 0) throw std::domain_error("resultant: both degree 0 in a");
  int dbg = 0, dbh = 0;
  for (const auto& r : A.c) dbg = std::max(dbg, r.deg());
  for (const auto& r : B.c) dbh = std::max(dbh, r.deg());
  int Db = dbg * da2 + dbh * da1;
  int npts = Db + 1;
  // coefficient bound (Hadamard on the Sylvester matrix at integer points)
  double maxbitsA = 1, maxbitsB = 1;
  for (const auto& r : A.c)
    for (const auto& x : r.c)
      maxbitsA = std::max(maxbitsA, (double)mpz_sizeinbase(x.get_mpz_t(), 2));
  for (const auto& r : B.c)
    for (const auto& x : r.c)
      maxbitsB = std::max(maxbitsB, (double)mpz_sizeinbase(x.get_mpz_t(), 2));
  double lg_pt = std::log2((double)(npts + da1 + da2 + 2));
  double entA = maxbitsA + (dbg + 1) * lg_pt + std::log2(dbg + 1.0);
  double entB = maxbitsB + (dbh + 1) * lg_pt + std::log2(dbh + 1.0);
  double bits = da2 * (entA + 0.5 * std::log2(da1 + 1.0)) +
                da1 * (entB + 0.5 * std::log2(da2 + 1.0)) + 4;
  size_t nprimes = (size_t)(bits / 61.0) + 2;
  std::vector<uint64_t> ps = modp::primes(nprimes);

  const IPoly& lcA = A.c[da1];
  const IPoly& lcB = B.c[da2];
  std::vector<std::vector<uint64_t>> per_prime_coef(nprimes);
  for (size_t pi = 0; pi < nprimes; pi++) {
    uint64_t p = ps[pi];
    // reduce coefficients mod p once
    auto red = [&](const IPoly2& P, int dtop) {
      std::vector<std::vector<uint64_t>> t(dtop + 1);
      for (int i = 0; i <= dtop; i++) {
        const IPoly& row = P.coeff(i);
        t[i].resize(row.deg() + 1);
        for (int j = 0; j <= row.deg(); j++) t[i][j] = modp::mod_of(row.c[j], p);
      }
      return t;
    };
    auto rA = red(A, da1), rB = red(B, da2);
    std::vector<uint64_t> xs, vs;
    xs.reserve(npts);
    vs.reserve(npts);
    long b0 = 0;
    while ((int)xs.size() < npts) {
      long pt = b0++;
      if (b0 > npts + 64 + (long)nprimes) throw std::runtime_error("resultant: point pool exhausted");
      // skip points where a formal leading coefficient vanishes (over Z or mod p)
      if (lcA.eval(Int(pt)) == 0 || lcB.eval(Int(pt)) == 0) continue;
      uint64_t x = (uint64_t)(pt % (long)p);
      auto evalrow = [&](const std::vector<std::vector<uint64_t>>& t) {
        std::vector<uint64_t> f(t.size());
        for (size_t i = 0; i < t.size(); i++) {
          uint64_t v = 0;
          for (int j = (int)t[i].size() - 1; j >= 0; j--) v = (modp::mulmod(v, x, p) + t[i][j]) % p;
          f[i] = v;
        }
        return f;
      };
      auto f = evalrow(rA), gg = evalrow(rB);
      if (f.back() == 0 || gg.back() == 0) continue;  // mod-p degree drop
      xs.push_back(x);
      vs.push_back(modp::resultant_mod(f, gg, p));
    }
    per_prime_coef[pi] = modp::interpolate_mod(xs, vs, p);
  }
  UPoly out;
  out.c.resize(npts);
  std::vector<uint64_t> res(nprimes);
  for (int j = 0; j < npts; j++) {
    for (size_t pi = 0; pi < nprimes; pi++)
      res[pi] = (j < (int)per_prime_coef[pi].size()) ? per_prime_coef[pi][j] : 0;
    out.c[j] = Rat(modp::crt_symmetric(res, ps));
  }
  out.trim();
  return out;
}

}  // namespace nrange
