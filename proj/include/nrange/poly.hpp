#pragma once
// Dense univariate polynomials over an exact ring, lowest degree first.
// The ring is anything providing the ring_* helpers below: Int, Rat, or
// recursively Poly<R> itself (giving Z[x][y] etc. for elimination).

#include "nrange/rational.hpp"
#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace nrange {

inline bool ring_is_zero(const Int& a) { return a == 0; }
inline bool ring_is_zero(const Rat& a) { return a == 0; }
inline Int ring_divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rat ring_divexact(const Rat& a, const Rat& b) { return a / b; }
inline Int ring_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
// gcd(a/b, c/d) = gcd(ad, cb)/(bd); makes rational "content" behave like the
// integer one so primitive parts come out integer with coprime coefficients.
inline Rat ring_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Int n = ring_gcd(Int(a.get_num() * b.get_den()), Int(b.get_num() * a.get_den()));
  return Rat(n) / Rat(a.get_den() * b.get_den());
}
inline Int ring_from_int(int n, const Int*) { return Int(n); }
inline Rat ring_from_int(int n, const Rat*) { return Rat(n); }

template <class R>
struct Poly {
  std::vector<R> c;  // c[i] is the coefficient of x^i

  Poly() = default;
  explicit Poly(const R& a) {
    if (!ring_is_zero(a)) c.push_back(a);
  }
  explicit Poly(std::vector<R> v) : c(std::move(v)) { trim(); }

  void trim() {
    while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }  // -1 for the zero polynomial
  const R& lead() const { return c.back(); }
  const R& coeff(int i) const {
    static const R zero{};
    return (i >= 0 && i < (int)c.size()) ? c[i] : zero;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    Poly r;
    r.c.resize(std::max(p.c.size(), q.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) {
      if (i < p.c.size()) r.c[i] = r.c[i] + p.c[i];
      if (i < q.c.size()) r.c[i] = r.c[i] + q.c[i];
    }
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    Poly r;
    r.c.resize(std::max(p.c.size(), q.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) {
      if (i < p.c.size()) r.c[i] = r.c[i] + p.c[i];
      if (i < q.c.size()) r.c[i] = r.c[i] - q.c[i];
    }
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& p) {
    Poly r = p;
    for (auto& a : r.c) a = -a;
    return r;
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    Poly r;
    r.c.assign(p.c.size() + q.c.size() - 1, R{});
    for (size_t i = 0; i < p.c.size(); i++)
      for (size_t j = 0; j < q.c.size(); j++) r.c[i + j] = r.c[i + j] + p.c[i] * q.c[j];
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& p, const R& a) {
    if (ring_is_zero(a)) return Poly();
    Poly r = p;
    for (auto& x : r.c) x = x * a;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& p, const Poly& q) { return (p - q).is_zero(); }

  Poly derivative() const {
    Poly r;
    for (int i = 1; i <= deg(); i++) r.c.push_back(c[i] * ring_from_int(i, (const R*)nullptr));
    r.trim();
    return r;
  }
  // Horner evaluation in the coefficient ring.
  R eval(const R& x) const {
    R v{};
    for (int i = deg(); i >= 0; i--) v = v * x + c[i];
    return v;
  }
  Poly shifted(int k) const {  // multiply by x^k
    if (is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + k, R{});
    std::copy(c.begin(), c.end(), r.c.begin() + k);
    return r;
  }
};

template <class R>
Poly<R> ring_from_int(int n, const Poly<R>*) {
  return Poly<R>(ring_from_int(n, (const R*)nullptr));
}

using IPoly = Poly<Int>;
using UPoly = Poly<Rat>;
using IPoly2 = Poly<IPoly>;  // Z[inner][outer]

template <class R>
bool ring_is_zero(const Poly<R>& p) {
  return p.is_zero();
}

template <class R>
R poly_content(const Poly<R>& p) {
  R g{};
  for (const auto& a : p.c) g = ring_gcd(g, a);
  return g;
}
template <class R>
Poly<R> poly_primitive(const Poly<R>& p, R* content_out = nullptr) {
  if (p.is_zero()) {
    if (content_out) *content_out = R{};
    return p;
  }
  R g = poly_content(p);
  if (content_out) *content_out = g;
  Poly<R> r = p;
  for (auto& a : r.c) a = ring_divexact(a, g);
  return r;
}

// Exact division; asserts divisibility.
template <class R>
Poly<R> poly_divexact(const Poly<R>& p, const Poly<R>& q) {
  if (q.is_zero()) throw std::domain_error("poly_divexact: division by zero");
  if (p.is_zero()) return Poly<R>();
  assert(p.deg() >= q.deg());
  Poly<R> rem = p, quo;
  quo.c.assign(p.deg() - q.deg() + 1, R{});
  for (int i = p.deg() - q.deg(); i >= 0; i--) {
    if (rem.deg() == i + q.deg() && !rem.is_zero()) {
      R t = ring_divexact(rem.lead(), q.lead());
      quo.c[i] = t;
      rem = rem - (q * t).shifted(i);
    }
  }
  assert(rem.is_zero());
  quo.trim();
  return quo;
}

template <class R>
bool poly_divides(const Poly<R>& q, const Poly<R>& p);

// Pseudo-remainder: lc(q)^(deg p - deg q + 1) p = s q + prem.
template <class R>
Poly<R> poly_prem(Poly<R> p, const Poly<R>& q) {
  int d = p.deg() - q.deg();
  if (d < 0) return p;
  const R& lq = q.lead();
  for (int i = d; i >= 0; i--) {
    if (p.deg() == i + q.deg() && !p.is_zero()) {
      R lp = p.lead();
      p = p * lq - (q * lp).shifted(i);
    } else {
      p = p * lq;
    }
  }
  return p;
}

// Primitive PRS gcd; result is primitive with content gcd folded back in.
template <class R>
Poly<R> poly_gcd(Poly<R> p, Poly<R> q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  R cp, cq;
  p = poly_primitive(p, &cp);
  q = poly_primitive(q, &cq);
  R cg = ring_gcd(cp, cq);
  if (p.deg() < q.deg()) std::swap(p, q);
  while (!q.is_zero()) {
    Poly<R> r = poly_prem(p, q);
    p = q;
    q = poly_primitive(r);
    if (p.deg() < q.deg()) std::swap(p, q);
  }
  if (p.deg() == 0) return Poly<R>(cg);
  return p * cg;
}
template <class R>
R ring_gcd(const Poly<R>& p, const Poly<R>& q) = delete;  // use poly_gcd

inline IPoly ring_gcd(const IPoly& a, const IPoly& b) { return poly_gcd(a, b); }
inline IPoly ring_divexact(const IPoly& a, const IPoly& b) { return poly_divexact(a, b); }
inline IPoly2 ring_gcd(const IPoly2& a, const IPoly2& b) { return poly_gcd(a, b); }
inline IPoly2 ring_divexact(const IPoly2& a, const IPoly2& b) { return poly_divexact(a, b); }
// rational-coefficient nested polynomials (used by Bareiss resultants over Q)
inline UPoly ring_divexact(const UPoly& a, const UPoly& b) { return poly_divexact(a, b); }
inline Poly<UPoly> ring_divexact(const Poly<UPoly>& a, const Poly<UPoly>& b) {
  return poly_divexact(a, b);
}

// Divisibility over the fraction field (pseudo-remainder vanishes).
template <class R>
bool poly_divides(const Poly<R>& q, const Poly<R>& p) {
  if (q.is_zero()) return p.is_zero();
  if (p.is_zero()) return true;
  if (p.deg() < q.deg()) return false;
  return poly_prem(p, q).is_zero();
}

// Resultant via fraction-free Bareiss elimination of the Sylvester matrix,
// using the FORMAL degrees dp, dq (pass p.deg(), q.deg() for the usual one).
// Exact over any integral domain with ring_divexact.
template <class R>
R sylvester_resultant(const Poly<R>& p, const Poly<R>& q, int dp, int dq) {
  if (dp < 0 || dq < 0) throw std::domain_error("resultant of zero polynomial");
  if (dp == 0 && dq == 0) throw std::domain_error("resultant: both degree 0");
  int n = dp + dq;
  std::vector<std::vector<R>> M(n, std::vector<R>(n, R{}));
  for (int i = 0; i < dq; i++)
    for (int j = 0; j <= dp; j++) M[i][i + j] = p.coeff(dp - j);
  for (int i = 0; i < dp; i++)
    for (int j = 0; j <= dq; j++) M[dq + i][i + j] = q.coeff(dq - j);
  // Bareiss
  R denom;
  bool have_denom = false;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    int piv = -1;
    for (int i = k; i < n; i++)
      if (!ring_is_zero(M[i][k])) {
        piv = i;
        break;
      }
    if (piv < 0) return R{};  // singular: resultant 0
    if (piv != k) {
      std::swap(M[piv], M[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++) {
        R t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = have_denom ? ring_divexact(t, denom) : t;
      }
      M[i][k] = R{};
    }
    denom = M[k][k];
    have_denom = true;
  }
  R r = M[n - 1][n - 1];
  if (sign < 0) r = -r;
  return r;
}

template <class R>
R poly_resultant(const Poly<R>& p, const Poly<R>& q) {
  return sylvester_resultant(p, q, p.deg(), q.deg());
}

// Conversions and small utilities for the concrete instantiations.
IPoly upoly_clear_denominators(const UPoly& p);  // integer multiple, content 1
UPoly upoly_from_ipoly(const IPoly& p);
UPoly upoly_monic(const UPoly& p);
UPoly upoly_squarefree(const UPoly& p);  // p / gcd(p, p'), monic
IPoly ipoly_squarefree(const IPoly& p);  // content-1, positive leading coeff
double ipoly_eval_double(const IPoly& p, double x);
int ipoly_sign_at(const IPoly& p, const Rat& x);  // exact sign
UPoly upoly_gcd(const UPoly& p, const UPoly& q);  // monic gcd over Q

// Yun squarefree decomposition: p ~ prod_i out[i]^(i+1), out[i] squarefree,
// pairwise coprime (out entries may be constant 1).
std::vector<UPoly> upoly_yun(const UPoly& p);

}  // namespace nrange
