#pragma once
// Dense bivariate polynomials over Q in the dual-plane variables (a, b),
// with squarefree part, exact resultants in a (modular CRT backend for the
// big cases), and canonical normalization for golden comparisons.

#include "nrange/poly.hpp"

namespace nrange {

struct BiPoly {
  int da = -1, db = -1;  // formal degrees; -1,-1 for zero
  std::vector<Rat> c;    // c[i*(db+1)+j] = coeff of a^i b^j

  BiPoly() = default;
  BiPoly(int degA, int degB) : da(degA), db(degB), c((degA + 1) * (degB + 1), Rat(0)) {}
  static BiPoly constant(const Rat& v) {
    BiPoly r(0, 0);
    r.c[0] = v;
    r.trim();
    return r;
  }
  bool is_zero() const { return da < 0; }
  Rat& at(int i, int j) { return c[i * (db + 1) + j]; }
  const Rat& at(int i, int j) const { return c[i * (db + 1) + j]; }
  Rat get(int i, int j) const {
    if (is_zero() || i < 0 || j < 0 || i > da || j > db) return Rat(0);
    return at(i, j);
  }
  void trim();
  int deg_a() const { return da; }
  int deg_b() const { return db; }
  int total_degree() const;

  friend BiPoly operator+(const BiPoly& p, const BiPoly& q);
  friend BiPoly operator-(const BiPoly& p, const BiPoly& q);
  friend BiPoly operator*(const BiPoly& p, const BiPoly& q);
  friend BiPoly operator*(const BiPoly& p, const Rat& s);
  friend bool operator==(const BiPoly& p, const BiPoly& q) { return (p - q).is_zero(); }

  BiPoly partial_a() const;
  BiPoly partial_b() const;
  Rat eval(const Rat& a, const Rat& b) const;
  double eval_double(double a, double b) const;
  UPoly eval_at_b(const Rat& b) const;  // univariate in a
  UPoly eval_at_a(const Rat& a) const;  // univariate in b

  // nested views (integer-cleared): polynomial in a with Z[b] coefficients
  IPoly2 as_poly_in_a() const;
  IPoly2 as_poly_in_b() const;
  static BiPoly from_poly_in_a(const IPoly2& p);
  static BiPoly from_poly_in_b(const IPoly2& p);

  // substitution (a,b) -> (a, a+b); used to degenerate-proof the
  // bounded-components sweep when g does not involve a
  BiPoly shear_b_plus_a() const;

  // integer-cleared, content 1, leading coefficient (lex order a > b) positive
  void normalize_canonical();
  // max |coefficient| = 1 (float view for residual checks)
  double max_abs_coeff() const;
};

// squarefree part (exact); cheap specialization check first, full gcd only
// when the specialization shows a repeated factor
BiPoly bipoly_squarefree(const BiPoly& g);

bool bipoly_divides(const BiPoly& d, const BiPoly& g);
BiPoly bipoly_divexact(const BiPoly& g, const BiPoly& d);

// Res_a(g, h) as a univariate polynomial in b, using the formal a-degrees of
// g and h. Exact; evaluation/interpolation modulo 62-bit primes with CRT.
UPoly bipoly_resultant_a(const BiPoly& g, const BiPoly& h);

}  // namespace nrange
