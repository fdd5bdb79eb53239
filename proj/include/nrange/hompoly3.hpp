#pragma once
// Homogeneous trivariate polynomials in (t, x, y) with exact rational
// coefficients: the home of f_A and f_A^red. Variables are ordered t > x > y
// for the lexicographic normalization convention.

#include "nrange/bipoly.hpp"
#include "nrange/poly.hpp"
#include <array>
#include <map>

namespace nrange {

struct HomPoly3 {
  int degree = 0;
  std::map<std::array<int, 3>, Rat> coeffs;  // (i,j,l) -> coeff of t^i x^j y^l

  bool is_zero() const { return coeffs.empty(); }
  Rat get(int i, int j, int l) const {
    auto it = coeffs.find({i, j, l});
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  void set(int i, int j, int l, const Rat& v) {
    if (v == 0)
      coeffs.erase({i, j, l});
    else
      coeffs[{i, j, l}] = v;
  }
  static HomPoly3 zero(int deg) {
    HomPoly3 f;
    f.degree = deg;
    return f;
  }

  friend HomPoly3 operator+(const HomPoly3& p, const HomPoly3& q);
  friend HomPoly3 operator-(const HomPoly3& p, const HomPoly3& q);
  friend HomPoly3 operator*(const HomPoly3& p, const HomPoly3& q);
  friend HomPoly3 operator*(const HomPoly3& p, const Rat& s);
  friend bool operator==(const HomPoly3& p, const HomPoly3& q);

  Rat eval(const Rat& t, const Rat& x, const Rat& y) const;
  double eval_double(double t, double x, double y) const;
  HomPoly3 partial(int var) const;  // var: 0=t, 1=x, 2=y
  int deg_in(int var) const;

  // multiply by a rational so the lex-leading (t > x > y) coefficient is 1
  void normalize_lex_monic();
  // integer-cleared, content 1, lex-leading coefficient positive
  void normalize_canonical();

  // view as a polynomial in t whose coefficients are BiPoly in (x, y)
  std::vector<BiPoly> t_coefficients() const;
  static HomPoly3 from_t_coefficients(const std::vector<BiPoly>& c, int deg);

  // restriction to the affine chart t=1 as a bivariate polynomial in (x, y)
  BiPoly chart_t1() const;
};

// f^red: the squarefree part f / gcd(f, df/dt), lex-monic. Requires deg_t f >= 1
// (our f_A is monic in t so every irreducible factor shows up in the t-gcd).
HomPoly3 hp_squarefree(const HomPoly3& f);

// Maximal d with (t + a x + b y)^d | f, and f / ell^d (exact rational case).
std::pair<int, HomPoly3> divide_out_linear(const HomPoly3& f, const Rat& a, const Rat& b);
// Float coefficients case: divisibility up to relative remainder norm divtol.
std::pair<int, HomPoly3> divide_out_linear_float(const HomPoly3& f, double a, double b,
                                                 double divtol = 1e-8);

// h(y) = f(-a - b y, 1, y)
UPoly restrict_to_membership_line(const HomPoly3& f, const Rat& a, const Rat& b);

// general restriction f(r*q + s*p) to the line through points q, p as a
// univariate polynomial in s (chart r=1): f(q0 + s p0, q1 + s p1, q2 + s p2)
UPoly restrict_to_line(const HomPoly3& f, const std::array<Rat, 3>& q,
                       const std::array<Rat, 3>& p);

// Sylvester resultant of two HomPoly3 with respect to one variable
// (0=t, 1=x, 2=y); result has exponent 0 in that variable.
HomPoly3 hp_resultant(const HomPoly3& p, const HomPoly3& q, int var);
// Disc_var(f) = (-1)^(d(d-1)/2) Res_var(f, df/dvar) / lc when lc is constant;
// otherwise the sign-adjusted resultant, canonically normalized.
HomPoly3 hp_discriminant(const HomPoly3& f, int var);

struct LinearFactor {
  bool exact = true;  // coefficients known as exact rationals
  Rat a, b;           // factor t + a x + b y (valid when exact)
  double af = 0, bf = 0;
  int mult = 1;
};

// All real linear factors t + a x + b y of f (f monic in t), with
// multiplicities. Irrational coefficients are confirmed by float synthetic
// division at isolation precision and reported with exact=false.
std::vector<LinearFactor> linear_factors(const HomPoly3& f);

}  // namespace nrange
