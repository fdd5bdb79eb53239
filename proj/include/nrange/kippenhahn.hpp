#pragma once
// The Kippenhahn polynomial f_A = det(tI + x Re(A) + y Im(A)) with exact
// coefficients, point multiplicities on V(f_A), affine changes of coordinates,
// and the real singular points of V(f_A^red).

#include "nrange/hompoly3.hpp"
#include "nrange/linalg.hpp"

namespace nrange {

struct KippenhahnData {
  HomPoly3 f;     // degree n, coefficient of t^n exactly 1
  HomPoly3 fred;  // squarefree part, lex-monic
  HermitianPair pair;
  int n = 0;
};

// Real projective point [p0:p1:p2], t/x/y order. Exact points carry rational
// coordinates scaled so the first nonzero one is 1; float points carry a unit
// vector with the first significant coordinate positive.
struct ProjPointR {
  bool exact = true;
  std::array<Rat, 3> q{Rat(0), Rat(0), Rat(0)};
  std::array<double, 3> fp{0, 0, 0};

  static ProjPointR from_exact(const Rat& p0, const Rat& p1, const Rat& p2);
  static ProjPointR from_float(double p0, double p1, double p2);
  void normalize();
  bool same_as(const ProjPointR& o, double tol = 1e-8) const;
};

// L(a,b) = (u01 + u11 a + u21 b, u02 + u12 a + u22 b)
struct AffineMap {
  Rat u01, u02, u11, u12, u21, u22;
  Rat det() const { return u11 * u22 - u21 * u12; }
  std::pair<Rat, Rat> apply(const Rat& a, const Rat& b) const;
  AffineMap inverse() const;
};

KippenhahnData kippenhahn_poly(const ComplexMatrix& A);

// Corank of p0 I + p1 Re(A) + p2 Im(A) = multiplicity of V(f_A) at p.
int multiplicity_at(const KippenhahnData& K, const ProjPointR& p);

// L.A = (u01 + i u02) I + (u11 + i u12) Re(A) + (u21 + i u22) Im(A)
ComplexMatrix apply_affine(const ComplexMatrix& A, const AffineMap& L);
// f(t + u01 x + u02 y, u11 x + u12 y, u21 x + u22 y)
HomPoly3 transform_poly(const HomPoly3& f, const AffineMap& L);

// All real projective singular points of V(fred), sorted canonically.
// Rational coordinates are exact; irrational ones are Newton-polished floats
// certified by a corank (multiplicity) check.
std::vector<ProjPointR> real_singular_points(const KippenhahnData& K);

}  // namespace nrange
