#pragma once
// The boundary polynomial g_A (dual curve plus singular-point lines), the
// tangent lines through a singular point, the antipodal singular set and its
// span, and tritangent line candidates.

#include "nrange/kippenhahn.hpp"

namespace nrange {

struct BoundaryPoly {
  BiPoly g;  // squarefree, canonically normalized
  struct Component {
    BiPoly factor;
    bool singular_line = false;  // else part of the dual-curve product
  };
  std::vector<Component> components;
  bool recovered_infinity_lines = false;  // lines from singular points at y=0
};

struct TangentLine {
  bool exact = true;
  Rat a, b;
  double af = 0, bf = 0;
  bool certified = false;  // restriction factoring confirmed type (I)/(II)
};
struct TangentSet {
  ProjPointR origin;
  std::vector<TangentLine> lines;
};

struct AntipodalSpan {
  std::vector<ProjPointR> S;
  int dimV = -1;  // -1 empty, 0 point, 1 line, 2 all of P^2
  bool has_vperp = false;
  double vp_a = 0, vp_b = 0;          // [1:a:b] when dimV = 1 and v0 != 0
  std::array<double, 3> covector{0, 0, 0};  // line V = {z : w.z = 0}
};

// g_A via the chart discriminant Res_x(dF/dx, dF/dy), F = fred(-ax-by, x, y),
// plus recovery of lines coming from singular points on y = 0.
BoundaryPoly boundary_poly(const KippenhahnData& K);

// All real lines t + ax + by that are p-tangent, via the coordinate change
// sending p to [0:0:1].
TangentSet singularity_tangents(const KippenhahnData& K, const ProjPointR& p);

AntipodalSpan antipodal_span(const KippenhahnData& K, int k, double tol = 1e-7);

// Superset of the (a,b) with t + ax + by tritangent to V(f_A) or dividing
// f_A. Exact (= the linear factors) below degree 6; degree >= 6 adds the real
// singular locus of g_A.
std::vector<std::pair<double, double>> tritangent_candidates(const KippenhahnData& K);

// Intersection profile of fred with the line t + ax + by = 0 through p:
// degree drop (vanishing order at p) and whether the restriction has a real
// repeated root elsewhere. Used to certify p-tangency.
struct LineRestriction {
  int drop = 0;  // m - deg of the restriction = intersection mult at p
  bool square_factor = false;
};
LineRestriction restrict_profile(const HomPoly3& fred, const ProjPointR& p, double a, double b);

}  // namespace nrange
