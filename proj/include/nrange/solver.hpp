#pragma once
// Top-level classification of the rank-k numerical range: dimension in
// {-1,0,1,2} plus witnesses (point, segment endpoints, or interior
// representatives per bounded component), and the dense halfplane sampling
// oracle used both for plots and for cross-checking.

#include "nrange/boundary.hpp"
#include "nrange/membership.hpp"
#include <optional>
#include <string>

namespace nrange {

struct RangeConfig {
  double tol = 1e-9;
  int samples = 1440;  // halfplane sample count on the sampled path
};

struct PlanePoint {
  bool exact = true;
  Rat a, b;
  double af = 0, bf = 0;
  double x() const { return exact ? to_double(a) : af; }
  double y() const { return exact ? to_double(b) : bf; }
  static PlanePoint from_exact(const Rat& a, const Rat& b) { return {true, a, b, to_double(a), to_double(b)}; }
  static PlanePoint from_float(double a, double b) { return {false, Rat(0), Rat(0), a, b}; }
};

struct SupportPolygon {
  std::vector<std::pair<double, double>> vertices;  // convex, counterclockwise
  std::vector<double> thetas;
  double rho = 0;  // max |extreme eigenvalue| over the samples
  bool empty() const { return vertices.empty(); }
  double area() const;
  double diameter() const;
  std::pair<double, double> centroid() const;
};

struct RangeResult {
  int dim = -1;
  std::optional<PlanePoint> point;                       // dim = 0
  std::optional<std::pair<PlanePoint, PlanePoint>> endpoints;  // dim = 1
  std::optional<BoundaryPoly> g;                         // dim = 2, exact path
  std::vector<PlanePoint> representatives;               // dim = 2
  std::optional<SupportPolygon> polygon;                 // set on the sampled path
  std::vector<std::string> diagnostics;                  // which branch fired
  bool ambiguous = false;  // some margin stayed within tol after the 10x retest
  KippenhahnData kip;
};

// Main algorithm, k < (n+1)/2. Witnesses pass the membership test; candidates
// whose margin lands within tol are retested at 10x tighter tolerance and
// flagged when still ambiguous.
RangeResult compute_range(const ComplexMatrix& A, int k, const RangeConfig& cfg = {});

// (n+1)/2 <= k <= n: Lambda_k is empty or the single point coming from a real
// linear factor of f_A of multiplicity >= 2k-n. Throws on multiple passing
// points (the output contract allows at most one).
RangeResult compute_range_high_k(const ComplexMatrix& A, int k, const RangeConfig& cfg = {});

// Dispatch on 2k < n+1.
RangeResult compute_range_auto(const ComplexMatrix& A, int k, const RangeConfig& cfg = {});

// Sweep representatives: at least one interior point in every bounded
// connected component of R^2 \ V(g). g must be nonconstant and squarefree.
std::vector<std::pair<Rat, Rat>> bounded_component_reps(const BiPoly& g);

// Intersection of the m supporting halfplanes a cos(th) + b sin(th) <= lambda_k.
// Outer approximation of Lambda_k, converging as m grows. m >= 8.
SupportPolygon halfplane_polygon(const ComplexMatrix& A, int k, int m);
SupportPolygon halfplane_polygon(const HermitianPair& pair, int n, int k, int m);

}  // namespace nrange
