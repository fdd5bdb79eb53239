#pragma once
// Certified real-root isolation for exact univariate polynomials
// (Descartes/VCA bisection), plus a sign-scan fallback for very high degree
// and a floating companion-matrix solver for float-mode queries.

#include "nrange/poly.hpp"

namespace nrange {

struct RootIsolation {
  struct Interval {
    Rat lo, hi;    // lo <= root <= hi; lo == hi for an exactly known root
    int mult = 1;  // multiplicity hint
  };
  std::vector<Interval> intervals;  // sorted, pairwise disjoint
  // True when the isolation is certified complete (Descartes path).  The
  // sign-scan fallback used above degree kExactDegreeLimit cannot certify
  // that no close root pair was skipped and reports false.
  bool complete = true;
};

inline constexpr int kExactDegreeLimit = 128;

// All distinct real roots of p, isolated to intervals of width <= precision.
RootIsolation real_roots(const UPoly& p, const Rat& precision);

// Sign-scan isolation restricted to [lo, hi] on a grid of the given size;
// always reports complete = false unless the Descartes path was usable.
RootIsolation real_roots_scan(const IPoly& p, double lo, double hi, int grid,
                              const Rat& precision);

// Real roots of a double-coefficient polynomial (companion matrix);
// roots with |imag| <= imag_tol * scale are accepted as real.
std::vector<double> real_roots_double(const std::vector<double>& coeffs_low_first,
                                      double imag_tol = 1e-8);

// Cauchy-style bound: all complex roots have |z| < bound.
double ipoly_root_bound(const IPoly& p);

}  // namespace nrange
