#pragma once
// Matrices used across the test binaries, plus small builder helpers.

#include "nrange/linalg.hpp"
#include <tuple>
#include <vector>

namespace fx {

using nrange::ComplexMatrix;
using nrange::GRat;
using nrange::Int;
using nrange::Rat;

inline ComplexMatrix mk(int n, std::vector<std::tuple<int, int, Rat, Rat>> ents) {
  ComplexMatrix A(n);
  for (auto& [i, j, re, im] : ents) A.at(i, j) = GRat(re, im);
  return A;
}

// f = t^4 - 5 t^2 x^2 + 4 x^4 - t^2 y^2; curve with a crunode at [0:0:1]
inline ComplexMatrix pringle() {
  return mk(4, {{0, 1, Rat(2), Rat(0)},
                {1, 0, Rat(2), Rat(0)},
                {1, 2, Rat(0), Rat(1)},
                {2, 1, Rat(0), Rat(1)},
                {2, 3, Rat(1), Rat(0)},
                {3, 2, Rat(1), Rat(0)}});
}

// f = t^4 - 30 t^2 (x^2 + y^2) + 25 x^4 + 434 x^2 y^2 + 25 y^4
inline ComplexMatrix quartic1() {
  return mk(4, {{0, 1, Rat(2), Rat(0)}, {1, 2, Rat(4), Rat(0)}, {2, 3, Rat(6), Rat(0)},
                {3, 0, Rat(8), Rat(0)}});
}

// f = (1/16)(t + x)(16 t^2 - x^2 - y^2)
inline ComplexMatrix circleandline() {
  return mk(3, {{0, 0, Rat(1), Rat(0)}, {1, 2, Rat(1, 2), Rat(0)}});
}

// quartic with Lambda_2 a segment [(4 - sqrt 41)/25, 1/3] on the real axis
inline ComplexMatrix quartic_seg() {
  ComplexMatrix Q(4);
  auto g = [&](int i, int j, Rat re, Rat im) { Q.at(i, j) = GRat(re, im); };
  g(0, 0, Rat(1, 2), Rat(0));
  g(0, 1, Rat(3, 50), Rat(0));
  g(0, 2, Rat(0), Rat(2, 25));
  g(0, 3, Rat(0), Rat(1, 5));
  g(1, 0, Rat(-3, 50), Rat(0));
  g(1, 1, Rat(-1, 2), Rat(0));
  g(1, 2, Rat(0), Rat(1, 5));
  g(1, 3, Rat(0), Rat(8, 25));
  g(2, 0, Rat(0), Rat(2, 25));
  g(2, 1, Rat(0), Rat(1, 5));
  g(2, 2, Rat(1, 3), Rat(0));
  g(2, 3, Rat(-6, 25), Rat(0));
  g(3, 0, Rat(0), Rat(1, 5));
  g(3, 1, Rat(0), Rat(8, 25));
  g(3, 2, Rat(6, 25), Rat(0));
  g(3, 3, Rat(-1, 3), Rat(0));
  return Q;
}

// quartic whose Lambda_2 endpoint line is tangent at one smooth point only
inline ComplexMatrix tritangent_endpoint() {
  return mk(4, {{0, 0, Rat(1), Rat(1)},
                {0, 1, Rat(1), Rat(0)},
                {0, 2, Rat(1), Rat(0)},
                {1, 0, Rat(1), Rat(0)},
                {1, 1, Rat(-1), Rat(0)},
                {1, 2, Rat(-1), Rat(0)},
                {2, 0, Rat(1), Rat(0)},
                {2, 1, Rat(-1), Rat(0)},
                {2, 2, Rat(-1), Rat(0)},
                {2, 3, Rat(-1), Rat(0)},
                {3, 2, Rat(-1), Rat(0)}});
}

// nilpotent 3x3 with Lambda_2 = {0}
inline ComplexMatrix ok_plane() { return mk(3, {{1, 2, Rat(2), Rat(0)}}); }

inline ComplexMatrix diag2(Rat a, Rat b) {
  return mk(2, {{0, 0, a, Rat(0)}, {1, 1, b, Rat(0)}});
}

// 6x6 family: nilpotent 2x2 block shifted by u(1+i), direct sum with quartic1.
// Lambda_3 shrinks from a disk to a point to empty as u decreases.
inline ComplexMatrix shifted_disk_family(const Rat& u) {
  ComplexMatrix A(6);
  A.at(0, 1) = GRat(Rat(3), Rat(0));
  A.at(0, 0) = GRat(u, u);
  A.at(1, 1) = GRat(u, u);
  A.at(2, 3) = GRat(Rat(2), Rat(0));
  A.at(3, 4) = GRat(Rat(4), Rat(0));
  A.at(4, 5) = GRat(Rat(6), Rat(0));
  A.at(5, 2) = GRat(Rat(8), Rat(0));
  return A;
}

// smooth irreducible sextic with empty Lambda_3: diag(1,1,-1+i,-1+i,-1-i,-1-i)
// plus (1/5) times a fixed integer perturbation
inline ComplexMatrix smooth_sextic() {
  ComplexMatrix A(6);
  int B[6][6] = {{0, 1, 1, -1, 0, 1},  {1, 0, 0, 0, 1, 0},  {-1, 1, 1, -1, 1, 1},
                 {1, 1, 1, 0, 1, 0},   {0, -1, 1, 1, 1, -1}, {-1, 0, 1, 0, 1, -1}};
  Rat d[6] = {Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(-1), Rat(-1)};
  Rat di[6] = {Rat(0), Rat(0), Rat(1), Rat(1), Rat(-1), Rat(-1)};
  for (int i = 0; i < 6; i++)
    for (int j = 0; j < 6; j++)
      A.at(i, j) = GRat(Rat(B[i][j]) / Rat(5) + (i == j ? d[i] : Rat(0)),
                        i == j ? di[i] : Rat(0));
  return A;
}

}  // namespace fx
