#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "nrange/boundary.hpp"
#include <algorithm>
#include <cmath>

using namespace nrange;

static BiPoly from_terms(int da, int db, std::vector<std::tuple<int, int, long>> terms) {
  BiPoly g(da, db);
  for (auto& [i, j, c] : terms) g.at(i, j) = Rat(Int(c));
  g.trim();
  g.normalize_canonical();
  return g;
}

static bool same_poly(BiPoly a, BiPoly b) {
  a.normalize_canonical();
  b.normalize_canonical();
  return a == b || a == b * Rat(-1);
}

TEST_CASE("boundary polynomial goldens") {
  // diag(1,-1): the dual of two points degenerates to the line b = 0
  auto BD = boundary_poly(kippenhahn_poly(fx::diag2(Rat(1), Rat(-1))));
  BiPoly lineb(0, 1);
  lineb.at(0, 1) = Rat(1);
  lineb.trim();
  CHECK(same_poly(BD.g, lineb));

  // diag(i,0,1): g = a b (a + b - 1)
  ComplexMatrix D3 = fx::mk(3, {{0, 0, Rat(0), Rat(1)}, {2, 2, Rat(1), Rat(0)}});
  auto B3 = boundary_poly(kippenhahn_poly(D3));
  BiPoly la(1, 0), lb(0, 1), lab(1, 1);
  la.at(1, 0) = Rat(1);
  la.trim();
  lb.at(0, 1) = Rat(1);
  lb.trim();
  lab = BiPoly(1, 1);
  lab.at(1, 0) = Rat(1);
  lab.at(0, 1) = Rat(1);
  lab.at(0, 0) = Rat(-1);
  lab.trim();
  CHECK(same_poly(B3.g, la * lb * lab));

  // circle x line: (1 - 16a^2 - 16b^2)((1-a)^2 - 15 b^2)
  auto BC = boundary_poly(kippenhahn_poly(fx::circleandline()));
  BiPoly c1(2, 2), c2(2, 2);
  c1.at(0, 0) = Rat(1);
  c1.at(2, 0) = Rat(-16);
  c1.at(0, 2) = Rat(-16);
  c1.trim();
  c2.at(0, 0) = Rat(1);
  c2.at(1, 0) = Rat(-2);
  c2.at(2, 0) = Rat(1);
  c2.at(0, 2) = Rat(-15);
  c2.trim();
  CHECK(same_poly(BC.g, c1 * c2));
}

TEST_CASE("degree 12 dual golden") {
  auto BQ = boundary_poly(kippenhahn_poly(fx::quartic1()));
  BiPoly G = from_terms(
      12, 12,
      {{12, 0, 15625},      {10, 2, 273750},       {8, 4, 90375},        {6, 6, 549236},
       {4, 8, 90375},       {2, 10, 273750},       {0, 12, 15625},       {10, 0, -1368750},
       {8, 2, -17139750},   {6, 4, 44934900},      {4, 6, 44934900},     {2, 8, -17139750},
       {0, 10, -1368750},   {8, 0, 47610625},      {6, 2, 429249700},    {4, 4, -1058169786},
       {2, 6, 429249700},   {0, 8, 47610625},      {6, 0, -838188000},   {4, 2, -5975989920},
       {2, 4, -5975989920}, {0, 6, -838188000},    {4, 0, 7621461600},   {2, 2, 39076977600},
       {0, 4, 7621461600},  {2, 0, -30526848000},  {0, 2, -30526848000}, {0, 0, 21083040000}});
  CHECK(same_poly(BQ.g, G));
  CHECK(BQ.g.total_degree() == 12);
}

TEST_CASE("sextic dual with a peeled singular line") {
  auto BW = boundary_poly(kippenhahn_poly(fx::tritangent_endpoint()));
  BiPoly WG = from_terms(
      6, 6, {{6, 0, 49},     {5, 1, -644},   {5, 0, 196},   {4, 2, 3824},  {4, 1, -2212},
             {4, 0, 98},     {3, 3, -12172}, {3, 2, 8942},  {3, 1, 56},    {3, 0, -294},
             {2, 4, 21248},  {2, 3, -16084}, {2, 2, -3420}, {2, 1, 2324},  {2, 0, -147},
             {1, 5, -18836}, {1, 4, 11860},  {1, 3, 9244},  {1, 2, -4754}, {1, 1, 56},
             {1, 0, 98},     {0, 6, 7260},   {0, 5, -5132}, {0, 4, -1739}, {0, 3, -1600},
             {0, 2, 2402},   {0, 1, -672},   {0, 0, 49}});
  bool found_sextic = false, found_line = false;
  for (auto& c : BW.components) {
    if (same_poly(c.factor, WG)) {
      found_sextic = true;
      CHECK(!c.singular_line);
    }
    if (c.factor.total_degree() == 1 && c.singular_line) found_line = true;
  }
  CHECK(found_sextic);
  CHECK(found_line);
  BiPoly lineb(0, 1);
  lineb.at(0, 1) = Rat(1);
  lineb.trim();
  CHECK(same_poly(BW.g, WG * lineb));
}

TEST_CASE("tangent lines through a singularity") {
  auto KD = kippenhahn_poly(fx::diag2(Rat(1), Rat(-1)));
  auto TD = singularity_tangents(KD, ProjPointR::from_exact(Rat(0), Rat(0), Rat(1)));
  REQUIRE(TD.lines.size() == 2);
  std::vector<double> as;
  for (auto& t : TD.lines) {
    as.push_back(t.exact ? to_double(t.a) : t.af);
    CHECK(std::abs(t.exact ? to_double(t.b) : t.bf) < 1e-9);
    CHECK(t.certified);
  }
  std::sort(as.begin(), as.end());
  CHECK(as[0] == doctest::Approx(-1.0));
  CHECK(as[1] == doctest::Approx(1.0));

  // three tangents at the triple point, all on the real axis
  auto KW = kippenhahn_poly(fx::tritangent_endpoint());
  auto TW = singularity_tangents(KW, ProjPointR::from_exact(Rat(0), Rat(0), Rat(1)));
  REQUIRE(TW.lines.size() == 3);
  for (auto& t : TW.lines) CHECK(std::abs(t.exact ? to_double(t.b) : t.bf) < 1e-9);
}

TEST_CASE("antipodal spans") {
  auto KQ = kippenhahn_poly(fx::quartic_seg());
  auto spanQ = antipodal_span(KQ, 2);
  CHECK(spanQ.dimV == 0);
  REQUIRE(spanQ.S.size() == 1);
  CHECK(spanQ.S[0].same_as(ProjPointR::from_exact(Rat(0), Rat(0), Rat(1))));
  // tangents through the antipodal singularity include the segment endpoints
  auto ts = singularity_tangents(KQ, spanQ.S[0]);
  bool third = false, left = false;
  double ep = (4.0 - std::sqrt(41.0)) / 25.0;
  for (auto& L : ts.lines) {
    double a = L.exact ? to_double(L.a) : L.af;
    if (std::abs(a - 1.0 / 3) < 1e-8) third = true;
    if (std::abs(a - ep) < 1e-8) left = true;
  }
  CHECK(third);
  CHECK(left);

  auto KP = kippenhahn_poly(fx::pringle());
  auto spanP = antipodal_span(KP, 2);
  CHECK(spanP.dimV == 0);
  REQUIRE(spanP.S.size() == 1);
  CHECK(spanP.S[0].same_as(ProjPointR::from_exact(Rat(0), Rat(0), Rat(1))));
}
