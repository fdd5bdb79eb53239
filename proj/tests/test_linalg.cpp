#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "nrange/linalg.hpp"
#include <cmath>

using namespace nrange;

TEST_CASE("hermitian decomposition") {
  ComplexMatrix A = fx::mk(2, {{0, 1, Rat(2), Rat(4)}});
  auto pr = hermitian_parts(A);
  CHECK(pr.re.is_hermitian());
  CHECK(pr.im.is_hermitian());
  // A = Re + i Im reassembles
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) {
      GRat v = pr.re.at(i, j) + GRat(Rat(0), Rat(1)) * pr.im.at(i, j);
      CHECK(v == A.at(i, j));
    }
  CHECK(pr.re.at(0, 1) == GRat(Rat(1), Rat(2)));
  CHECK(pr.im.at(0, 1) == GRat(Rat(2), Rat(-1)));
}

TEST_CASE("pencil eigenvalues") {
  ComplexMatrix D = fx::diag2(Rat(1), Rat(-1));
  auto pr = hermitian_parts(D);
  auto ev = lambda_all(pr, 1.0, 0.0);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(-1.0));
  CHECK(lambda_k(pr, 1, 1.0, 0.0) == doctest::Approx(1.0));
  CHECK(lambda_k(pr, 2, 1.0, 0.0) == doctest::Approx(-1.0));
  // scaling: eigenvalues are homogeneous in (x, y)
  CHECK(lambda_k(pr, 1, 3.0, 0.0) == doctest::Approx(3.0));

  // disk of radius 1: lambda_1(theta) = 1 for all theta
  ComplexMatrix S = fx::mk(2, {{0, 1, Rat(2), Rat(0)}});
  auto ps = hermitian_parts(S);
  for (int j = 0; j < 8; j++) {
    double th = 2 * M_PI * j / 8;
    CHECK(lambda_k(ps, 1, std::cos(th), std::sin(th)) == doctest::Approx(1.0));
  }
}

TEST_CASE("support samples") {
  ComplexMatrix D = fx::diag2(Rat(1), Rat(-1));
  auto pr = hermitian_parts(D);
  auto ss = sample_Ok(pr, 1, 16);
  REQUIRE(ss.size() == 16);
  CHECK(ss[0].theta == doctest::Approx(0.0));
  CHECK(ss[0].point[0] == doctest::Approx(1.0));  // lambda_1 at theta=0
  CHECK(ss[0].point[1] == doctest::Approx(-1.0));
  CHECK(ss[0].point[2] == doctest::Approx(0.0));
  CHECK(ss[8].point[0] == doctest::Approx(1.0));  // symmetric spectrum
}
