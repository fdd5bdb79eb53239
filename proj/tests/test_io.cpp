#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "nrange/io.hpp"
#include "nrange/kippenhahn.hpp"
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace nrange;

static int cli(std::vector<std::string> args) {
  std::vector<char*> argv;
  static std::string prog = "nrange";
  argv.push_back(prog.data());
  for (auto& a : args) argv.push_back(a.data());
  return run_cli((int)argv.size(), argv.data());
}

static std::string tmpfile_with(const std::string& name, const std::string& body) {
  std::string path = std::string("/tmp/nrange_test_") + name;
  std::ofstream(path) << body;
  return path;
}

TEST_CASE("matrix serialization round trip") {
  ComplexMatrix A = fx::quartic_seg();
  std::string s = serialize_matrix(A);
  std::istringstream in(s);
  ComplexMatrix B = parse_matrix(in, "mem");
  REQUIRE(B.n == A.n);
  CHECK(B.exact);
  for (int i = 0; i < A.n * A.n; i++) CHECK(B.e[i] == A.e[i]);
  CHECK(serialize_matrix(B) == s);

  // float mode
  std::string fj = R"({"n":2,"mode":"float","entries":[[[0.5,0],[1.25,-2]],[[0,0],[-1,0.125]]]})";
  std::istringstream fin(fj);
  ComplexMatrix F = parse_matrix(fin, "mem");
  CHECK(!F.exact);
  CHECK(F.at(0, 1) == GRat(Rat(5, 4), Rat(-2)));
  std::string fs = serialize_matrix(F);
  std::istringstream fin2(fs);
  ComplexMatrix F2 = parse_matrix(fin2, "mem");
  CHECK(serialize_matrix(F2) == fs);
}

TEST_CASE("matrix parse errors name the offending row") {
  std::istringstream bad(R"({"n":3,"mode":"exact","entries":[[],[]]})");
  CHECK_THROWS_WITH_AS(parse_matrix(bad, "bad.json"),
                       doctest::Contains("expected 3 rows, got 2"), std::runtime_error);
  std::istringstream bad2(R"({"n":1,"entries":[[["1","0","0"]]]})");
  CHECK_THROWS_AS(parse_matrix(bad2, "bad2.json"), std::runtime_error);
}

TEST_CASE("report determinism") {
  ComplexMatrix A = fx::pringle();
  auto R = compute_range(A, 2);
  CliConfig cfg;
  std::string r1 = make_report(A, {2}, {R}, cfg);
  std::string r2 = make_report(A, {2}, {R}, cfg);
  CHECK(r1 == r2);
  CHECK(r1.find("\"schema\": \"nrange-report/1\"") != std::string::npos);
  CHECK(r1.find("\"dim\": 0") != std::string::npos);
}

TEST_CASE("curve sampling stays on the curve") {
  auto K = kippenhahn_poly(fx::circleandline());
  auto cs = sample_curve(K, 360, 8.0);
  REQUIRE(!cs.points.empty());
  for (auto& p : cs.points) CHECK(std::abs(K.f.eval_double(1.0, p.x, p.y)) < 1e-7);
  std::string csv = curve_csv(cs);
  CHECK(csv.rfind("branch,theta,x,y\n", 0) == 0);
}

TEST_CASE("svg rendering") {
  ComplexMatrix A = fx::quartic1();
  auto K = kippenhahn_poly(A);
  auto R1 = compute_range(A, 1);
  auto R2 = compute_range(A, 2);
  std::string s1 = render_svg(K, {1, 2}, {R1, R2}, 360);
  std::string s2 = render_svg(K, {1, 2}, {R1, R2}, 360);
  CHECK(s1 == s2);
  CHECK(s1.find("<svg") != std::string::npos);
  CHECK(s1.find("<polygon") != std::string::npos);
  CHECK_THROWS_AS(render_svg(K, {}, {}, 360), std::domain_error);
}

TEST_CASE("cli entry points") {
  CHECK(worker_count() >= 1);
  CHECK(cli({"--help"}) == 0);
  CHECK(cli({"compute", "--definitely-not-a-flag"}) == 1);

  std::string good = tmpfile_with("p.json", serialize_matrix(fx::pringle()));
  std::string bad = tmpfile_with("bad.json", "{\"n\": 2}");
  std::string out = "/tmp/nrange_test_report.json";
  CHECK(cli({"compute", "--matrix", good, "--k", "2", "--out", out}) == 0);
  std::ifstream rin(out);
  std::stringstream ss;
  ss << rin.rdbuf();
  CHECK(ss.str().find("\"dim\": 0") != std::string::npos);
  CHECK(cli({"compute", "--matrix", bad, "--k", "1"}) == 2);
  CHECK(cli({"member", "--matrix", good, "--k", "2", "--point", "0,0",
             "--out", "/tmp/nrange_test_member.json"}) == 0);
  std::remove(good.c_str());
  std::remove(bad.c_str());
  std::remove(out.c_str());
  std::remove("/tmp/nrange_test_member.json");
}
