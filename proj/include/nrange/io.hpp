#pragma once
// Matrix and report JSON formats, curve sampling for CSV plots, SVG
// rendering, and the command-line driver.

#include "nrange/solver.hpp"
#include <iosfwd>

namespace nrange {

// {"n": .., "mode": "exact"|"float", "entries": [[entry, ..], ..]} where an
// exact entry is ["num_re","den_re","num_im","den_im"] and a float entry is
// [re, im]. parse(serialize(M)) round-trips bit-exactly in both modes.
ComplexMatrix parse_matrix(std::istream& in, const std::string& origin);
ComplexMatrix parse_matrix_file(const std::string& path);
std::string serialize_matrix(const ComplexMatrix& A);

struct CliConfig {
  double tol = 1e-9;
  int samples = 720;
  std::string mode = "exact";
};

// Schema-versioned report; identical bytes for identical input and config.
std::string make_report(const ComplexMatrix& A, const std::vector<int>& ks,
                        const std::vector<RangeResult>& results, const CliConfig& cfg);

// The real curve V(f_A) in the chart t=1, sampled per eigenvalue branch:
// branch i at angle th is the point -(cos th, sin th)/lambda_i(th). Branches
// break where lambda_i crosses 0 (the curve point escapes to infinity).
struct CurveSamples {
  struct Point {
    int branch;
    double theta, x, y;
  };
  std::vector<Point> points;  // Newton-polished so |f(1,x,y)| stays tiny
};
CurveSamples sample_curve(const KippenhahnData& K, int m, double box_radius);

std::string curve_csv(const CurveSamples& cs);

// Deterministic figure: curve branches as polylines, each Lambda_k as a
// filled polygon (darker for larger k), witnesses as marked points.
std::string render_svg(const KippenhahnData& K, const std::vector<int>& ks,
                       const std::vector<RangeResult>& results, int samples);

// NRANGE_THREADS cap; 0 or unset picks the hardware count.
int worker_count();

// Exit codes: 0 ok, 1 usage, 2 parse error, 3 unresolved numerical ambiguity.
int run_cli(int argc, char** argv);

}  // namespace nrange
