#include "nrange/membership.hpp"

#include "nrange/roots.hpp"
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nrange {

namespace {

MembershipVerdict run_test(const KippenhahnData& K, int k, double af, double bf,
                           const std::vector<double>& roots, int ell_power, double tol) {
  int n = K.n;
  if (k < 1 || k > n) throw std::out_of_range("membership_test: k out of range");
  std::vector<double> pts;
  if (roots.empty()) {
    pts.push_back(0.0);
  } else {
    pts.push_back(roots.front() - 1.0);
    for (size_t i = 0; i + 1 < roots.size(); i++) pts.push_back(0.5 * (roots[i] + roots[i + 1]));
    pts.push_back(roots.back() + 1.0);
  }
  MembershipVerdict v;
  v.ell_power = ell_power;
  v.margin = std::numeric_limits<double>::infinity();
  for (double s : pts) {
    std::vector<double> ev = lambda_all(K.pair, 1.0, s);
    double line = af + bf * s;
    double lk = ev[k - 1], lnk = ev[n - k];
    v.witnesses.push_back({s, lk, lnk, line});
    v.margin = std::min(v.margin, std::min(lk - line, line - lnk));
  }
  v.member = v.margin >= -tol;
  v.three_way = (v.margin > tol) ? 1 : (v.margin < -tol ? -1 : 0);
  return v;
}

}  // namespace

MembershipVerdict membership_test(const KippenhahnData& K, int k, const Rat& a, const Rat& b,
                                  double tol) {
  auto [d, ftilde] = divide_out_linear(K.f, a, b);
  UPoly h = restrict_to_membership_line(ftilde, a, b);
  if (h.is_zero())
    throw std::logic_error("membership_test: line still divides after maximal division");
  std::vector<double> roots;
  RootIsolation ri = real_roots(h, Rat(Int(1), Int(1000000000000L)));
  for (const auto& iv : ri.intervals) roots.push_back(to_double((iv.lo + iv.hi) / 2));
  return run_test(K, k, to_double(a), to_double(b), roots, d, tol);
}

MembershipVerdict membership_test_float(const KippenhahnData& K, int k, double a, double b,
                                        double tol) {
  auto [d, ftilde] = divide_out_linear_float(K.f, a, b);
  // h(y) = ftilde(-a - b y, 1, y), evaluated in doubles
  int nt = ftilde.deg_in(0);
  std::vector<std::vector<double>> tp(nt + 1);
  tp[0] = {1.0};
  for (int i = 1; i <= nt; i++) {
    tp[i].assign(i + 1, 0.0);
    for (int j = 0; j < i; j++) {
      tp[i][j] += -a * tp[i - 1][j];
      tp[i][j + 1] += -b * tp[i - 1][j];
    }
  }
  std::vector<double> h;
  for (const auto& [e, v] : ftilde.coeffs) {
    double c = to_double(v);
    if ((int)h.size() < e[0] + e[2] + 1) h.resize(e[0] + e[2] + 1, 0.0);
    for (int j = 0; j <= e[0]; j++) h[j + e[2]] += c * tp[e[0]][j];
  }
  double hn = 0;
  for (double c : h) hn = std::max(hn, std::fabs(c));
  if (hn == 0)
    throw std::logic_error("membership_test: line still divides after maximal division");
  // loose imaginary tolerance: a tangency double root split into a near-real
  // pair must still contribute test points, and spurious extras are harmless
  std::vector<double> roots = real_roots_double(h, 1e-5);
  std::sort(roots.begin(), roots.end());
  return run_test(K, k, a, b, roots, d, tol);
}

SignProfile eigen_sign_profile(const HermitianPair& pair, double a, double b, double s,
                               double tol) {
  int n = pair.re.n;
  Eigen::MatrixXcd M = (-a - b * s) * Eigen::MatrixXcd::Identity(n, n) + pair.ref + s * pair.imf;
  M = 0.5 * (M + M.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  SignProfile sp;
  for (int i = 0; i < n; i++) {
    double ev = es.eigenvalues()(i);
    if (ev > tol)
      sp.positives++;
    else if (ev < -tol)
      sp.negatives++;
    else
      sp.zeros++;
  }
  return sp;
}

}  // namespace nrange
