#include "nrange/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace nrange {

Eigen::MatrixXcd ComplexMatrix::to_eigen() const {
  Eigen::MatrixXcd M(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      M(i, j) = std::complex<double>(to_double(at(i, j).re), to_double(at(i, j).im));
  return M;
}

bool ComplexMatrix::is_hermitian() const {
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++)
      if (!(at(i, j) == at(j, i).conj())) return false;
  return true;
}

HermitianPair hermitian_parts(const ComplexMatrix& A) {
  if (A.n < 1 || (int)A.e.size() != A.n * A.n)
    throw std::invalid_argument("hermitian_parts: malformed matrix");
  int n = A.n;
  HermitianPair p;
  p.re = ComplexMatrix(n);
  p.im = ComplexMatrix(n);
  p.re.exact = p.im.exact = A.exact;
  Rat half(1, 2);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      GRat s = (A.at(i, j) + A.at(j, i).conj()) * GRat(half);
      // (a - a*) / (2i) = (-i/2) (a - a*)
      GRat d = (A.at(i, j) - A.at(j, i).conj()) * GRat(Rat(0), -half);
      p.re.at(i, j) = s;
      p.im.at(i, j) = d;
    }
  p.ref = p.re.to_eigen();
  p.imf = p.im.to_eigen();
  return p;
}

std::vector<double> lambda_all(const HermitianPair& pair, double x, double y) {
  Eigen::MatrixXcd H = x * pair.ref + y * pair.imf;
  H = 0.5 * (H + H.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();  // ascending
  std::vector<double> out(ev.size());
  for (int i = 0; i < ev.size(); i++) out[i] = ev(ev.size() - 1 - i);
  return out;
}

double lambda_k(const HermitianPair& pair, int k, double x, double y) {
  int n = pair.re.n;
  if (k < 1 || k > n) throw std::out_of_range("lambda_k: k out of range");
  return lambda_all(pair, x, y)[k - 1];
}

std::vector<SupportSample> sample_Ok(const HermitianPair& pair, int k, int m) {
  if (m < 4) throw std::invalid_argument("sample_Ok: need m >= 4");
  int n = pair.re.n;
  if (k < 1 || k > n) throw std::out_of_range("sample_Ok: k out of range");
  std::vector<SupportSample> out;
  out.reserve(m);
  for (int j = 0; j < m; j++) {
    double th = 2.0 * M_PI * j / m;
    double c = std::cos(th), s = std::sin(th);
    out.push_back({th, {lambda_k(pair, k, c, s), -c, -s}});
  }
  return out;
}

}  // namespace nrange
