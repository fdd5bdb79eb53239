#pragma once
// Complex matrices with exact Gaussian-rational entries, the Hermitian
// decomposition A = Re(A) + i Im(A), and float eigenvalues of the pencil
// x Re(A) + y Im(A).

#include "nrange/rational.hpp"
#include <Eigen/Dense>
#include <array>
#include <vector>

namespace nrange {

struct ComplexMatrix {
  int n = 0;
  bool exact = true;  // float-mode inputs are stored as exact images of doubles
  std::vector<GRat> e;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : n(dim), e(dim * dim) {}
  GRat& at(int i, int j) { return e[i * n + j]; }
  const GRat& at(int i, int j) const { return e[i * n + j]; }
  Eigen::MatrixXcd to_eigen() const;
  bool is_hermitian() const;
};

struct HermitianPair {
  ComplexMatrix re, im;
  Eigen::MatrixXcd ref, imf;  // cached float copies for the eigensolver
};

struct SupportSample {
  double theta;
  std::array<double, 3> point;  // (lambda_k(theta), -cos theta, -sin theta)
};

// A = re + i*im with re, im Hermitian (exact).
HermitianPair hermitian_parts(const ComplexMatrix& A);

// Eigenvalues of x*Re(A) + y*Im(A), descending. k is 1-based, 1..n.
std::vector<double> lambda_all(const HermitianPair& pair, double x, double y);
double lambda_k(const HermitianPair& pair, int k, double x, double y);

// m samples of O_k at theta_j = 2*pi*j/m.
std::vector<SupportSample> sample_Ok(const HermitianPair& pair, int k, int m);

}  // namespace nrange
