#pragma once
// Membership test for a + ib in the rank-k numerical range: divide the
// maximal power of ell = t + ax + by out of f_A, intersect the rest with the
// query line, and check the eigenvalue sandwich at one test point per
// interval between the intersection parameters.

#include "nrange/kippenhahn.hpp"

namespace nrange {

struct MembershipVerdict {
  bool member = false;
  // min over test points of min(lambda_k - (a+bs), (a+bs) - lambda_{n-k+1});
  // member <=> margin >= -tol, |margin| <= tol means boundary-ambiguous
  double margin = 0;
  int three_way = 0;  // +1 member, 0 ambiguous, -1 non-member
  int ell_power = 0;  // multiplicity of ell in f_A
  struct Witness {
    double s;
    double lam_k, lam_nk1;
    double line;  // a + b*s
  };
  std::vector<Witness> witnesses;
};

MembershipVerdict membership_test(const KippenhahnData& K, int k, const Rat& a, const Rat& b,
                                  double tol = 1e-9);
// Float query: synthetic division with relative remainder tolerance 1e-8.
MembershipVerdict membership_test_float(const KippenhahnData& K, int k, double a, double b,
                                        double tol = 1e-9);

// Eigenvalue sign counts of (-a - b s) I + Re A + s Im A.
struct SignProfile {
  int positives = 0, negatives = 0, zeros = 0;
};
SignProfile eigen_sign_profile(const HermitianPair& pair, double a, double b, double s,
                               double tol = 1e-9);

}  // namespace nrange
