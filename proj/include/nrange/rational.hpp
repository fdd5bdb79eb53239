#pragma once
// Exact scalar layer: rationals (GMP) and Gaussian rationals.

#include <gmpxx.h>
#include <optional>
#include <string>

namespace nrange {

using Rat = mpq_class;
using Int = mpz_class;

inline double to_double(const Rat& q) { return q.get_d(); }
inline int sgn(const Rat& q) { return sgn(q.get_num()); }

// Continued-fraction approximation of v with denominator <= max_den.
// Returns nullopt for non-finite v. The result is the best convergent found
// whose error is <= tol (or the last convergent under the denominator bound
// when accept_best is set).
std::optional<Rat> rationalize(double v, unsigned long max_den, double tol,
                               bool accept_best = false);

// Exact binary expansion of a double as a rational.
Rat rat_of_double_exact(double v);

// Rational with the smallest denominator in the closed interval [lo, hi]
// (Stern-Brocot descent). Used to pick well-conditioned sample points
// strictly between isolated roots.
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

// Gaussian rational: re + i*im, field operations.
struct GRat {
  Rat re, im;
  GRat() = default;
  GRat(const Rat& r) : re(r) {}
  GRat(const Rat& r, const Rat& i) : re(r), im(i) {}
  bool is_zero() const { return re == 0 && im == 0; }
  GRat conj() const { return {re, -im}; }
  friend GRat operator+(const GRat& a, const GRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GRat operator-(const GRat& a, const GRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GRat operator-(const GRat& a) { return {-a.re, -a.im}; }
  friend GRat operator*(const GRat& a, const GRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GRat operator/(const GRat& a, const GRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
};

}  // namespace nrange
