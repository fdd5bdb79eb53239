#pragma once
// Prime-field univariate helpers backing the modular resultant path.

#include "nrange/rational.hpp"
#include <cstdint>
#include <vector>

namespace nrange::modp {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((unsigned __int128)a * b % p);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

// deterministic supply of ~62-bit primes
std::vector<uint64_t> primes(size_t count);

// resultant of two polynomials over F_p given lowest-first coefficients with
// nonzero leading terms (Euclidean remainder sequence, O(d^2))
uint64_t resultant_mod(std::vector<uint64_t> f, std::vector<uint64_t> g, uint64_t p);

// Lagrange interpolation over F_p: values v[i] at distinct points x[i];
// returns lowest-first coefficients (size n)
std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& x,
                                      const std::vector<uint64_t>& v, uint64_t p);

// CRT: combine residues r[i] mod p[i] into the symmetric representative
Int crt_symmetric(const std::vector<uint64_t>& residues, const std::vector<uint64_t>& primes);

inline uint64_t mod_of(const Int& a, uint64_t p) {
  return (uint64_t)mpz_fdiv_ui(a.get_mpz_t(), (unsigned long)p);
}

}  // namespace nrange::modp
