#include "nrange/modpoly.hpp"

namespace nrange::modp {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

namespace {
bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
    if (n % q == 0) return n == q;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    s++;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (a % n == 0) continue;
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; i++) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}
}  // namespace

std::vector<uint64_t> primes(size_t count) {
  std::vector<uint64_t> out;
  uint64_t p = (1ull << 62) - 1;
  while (out.size() < count) {
    if (is_prime_u64(p)) out.push_back(p);
    p -= 2;
  }
  return out;
}

uint64_t resultant_mod(std::vector<uint64_t> f, std::vector<uint64_t> g, uint64_t p) {
  auto trim = [](std::vector<uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  uint64_t res = 1;
  int sign = 1;
  while (true) {
    int df = (int)f.size() - 1, dg = (int)g.size() - 1;
    if (dg == 0) {
      res = mulmod(res, powmod(g[0], df, p), p);
      break;
    }
    if (df < dg) {
      std::swap(f, g);
      if ((df & 1) && (dg & 1)) sign = -sign;
      continue;
    }
    // r = f mod g
    std::vector<uint64_t> r = f;
    uint64_t inv = invmod(g.back(), p);
    for (int i = df; i >= dg; i--) {
      uint64_t q = mulmod(r[i], inv, p);
      if (q == 0) continue;
      for (int j = 0; j <= dg; j++) {
        uint64_t sub = mulmod(q, g[j], p);
        uint64_t& t = r[i - dg + j];
        t = (t >= sub) ? t - sub : t + p - sub;
      }
    }
    r.resize(dg);
    trim(r);
    if (r.empty()) return 0;
    int dr = (int)r.size() - 1;
    res = mulmod(res, powmod(g.back(), df - dr, p), p);
    if ((df & 1) && (dg & 1)) sign = -sign;
    f = std::move(g);
    g = std::move(r);
  }
  if (sign < 0 && res) res = p - res;
  return res;
}

std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& x,
                                      const std::vector<uint64_t>& v, uint64_t p) {
  size_t n = x.size();
  // Newton form: divided differences over F_p
  std::vector<uint64_t> dd = v;
  for (size_t j = 1; j < n; j++) {
    for (size_t i = n - 1; i >= j; i--) {
      uint64_t num = (dd[i] >= dd[i - 1]) ? dd[i] - dd[i - 1] : dd[i] + p - dd[i - 1];
      uint64_t den = (x[i] >= x[i - j]) ? x[i] - x[i - j] : x[i] + p - x[i - j];
      dd[i] = mulmod(num, invmod(den, p), p);
      if (i == j) break;
    }
  }
  // expand Newton form to monomial coefficients
  std::vector<uint64_t> coef(n, 0);
  std::vector<uint64_t> basis(n, 0);  // prod_{j'<j} (X - x[j'])
  basis[0] = 1;
  size_t bdeg = 0;
  for (size_t j = 0; j < n; j++) {
    for (size_t i = 0; i <= bdeg; i++) {
      uint64_t t = mulmod(dd[j], basis[i], p);
      coef[i] = (coef[i] + t) % p;
    }
    if (j + 1 < n) {
      uint64_t xj = x[j] % p;
      std::vector<uint64_t> nb(bdeg + 2, 0);
      for (size_t i = 0; i <= bdeg; i++) nb[i + 1] = basis[i];
      for (size_t i = 0; i <= bdeg; i++) {
        uint64_t t = mulmod(basis[i], xj, p);
        nb[i] = (nb[i] >= t) ? nb[i] - t : nb[i] + p - t;
      }
      bdeg++;
      for (size_t i = 0; i <= bdeg; i++) basis[i] = nb[i];
    }
  }
  return coef;
}

Int crt_symmetric(const std::vector<uint64_t>& residues, const std::vector<uint64_t>& ps) {
  Int m = 1, acc = 0;
  for (size_t i = 0; i < ps.size(); i++) {
    Int p((unsigned long)ps[i]);
    if (i == 0) {
      acc = Int((unsigned long)residues[i]);
      m = p;
      continue;
    }
    // acc' = acc + m * t, t = (r - acc) * m^{-1} mod p
    uint64_t am = mod_of(acc, ps[i]);
    uint64_t mm = mod_of(m, ps[i]);
    uint64_t diff = (residues[i] >= am) ? residues[i] - am : residues[i] + ps[i] - am;
    uint64_t t = mulmod(diff, invmod(mm, ps[i]), ps[i]);
    acc += m * Int((unsigned long)t);
    m *= p;
  }
  if (acc * 2 > m) acc -= m;
  return acc;
}

}  // namespace nrange::modp
