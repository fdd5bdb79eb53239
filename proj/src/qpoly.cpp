#include "nrange/poly.hpp"

namespace nrange {

IPoly upoly_clear_denominators(const UPoly& p) {
  if (p.is_zero()) return IPoly();
  Int l = 1;
  for (const auto& a : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den().get_mpz_t());
  IPoly r;
  r.c.reserve(p.c.size());
  for (const auto& a : p.c) {
    Rat s = a * Rat(l);
    r.c.push_back(Int(s.get_num()));
  }
  Int g;
  for (const auto& a : r.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (g != 0 && g != 1)
    for (auto& a : r.c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  r.trim();
  return r;
}

UPoly upoly_from_ipoly(const IPoly& p) {
  UPoly r;
  r.c.reserve(p.c.size());
  for (const auto& a : p.c) r.c.push_back(Rat(a));
  r.trim();
  return r;
}

UPoly upoly_monic(const UPoly& p) {
  if (p.is_zero()) return p;
  Rat l = p.lead();
  UPoly r = p;
  for (auto& a : r.c) a /= l;
  return r;
}

UPoly upoly_gcd(const UPoly& p, const UPoly& q) {
  UPoly g = poly_gcd(p, q);
  return upoly_monic(g);
}

UPoly upoly_squarefree(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree of zero polynomial");
  if (p.deg() <= 1) return upoly_monic(p);
  UPoly g = upoly_gcd(p, p.derivative());
  if (g.deg() == 0) return upoly_monic(p);
  return upoly_monic(poly_divexact(p, g * p.lead()) * p.lead());
}

IPoly ipoly_squarefree(const IPoly& p) {
  UPoly s = upoly_squarefree(upoly_from_ipoly(p));
  IPoly r = upoly_clear_denominators(s);
  if (r.lead() < 0)
    for (auto& a : r.c) a = -a;
  return r;
}

double ipoly_eval_double(const IPoly& p, double x) {
  double v = 0;
  for (int i = p.deg(); i >= 0; i--) v = v * x + p.c[i].get_d();
  return v;
}

int ipoly_sign_at(const IPoly& p, const Rat& x) {
  if (p.is_zero()) return 0;
  // sum c_i num^i den^(d-i), sign only
  const Int &num = x.get_num(), &den = x.get_den();
  Int acc = 0, pw = 1;
  std::vector<Int> denpow(p.deg() + 1);
  denpow[p.deg()] = 1;
  for (int i = p.deg() - 1; i >= 0; i--) denpow[i] = denpow[i + 1] * den;
  for (int i = 0; i <= p.deg(); i++) {
    acc += p.c[i] * pw * denpow[i];
    pw *= num;
  }
  return sgn(acc);
}

std::vector<UPoly> upoly_yun(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.is_zero() || p.deg() == 0) return out;
  UPoly a = upoly_monic(p);
  UPoly d = a.derivative();
  UPoly g = upoly_gcd(a, d);
  if (g.deg() == 0) {
    out.push_back(a);
    return out;
  }
  UPoly b = poly_divexact(a, g);
  UPoly c = poly_divexact(d, g);
  UPoly z = c - b.derivative();
  while (true) {
    UPoly f = upoly_gcd(b, z);
    out.push_back(upoly_monic(f));
    if (f.deg() == 0 && out.size() > 200) break;  // safety
    b = poly_divexact(b, f);
    if (b.deg() == 0) break;
    z = poly_divexact(z, f) - b.derivative();
  }
  return out;
}

}  // namespace nrange
