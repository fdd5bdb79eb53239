#include "nrange/hompoly3.hpp"

#include "nrange/roots.hpp"
#include <cmath>
#include <stdexcept>

namespace nrange {

HomPoly3 operator+(const HomPoly3& p, const HomPoly3& q) {
  HomPoly3 r = p;
  r.degree = std::max(p.degree, q.degree);
  for (const auto& [e, v] : q.coeffs) {
    Rat s = r.get(e[0], e[1], e[2]) + v;
    r.set(e[0], e[1], e[2], s);
  }
  return r;
}
HomPoly3 operator-(const HomPoly3& p, const HomPoly3& q) { return p + q * Rat(-1); }
HomPoly3 operator*(const HomPoly3& p, const HomPoly3& q) {
  HomPoly3 r;
  r.degree = p.degree + q.degree;
  for (const auto& [e, v] : p.coeffs)
    for (const auto& [e2, v2] : q.coeffs) {
      std::array<int, 3> e3 = {e[0] + e2[0], e[1] + e2[1], e[2] + e2[2]};
      Rat s = r.get(e3[0], e3[1], e3[2]) + v * v2;
      r.set(e3[0], e3[1], e3[2], s);
    }
  return r;
}
HomPoly3 operator*(const HomPoly3& p, const Rat& s) {
  HomPoly3 r;
  r.degree = p.degree;
  if (s == 0) return r;
  for (const auto& [e, v] : p.coeffs) r.coeffs[e] = v * s;
  return r;
}
bool operator==(const HomPoly3& p, const HomPoly3& q) { return (p - q).is_zero(); }

Rat HomPoly3::eval(const Rat& t, const Rat& x, const Rat& y) const {
  Rat v(0);
  for (const auto& [e, cv] : coeffs) {
    Rat m = cv;
    for (int i = 0; i < e[0]; i++) m *= t;
    for (int i = 0; i < e[1]; i++) m *= x;
    for (int i = 0; i < e[2]; i++) m *= y;
    v += m;
  }
  return v;
}
double HomPoly3::eval_double(double t, double x, double y) const {
  double v = 0;
  for (const auto& [e, cv] : coeffs)
    v += to_double(cv) * std::pow(t, e[0]) * std::pow(x, e[1]) * std::pow(y, e[2]);
  return v;
}
HomPoly3 HomPoly3::partial(int var) const {
  HomPoly3 r;
  r.degree = degree > 0 ? degree - 1 : 0;
  for (const auto& [e, v] : coeffs) {
    if (e[var] == 0) continue;
    std::array<int, 3> e2 = e;
    e2[var]--;
    r.coeffs[e2] = v * e[var];
  }
  return r;
}
int HomPoly3::deg_in(int var) const {
  int d = 0;
  for (const auto& [e, v] : coeffs) d = std::max(d, e[var]);
  return d;
}

void HomPoly3::normalize_lex_monic() {
  if (is_zero()) return;
  // lex order t > x > y: largest (i, j, l) tuple
  const std::array<int, 3>* best = nullptr;
  for (const auto& [e, v] : coeffs)
    if (!best || e > *best) best = &e;
  Rat lc = coeffs.at(*best);
  for (auto& [e, v] : coeffs) v /= lc;
}

void HomPoly3::normalize_canonical() {
  if (is_zero()) return;
  Int l = 1;
  for (const auto& [e, v] : coeffs)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  Int g = 0;
  for (const auto& [e, v] : coeffs) {
    Rat s = v * Rat(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
  }
  if (g == 0) g = 1;
  Rat f(l, g);
  f.canonicalize();
  const std::array<int, 3>* best = nullptr;
  for (const auto& [e, v] : coeffs)
    if (!best || e > *best) best = &e;
  if (coeffs.at(*best) < 0) f = -f;
  for (auto& [e, v] : coeffs) v *= f;
}

std::vector<BiPoly> HomPoly3::t_coefficients() const {
  std::vector<BiPoly> out(degree + 1);
  for (const auto& [e, v] : coeffs) {
    BiPoly& c = out[e[0]];
    if (c.is_zero()) c = BiPoly(degree - e[0], degree - e[0]);
    c.at(e[1], e[2]) = v;
  }
  for (auto& c : out) c.trim();
  return out;
}
HomPoly3 HomPoly3::from_t_coefficients(const std::vector<BiPoly>& c, int deg) {
  HomPoly3 f;
  f.degree = deg;
  for (int i = 0; i < (int)c.size(); i++) {
    if (c[i].is_zero()) continue;
    for (int j = 0; j <= c[i].da; j++)
      for (int l = 0; l <= c[i].db; l++)
        if (c[i].at(j, l) != 0) f.coeffs[{i, j, l}] = c[i].at(j, l);
  }
  return f;
}

BiPoly HomPoly3::chart_t1() const {
  BiPoly r(degree, degree);
  for (const auto& [e, v] : coeffs) r.at(e[1], e[2]) += v;
  r.trim();
  return r;
}

namespace {

// HomPoly3 as a polynomial in `var` with nested rational coefficients in the
// other two variables (outer = later variable in (t,x,y) order).
using QPoly2 = Poly<UPoly>;
Poly<QPoly2> as_poly_in(const HomPoly3& f, int var) {
  int v1 = (var == 0) ? 1 : 0;           // earlier remaining variable (inner)
  int v2 = (var == 2) ? 1 : 2;           // later remaining variable (outer)
  Poly<QPoly2> r;
  r.c.resize(f.deg_in(var) + 1);
  for (const auto& [e, cv] : f.coeffs) {
    int dv = e[var], i1 = e[v1], i2 = e[v2];
    QPoly2& outer = r.c[dv];
    if ((int)outer.c.size() <= i2) outer.c.resize(i2 + 1);
    UPoly& inner = outer.c[i2];
    if ((int)inner.c.size() <= i1) inner.c.resize(i1 + 1, Rat(0));
    inner.c[i1] += cv;
  }
  for (auto& o : r.c) {
    for (auto& in : o.c) in.trim();
    o.trim();
  }
  r.trim();
  return r;
}
HomPoly3 from_poly2(const QPoly2& p, int var) {
  int v1 = (var == 0) ? 1 : 0;
  int v2 = (var == 2) ? 1 : 2;
  HomPoly3 f;
  int d = 0;
  for (int i2 = 0; i2 <= p.deg(); i2++)
    for (int i1 = 0; i1 <= p.coeff(i2).deg(); i1++)
      if (p.coeff(i2).coeff(i1) != 0) {
        std::array<int, 3> e = {0, 0, 0};
        e[v1] = i1;
        e[v2] = i2;
        f.coeffs[e] = p.coeff(i2).coeff(i1);
        d = std::max(d, i1 + i2);
      }
  f.degree = d;
  return f;
}

}  // namespace

HomPoly3 hp_resultant(const HomPoly3& p, const HomPoly3& q, int var) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
  auto P = as_poly_in(p, var), Q = as_poly_in(q, var);
  if (P.deg() == 0 && Q.deg() == 0) throw std::domain_error("resultant: both degree 0");
  QPoly2 r = sylvester_resultant(P, Q, P.deg(), Q.deg());
  return from_poly2(r, var);
}

HomPoly3 hp_discriminant(const HomPoly3& f, int var) {
  int d = f.deg_in(var);
  if (d == 0) throw std::domain_error("discriminant: degree 0 in variable");
  HomPoly3 R = hp_resultant(f, f.partial(var), var);
  if ((d * (d - 1) / 2) % 2) R = R * Rat(-1);
  // divide by the leading coefficient when it is a constant
  auto P = as_poly_in(f, var);
  const QPoly2& lc = P.c.back();
  if (lc.deg() == 0 && lc.coeff(0).deg() == 0) {
    Rat l = lc.coeff(0).coeff(0);
    R = R * (1 / l);
  }
  return R;
}

namespace {

// HomPoly3 as a polynomial in t over Z[x][y], denominators cleared.
Poly<IPoly2> as_int_poly_in_t(const HomPoly3& f) {
  Int l = 1;
  for (const auto& [e, v] : f.coeffs)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  Poly<IPoly2> r;
  r.c.resize(f.deg_in(0) + 1);
  for (const auto& [e, v] : f.coeffs) {
    Rat s = v * Rat(l);
    IPoly2& outer = r.c[e[0]];  // coeff of t^i, in Z[x][y]
    if ((int)outer.c.size() <= e[2]) outer.c.resize(e[2] + 1);
    IPoly& inner = outer.c[e[2]];
    if ((int)inner.c.size() <= e[1]) inner.c.resize(e[1] + 1, Int(0));
    inner.c[e[1]] = s.get_num();
  }
  for (auto& o : r.c) {
    for (auto& in : o.c) in.trim();
    o.trim();
  }
  r.trim();
  return r;
}
HomPoly3 from_int_poly_in_t(const Poly<IPoly2>& p) {
  HomPoly3 f;
  int d = 0;
  for (int i = 0; i <= p.deg(); i++)
    for (int l = 0; l <= p.coeff(i).deg(); l++)
      for (int j = 0; j <= p.coeff(i).coeff(l).deg(); j++)
        if (p.coeff(i).coeff(l).coeff(j) != 0) {
          f.coeffs[{i, j, l}] = Rat(p.coeff(i).coeff(l).coeff(j));
          d = std::max(d, i + j + l);
        }
  f.degree = d;
  return f;
}

}  // namespace

HomPoly3 hp_squarefree(const HomPoly3& f) {
  if (f.is_zero()) throw std::domain_error("squarefree of zero polynomial");
  if (f.deg_in(0) < 1)
    throw std::domain_error("squarefree: expected positive degree in t");
  Poly<IPoly2> F = as_int_poly_in_t(f);
  Poly<IPoly2> G = poly_gcd(F, F.derivative());
  HomPoly3 red;
  if (G.deg() < 1) {
    red = f;
  } else {
    // prim(F) = prim(G) * q exactly over Z[x,y][t] (Gauss)
    Poly<IPoly2> q = poly_divexact(poly_primitive(F), poly_primitive(G));
    red = from_int_poly_in_t(q);
  }
  red.normalize_lex_monic();
  return red;
}

std::pair<int, HomPoly3> divide_out_linear(const HomPoly3& f, const Rat& a, const Rat& b) {
  if (f.is_zero() || f.deg_in(0) < 1) return {0, f};
  // synthetic division in t by (t - r), r = -(a x + b y)
  BiPoly r(1, 1);
  r.at(1, 0) = -a;
  r.at(0, 1) = -b;
  r.trim();
  std::vector<BiPoly> c = f.t_coefficients();
  int d = 0;
  int deg = f.degree;
  while ((int)c.size() >= 2) {
    int n = (int)c.size() - 1;
    std::vector<BiPoly> q(n);
    q[n - 1] = c[n];
    for (int i = n - 1; i >= 1; i--) q[i - 1] = c[i] + r * q[i];
    BiPoly rem = c[0] + r * q[0];
    if (!rem.is_zero()) break;
    c = std::move(q);
    d++;
  }
  return {d, HomPoly3::from_t_coefficients(c, deg - d)};
}

namespace {

// dense double bivariate, index (j, l) = x^j y^l, size (n+1)x(n+1)
using DMat = std::vector<std::vector<double>>;

double dmat_norm(const DMat& m) {
  double v = 0;
  for (const auto& row : m)
    for (double x : row) v = std::max(v, std::fabs(x));
  return v;
}
// out = c + r * q with r = -(a x + b y)
DMat dmat_step(const DMat& c, const DMat& q, double a, double b) {
  size_t n = c.size();
  DMat out = c;
  for (size_t j = 0; j < n; j++)
    for (size_t l = 0; l < n; l++) {
      if (q[j][l] == 0) continue;
      if (j + 1 < n) out[j + 1][l] -= a * q[j][l];
      if (l + 1 < n) out[j][l + 1] -= b * q[j][l];
    }
  return out;
}

}  // namespace

std::pair<int, HomPoly3> divide_out_linear_float(const HomPoly3& f, double a, double b,
                                                 double divtol) {
  if (f.is_zero() || f.deg_in(0) < 1) return {0, f};
  int deg = f.degree;
  int nt = f.deg_in(0);
  size_t sz = deg + 1;
  std::vector<DMat> c(nt + 1, DMat(sz, std::vector<double>(sz, 0.0)));
  double fnorm = 0;
  for (const auto& [e, v] : f.coeffs) {
    double dv = to_double(v);
    c[e[0]][e[1]][e[2]] = dv;
    fnorm = std::max(fnorm, std::fabs(dv));
  }
  if (fnorm == 0) return {0, f};
  int d = 0;
  while ((int)c.size() >= 2) {
    int n = (int)c.size() - 1;
    std::vector<DMat> q(n);
    q[n - 1] = c[n];
    for (int i = n - 1; i >= 1; i--) q[i - 1] = dmat_step(c[i], q[i], a, b);
    DMat rem = dmat_step(c[0], q[0], a, b);
    if (dmat_norm(rem) > divtol * fnorm) break;
    c = std::move(q);
    d++;
  }
  HomPoly3 out;
  out.degree = deg - d;
  for (int i = 0; i < (int)c.size(); i++)
    for (size_t j = 0; j < sz; j++)
      for (size_t l = 0; l < sz; l++)
        if (c[i][j][l] != 0) out.coeffs[{i, (int)j, (int)l}] = rat_of_double_exact(c[i][j][l]);
  return {d, out};
}

UPoly restrict_to_membership_line(const HomPoly3& f, const Rat& a, const Rat& b) {
  // h(y) = f(-a - b y, 1, y)
  int nt = f.deg_in(0);
  UPoly lin(std::vector<Rat>{-a, -b});
  std::vector<UPoly> tp(nt + 1);
  tp[0] = UPoly(Rat(1));
  for (int i = 1; i <= nt; i++) tp[i] = tp[i - 1] * lin;
  UPoly h;
  for (const auto& [e, v] : f.coeffs) {
    UPoly term = tp[e[0]].shifted(e[2]) * v;
    h = h + term;
  }
  return h;
}

UPoly restrict_to_line(const HomPoly3& f, const std::array<Rat, 3>& q,
                       const std::array<Rat, 3>& p) {
  int d = f.degree;
  std::array<std::vector<UPoly>, 3> pw;
  for (int v = 0; v < 3; v++) {
    pw[v].resize(d + 1);
    pw[v][0] = UPoly(Rat(1));
    UPoly lin(std::vector<Rat>{q[v], p[v]});
    for (int i = 1; i <= d; i++) pw[v][i] = pw[v][i - 1] * lin;
  }
  UPoly h;
  for (const auto& [e, cv] : f.coeffs)
    h = h + pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * cv;
  return h;
}

std::vector<LinearFactor> linear_factors(const HomPoly3& f) {
  std::vector<LinearFactor> out;
  if (f.is_zero() || f.deg_in(0) < 1) return out;
  // ell = t + a x + b y | f forces -a to be a root of f(t,1,0) and -b a root
  // of f(t,0,1); enumerate the pairs and confirm by synthetic division
  auto roots_of_section = [&](const Rat& x, const Rat& y) {
    UPoly p;
    for (const auto& [e, v] : f.coeffs) {
      Rat m = v;
      for (int i = 0; i < e[1]; i++) m *= x;
      for (int i = 0; i < e[2]; i++) m *= y;
      if (m == 0) continue;
      if ((int)p.c.size() <= e[0]) p.c.resize(e[0] + 1, Rat(0));
      p.c[e[0]] += m;
    }
    p.trim();
    return real_roots(p, Rat(Int(1), Int(1000000000000L)));
  };
  RootIsolation r1 = roots_of_section(Rat(1), Rat(0));
  RootIsolation r2 = roots_of_section(Rat(0), Rat(1));

  struct Cand {
    bool exact;
    Rat v;
    double vf;
  };
  auto to_cands = [](const RootIsolation& ri) {
    std::vector<Cand> cs;
    for (const auto& iv : ri.intervals) {
      if (iv.lo == iv.hi)
        cs.push_back({true, -iv.lo, -to_double(iv.lo)});
      else {
        Rat mid = (iv.lo + iv.hi) / 2;
        cs.push_back({false, Rat(0), -to_double(mid)});
      }
    }
    return cs;
  };
  std::vector<Cand> as = to_cands(r1), bs = to_cands(r2);
  for (const auto& ca : as)
    for (const auto& cb : bs) {
      if (ca.exact && cb.exact) {
        auto [d, rest] = divide_out_linear(f, ca.v, cb.v);
        if (d >= 1) out.push_back({true, ca.v, cb.v, to_double(ca.v), to_double(cb.v), d});
      } else {
        double af = ca.exact ? to_double(ca.v) : ca.vf;
        double bf = cb.exact ? to_double(cb.v) : cb.vf;
        auto [d, rest] = divide_out_linear_float(f, af, bf);
        if (d >= 1) out.push_back({false, Rat(0), Rat(0), af, bf, d});
      }
    }
  return out;
}

}  // namespace nrange
