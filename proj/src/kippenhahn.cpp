#include "nrange/kippenhahn.hpp"

#include "nrange/roots.hpp"
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nrange {

namespace {

GRat det_grat(std::vector<GRat> m, int n) {
  GRat det(Rat(1));
  int sign = 1;
  for (int c = 0; c < n; c++) {
    int piv = -1;
    for (int r = c; r < n; r++)
      if (!m[r * n + c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return GRat(Rat(0));
    if (piv != c) {
      for (int j = 0; j < n; j++) std::swap(m[piv * n + j], m[c * n + j]);
      sign = -sign;
    }
    for (int r = c + 1; r < n; r++) {
      if (m[r * n + c].is_zero()) continue;
      GRat f = m[r * n + c] / m[c * n + c];
      for (int j = c; j < n; j++) m[r * n + j] = m[r * n + j] - f * m[c * n + j];
    }
    det = det * m[c * n + c];
  }
  if (sign < 0) det = -det;
  return det;
}

// Newton interpolation at distinct rational nodes.
UPoly interp(const std::vector<Rat>& xs, const std::vector<Rat>& vs) {
  size_t n = xs.size();
  std::vector<Rat> dd = vs;
  for (size_t j = 1; j < n; j++)
    for (size_t i = n - 1; i >= j; i--) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly p;
  UPoly basis(Rat(1));
  for (size_t j = 0; j < n; j++) {
    p = p + basis * dd[j];
    if (j + 1 < n) basis = basis * UPoly(std::vector<Rat>{-xs[j], Rat(1)});
  }
  return p;
}

}  // namespace

KippenhahnData kippenhahn_poly(const ComplexMatrix& A) {
  int n = A.n;
  if (n < 1 || (int)A.e.size() != n * n)
    throw std::invalid_argument("kippenhahn_poly: malformed matrix");
  KippenhahnData K;
  K.n = n;
  K.pair = hermitian_parts(A);
  const ComplexMatrix& Re = K.pair.re;
  const ComplexMatrix& Im = K.pair.im;

  // g(x,y) = det(I + x Re + y Im) on an (n+1)^2 grid, then tensor interpolation
  std::vector<Rat> nodes(n + 1);
  for (int i = 0; i <= n; i++) nodes[i] = Rat(i);
  std::vector<std::vector<Rat>> vals(n + 1, std::vector<Rat>(n + 1));
  for (int i = 0; i <= n; i++)
    for (int j = 0; j <= n; j++) {
      std::vector<GRat> m(n * n);
      for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) {
          GRat v = Re.at(r, c) * GRat(nodes[i]) + Im.at(r, c) * GRat(nodes[j]);
          if (r == c) v = v + GRat(Rat(1));
          m[r * n + c] = v;
        }
      GRat d = det_grat(std::move(m), n);
      if (!(d.im == 0))
        throw std::logic_error("kippenhahn_poly: determinant not real");
      vals[i][j] = d.re;
    }
  // rows in y, then each y-coefficient in x
  std::vector<UPoly> rows(n + 1);
  for (int i = 0; i <= n; i++) rows[i] = interp(nodes, vals[i]);
  HomPoly3 f;
  f.degree = n;
  for (int l = 0; l <= n; l++) {
    std::vector<Rat> col(n + 1);
    for (int i = 0; i <= n; i++) col[i] = rows[i].coeff(l);
    UPoly px = interp(nodes, col);
    for (int j = 0; j <= px.deg(); j++) {
      Rat c = px.coeff(j);
      if (c == 0) continue;
      if (j + l > n) throw std::logic_error("kippenhahn_poly: degree overflow");
      f.set(n - j - l, j, l, c);
    }
  }
  if (!(f.get(n, 0, 0) == 1)) throw std::logic_error("kippenhahn_poly: t^n coefficient != 1");
  K.f = f;
  K.fred = hp_squarefree(f);
  return K;
}

ProjPointR ProjPointR::from_exact(const Rat& p0, const Rat& p1, const Rat& p2) {
  ProjPointR p;
  p.exact = true;
  p.q = {p0, p1, p2};
  p.normalize();
  return p;
}
ProjPointR ProjPointR::from_float(double p0, double p1, double p2) {
  ProjPointR p;
  p.exact = false;
  p.fp = {p0, p1, p2};
  p.normalize();
  return p;
}
void ProjPointR::normalize() {
  if (exact) {
    Rat lead(0);
    for (const Rat& c : q)
      if (c != 0) {
        lead = c;
        break;
      }
    if (lead == 0) throw std::domain_error("ProjPointR: zero vector");
    for (Rat& c : q) c /= lead;
    for (int i = 0; i < 3; i++) fp[i] = to_double(q[i]);
    double norm = std::sqrt(fp[0] * fp[0] + fp[1] * fp[1] + fp[2] * fp[2]);
    for (double& c : fp) c /= norm;
  } else {
    double norm = std::sqrt(fp[0] * fp[0] + fp[1] * fp[1] + fp[2] * fp[2]);
    if (norm == 0) throw std::domain_error("ProjPointR: zero vector");
    for (double& c : fp) c /= norm;
    for (double c : fp)
      if (std::fabs(c) > 1e-12) {
        if (c < 0)
          for (double& d : fp) d = -d;
        break;
      }
  }
}
bool ProjPointR::same_as(const ProjPointR& o, double tol) const {
  double d = 0;
  for (int i = 0; i < 3; i++) d = std::max(d, std::fabs(fp[i] - o.fp[i]));
  return d <= tol;
}

int multiplicity_at(const KippenhahnData& K, const ProjPointR& p) {
  if (std::fabs(p.fp[1]) < 1e-15 && std::fabs(p.fp[2]) < 1e-15 &&
      (!p.exact || (p.q[1] == 0 && p.q[2] == 0)))
    throw std::domain_error("multiplicity_at: (p1,p2) = (0,0)");
  int n = K.n;
  if (p.exact) {
    std::vector<GRat> m(n * n);
    for (int r = 0; r < n; r++)
      for (int c = 0; c < n; c++) {
        GRat v = K.pair.re.at(r, c) * GRat(p.q[1]) + K.pair.im.at(r, c) * GRat(p.q[2]);
        if (r == c) v = v + GRat(p.q[0]);
        m[r * n + c] = v;
      }
    // rank by elimination
    int rank = 0;
    int row = 0;
    for (int c = 0; c < n && row < n; c++) {
      int piv = -1;
      for (int r = row; r < n; r++)
        if (!m[r * n + c].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      if (piv != row)
        for (int j = 0; j < n; j++) std::swap(m[piv * n + j], m[row * n + j]);
      for (int r = row + 1; r < n; r++) {
        if (m[r * n + c].is_zero()) continue;
        GRat f = m[r * n + c] / m[row * n + c];
        for (int j = c; j < n; j++) m[r * n + j] = m[r * n + j] - f * m[row * n + j];
      }
      row++;
      rank++;
    }
    return n - rank;
  }
  Eigen::MatrixXcd M = p.fp[0] * Eigen::MatrixXcd::Identity(n, n) + p.fp[1] * K.pair.ref +
                       p.fp[2] * K.pair.imf;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  if (smax == 0) return n;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); i++)
    if (svd.singularValues()(i) > 1e-9 * smax) rank++;
  return n - rank;
}

std::pair<Rat, Rat> AffineMap::apply(const Rat& a, const Rat& b) const {
  return {u01 + u11 * a + u21 * b, u02 + u12 * a + u22 * b};
}
AffineMap AffineMap::inverse() const {
  Rat d = det();
  if (d == 0) throw std::domain_error("AffineMap: singular");
  AffineMap inv;
  inv.u11 = u22 / d;
  inv.u12 = -u12 / d;
  inv.u21 = -u21 / d;
  inv.u22 = u11 / d;
  // L^{-1}(c,d) = M^{-1}((c,d) - (u01,u02))
  inv.u01 = -(inv.u11 * u01 + inv.u21 * u02);
  inv.u02 = -(inv.u12 * u01 + inv.u22 * u02);
  return inv;
}

ComplexMatrix apply_affine(const ComplexMatrix& A, const AffineMap& L) {
  if (L.det() == 0) throw std::domain_error("apply_affine: singular map");
  HermitianPair p = hermitian_parts(A);
  int n = A.n;
  ComplexMatrix B(n);
  B.exact = A.exact;
  GRat c0(L.u01, L.u02), c1(L.u11, L.u12), c2(L.u21, L.u22);
  for (int r = 0; r < n; r++)
    for (int c = 0; c < n; c++) {
      GRat v = c1 * p.re.at(r, c) + c2 * p.im.at(r, c);
      if (r == c) v = v + c0;
      B.at(r, c) = v;
    }
  return B;
}

HomPoly3 transform_poly(const HomPoly3& f, const AffineMap& L) {
  if (L.det() == 0) throw std::domain_error("transform_poly: singular map");
  int d = f.degree;
  auto linform = [](const Rat& ct, const Rat& cx, const Rat& cy) {
    HomPoly3 h;
    h.degree = 1;
    h.set(1, 0, 0, ct);
    h.set(0, 1, 0, cx);
    h.set(0, 0, 1, cy);
    return h;
  };
  HomPoly3 Lt = linform(Rat(1), L.u01, L.u02);
  HomPoly3 Lx = linform(Rat(0), L.u11, L.u12);
  HomPoly3 Ly = linform(Rat(0), L.u21, L.u22);
  auto powers = [&](const HomPoly3& h) {
    std::vector<HomPoly3> pw(d + 1);
    HomPoly3 one;
    one.degree = 0;
    one.set(0, 0, 0, Rat(1));
    pw[0] = one;
    for (int i = 1; i <= d; i++) pw[i] = pw[i - 1] * h;
    return pw;
  };
  auto pt = powers(Lt), px = powers(Lx), py = powers(Ly);
  HomPoly3 out;
  out.degree = d;
  for (const auto& [e, v] : f.coeffs) out = out + pt[e[0]] * px[e[1]] * py[e[2]] * v;
  out.degree = d;
  return out;
}

namespace {

// chart x=1 of fred as a BiPoly in (a,b) = (t,y)
BiPoly chart_x1(const HomPoly3& f) {
  int d = f.degree;
  BiPoly q(d, d);
  for (const auto& [e, v] : f.coeffs) q.at(e[0], e[2]) += v;
  q.trim();
  return q;
}

std::vector<double> bipoly_roots_in_a(const BiPoly& g, double b) {
  if (g.is_zero()) return {};
  std::vector<double> cs(g.da + 1, 0.0);
  for (int i = 0; i <= g.da; i++) {
    double s = 0, pb = 1;
    for (int j = 0; j <= g.db; j++) {
      s += to_double(g.at(i, j)) * pb;
      pb *= b;
    }
    cs[i] = s;
  }
  return real_roots_double(cs);
}

void push_point(std::vector<ProjPointR>& out, const ProjPointR& p) {
  for (const auto& o : out)
    if (p.same_as(o)) return;
  out.push_back(p);
}

// roots of a UPoly split into exact rationals and float midpoints
struct RootList {
  std::vector<Rat> exact;
  std::vector<double> approx;
};
RootList split_roots(const UPoly& p) {
  RootList out;
  RootIsolation ri = real_roots(p, Rat(Int(1), Int(1000000000000L)));
  for (const auto& iv : ri.intervals) {
    if (iv.lo == iv.hi)
      out.exact.push_back(iv.lo);
    else
      out.approx.push_back(to_double((iv.lo + iv.hi) / 2));
  }
  return out;
}

}  // namespace

std::vector<ProjPointR> real_singular_points(const KippenhahnData& K) {
  const HomPoly3& fred = K.fred;
  if (fred.degree < 1) throw std::domain_error("real_singular_points: fred constant");
  std::vector<ProjPointR> out;

  // chart x = 1: q(t,y) = fred(t,1,y); factors with no y dependence split off
  // as the univariate content ct(t) (vertical lines in this chart)
  BiPoly q = chart_x1(fred);
  BiPoly q2 = q;
  UPoly ct;  // product of y-free factors
  {
    IPoly2 pb = q.as_poly_in_b();
    IPoly c = poly_content(pb);
    if (c.deg() >= 1) {
      ct = upoly_from_ipoly(c);
      BiPoly cB(c.deg(), 0);
      for (int i = 0; i <= c.deg(); i++) cB.at(i, 0) = Rat(c.coeff(i));
      cB.trim();
      q2 = bipoly_divexact(q, cB);
    }
  }
  bool q2_curve = !q2.is_zero() && q2.total_degree() >= 1;

  if (q2_curve && q2.deg_a() >= 1) {
    BiPoly qa = q2.partial_a(), qb = q2.partial_b();
    UPoly R1 = bipoly_resultant_a(q2, qa);
    UPoly rg = R1;
    if (!qb.is_zero()) {
      UPoly R2 = bipoly_resultant_a(q2, qb);
      if (!R1.is_zero() && !R2.is_zero())
        rg = upoly_gcd(R1, R2);
      else if (R1.is_zero())
        rg = R2;
    }
    if (!rg.is_zero() && rg.deg() >= 1) {
      RootList ys = split_roots(rg);
      for (const Rat& y0 : ys.exact) {
        UPoly u0 = q2.eval_at_b(y0);
        UPoly u1 = qa.eval_at_b(y0);
        UPoly u2 = qb.is_zero() ? UPoly() : qb.eval_at_b(y0);
        UPoly g = upoly_gcd(u0, u1);
        if (!u2.is_zero()) g = upoly_gcd(g, u2);
        if (g.deg() < 1) continue;
        RootList ts = split_roots(g);
        for (const Rat& t0 : ts.exact)
          push_point(out, ProjPointR::from_exact(t0, Rat(1), y0));
        for (double t0 : ts.approx)
          push_point(out, ProjPointR::from_float(t0, 1.0, to_double(y0)));
      }
      for (double y0 : ys.approx) {
        // float back-substitution with Newton polish and a corank check
        for (double t0 : bipoly_roots_in_a(q2, y0)) {
          double scale = 1.0 + q2.max_abs_coeff();
          if (std::fabs(qa.eval_double(t0, y0)) > 1e-5 * scale) continue;
          if (!qb.is_zero() && std::fabs(qb.eval_double(t0, y0)) > 1e-5 * scale) continue;
          // Newton on the gradient system; the Hessian is generically
          // nonsingular at a node even though the Jacobian of (q2, grad)
          // degenerates there
          BiPoly qaa = qa.partial_a(), qab = qa.partial_b(), qbb = qb.partial_b();
          double t = t0, y = y0;
          for (int it = 0; it < 60; it++) {
            double f1 = qa.eval_double(t, y);
            double f2 = qb.eval_double(t, y);
            double j11 = qaa.eval_double(t, y);
            double j12 = qab.eval_double(t, y);
            double j22 = qbb.eval_double(t, y);
            double det = j11 * j22 - j12 * j12;
            if (std::fabs(det) < 1e-14 * scale * scale) break;
            double dt = (f1 * j22 - f2 * j12) / det;
            double dy = (j11 * f2 - j12 * f1) / det;
            t -= dt;
            y -= dy;
            if (std::fabs(dt) + std::fabs(dy) < 1e-14 * (1 + std::fabs(t) + std::fabs(y)))
              break;
          }
          ProjPointR p = ProjPointR::from_float(t, 1.0, y);
          if (multiplicity_at(K, p) >= 2) push_point(out, p);
        }
      }
    }
    // crossings of the y-free line factors with the rest of the curve
    if (!ct.is_zero() && ct.deg() >= 1) {
      RootList ts = split_roots(ct);
      for (const Rat& t0 : ts.exact) {
        UPoly v = q2.eval_at_a(t0);
        if (v.deg() >= 1) {
          RootList ys2 = split_roots(v);
          for (const Rat& y0 : ys2.exact)
            push_point(out, ProjPointR::from_exact(t0, Rat(1), y0));
          for (double y0 : ys2.approx)
            push_point(out, ProjPointR::from_float(to_double(t0), 1.0, y0));
        }
      }
      for (double t0 : ts.approx) {
        // irrational vertical line; intersect numerically and certify
        std::vector<double> cs(q2.db + 1, 0.0);
        for (int j = 0; j <= q2.db; j++) {
          double s = 0, pa = 1;
          for (int i = 0; i <= q2.da; i++) {
            s += to_double(q2.at(i, j)) * pa;
            pa *= t0;
          }
          cs[j] = s;
        }
        for (double y0 : real_roots_double(cs)) {
          ProjPointR p = ProjPointR::from_float(t0, 1.0, y0);
          if (multiplicity_at(K, p) >= 2) push_point(out, p);
        }
      }
    }
  } else if (!ct.is_zero() && ct.deg() >= 1 && q2_curve) {
    // q2 depends on y only: horizontal/vertical line grid
    RootList ts = split_roots(ct);
    UPoly v;
    v.c.assign(q2.db + 1, Rat(0));
    for (int j = 0; j <= q2.db; j++) v.c[j] = q2.get(0, j);
    v.trim();
    if (v.deg() >= 1) {
      RootList ys = split_roots(v);
      for (const Rat& t0 : ts.exact) {
        for (const Rat& y0 : ys.exact) push_point(out, ProjPointR::from_exact(t0, Rat(1), y0));
        for (double y0 : ys.approx)
          push_point(out, ProjPointR::from_float(to_double(t0), 1.0, y0));
      }
      for (double t0 : ts.approx) {
        for (const Rat& y0 : ys.exact)
          push_point(out, ProjPointR::from_float(t0, 1.0, to_double(y0)));
        for (double y0 : ys.approx) push_point(out, ProjPointR::from_float(t0, 1.0, y0));
      }
    }
  }

  // points with x = 0: fred and its gradient restricted to (t, 0, 1)
  {
    auto sect = [&](const HomPoly3& h) {
      UPoly u;
      for (const auto& [e, v] : h.coeffs) {
        if (e[1] != 0) continue;
        if ((int)u.c.size() <= e[0]) u.c.resize(e[0] + 1, Rat(0));
        u.c[e[0]] += v;  // y^l at y=1
      }
      u.trim();
      return u;
    };
    UPoly u0 = sect(fred);
    UPoly u1 = sect(fred.partial(0));
    UPoly u2 = sect(fred.partial(1));
    UPoly u3 = sect(fred.partial(2));
    UPoly g = u0;
    for (const UPoly* u : {&u1, &u2, &u3})
      if (!u->is_zero()) g = upoly_gcd(g, *u);
    if (!g.is_zero() && g.deg() >= 1) {
      RootList ts = split_roots(g);
      for (const Rat& t0 : ts.exact) push_point(out, ProjPointR::from_exact(t0, Rat(0), Rat(1)));
      for (double t0 : ts.approx) push_point(out, ProjPointR::from_float(t0, 0.0, 1.0));
    }
  }

  std::sort(out.begin(), out.end(), [](const ProjPointR& a, const ProjPointR& b) {
    for (int i = 0; i < 3; i++) {
      if (a.fp[i] < b.fp[i] - 1e-12) return true;
      if (a.fp[i] > b.fp[i] + 1e-12) return false;
    }
    return false;
  });
  return out;
}

}  // namespace nrange
