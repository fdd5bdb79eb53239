#include "nrange/boundary.hpp"

#include "nrange/membership.hpp"
#include "nrange/roots.hpp"
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nrange {

namespace {

// Coefficients c_j(a,b) of the binary form F(x,y) = fred(-ax-by, x, y) in the
// chart y=1, with fred integer-cleared: F(x,1) = sum_j c_j x^j.
std::vector<BiPoly> chart_coefficients(const HomPoly3& fred) {
  int m = fred.degree;
  Int L = 1;
  for (const auto& [e, v] : fred.coeffs)
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BiPoly> c(m + 1, BiPoly(m, m));
  for (const auto& [e, v] : fred.coeffs) {
    Rat iv = v * Rat(L);
    int i = e[0], p = e[1];
    // t^i -> (-ax-b)^i = sum_q C(i,q) (-1)^i a^q b^(i-q) x^q
    Int binom = 1;
    for (int q = 0; q <= i; q++) {
      Rat term = iv * Rat(binom);
      if (i % 2) term = -term;
      c[p + q].at(q, i - q) += term;
      binom = binom * (i - q) / (q + 1);
    }
  }
  for (auto& cc : c) cc.trim();
  return c;
}

UPoly section_x1y0(const HomPoly3& h) {
  // h(u, 1, 0) as a univariate polynomial in u
  UPoly p;
  for (const auto& [e, v] : h.coeffs) {
    if (e[2] != 0) continue;
    if ((int)p.c.size() <= e[0]) p.c.resize(e[0] + 1, Rat(0));
    p.c[e[0]] += v;
  }
  p.trim();
  return p;
}

BiPoly bipoly_from_upoly_in_a(const UPoly& p) {
  BiPoly r(std::max(p.deg(), 0), 0);
  for (int i = 0; i <= p.deg(); i++) r.at(i, 0) = p.coeff(i);
  r.trim();
  return r;
}

}  // namespace

BoundaryPoly boundary_poly(const KippenhahnData& K) {
  const HomPoly3& fred = K.fred;
  int m = fred.degree;
  if (m < 2)
    throw std::domain_error("boundary_poly: f_A is a power of a linear form");
  std::vector<BiPoly> c = chart_coefficients(fred);

  // D(a,b) = Res_x(dF/dx, dF/dy) at y=1 with formal x-degrees m-1, evaluated
  // on an integer grid and interpolated
  int D = 2 * m * (m - 1);
  std::vector<std::vector<Rat>> vals(D + 1, std::vector<Rat>(D + 1));
  for (int ia = 0; ia <= D; ia++)
    for (int jb = 0; jb <= D; jb++) {
      Rat a(ia), b(jb);
      IPoly p, q;
      p.c.assign(m, Int(0));
      q.c.assign(m, Int(0));
      for (int j = 1; j <= m; j++) p.c[j - 1] = Rat(c[j].eval(a, b) * j).get_num();
      for (int j = 0; j < m; j++) q.c[j] = Rat(c[j].eval(a, b) * (m - j)).get_num();
      p.trim();
      q.trim();
      vals[ia][jb] = Rat(sylvester_resultant(p, q, m - 1, m - 1));
    }
  std::vector<Rat> nodes(D + 1);
  for (int i = 0; i <= D; i++) nodes[i] = Rat(i);
  auto interp = [&](const std::vector<Rat>& vs) {
    std::vector<Rat> dd = vs;
    size_t n = dd.size();
    for (size_t j = 1; j < n; j++)
      for (size_t i = n - 1; i >= j; i--) {
        dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);
        if (i == j) break;
      }
    UPoly pl;
    UPoly basis(Rat(1));
    for (size_t j = 0; j < n; j++) {
      pl = pl + basis * dd[j];
      if (j + 1 < n) basis = basis * UPoly(std::vector<Rat>{-nodes[j], Rat(1)});
    }
    return pl;
  };
  std::vector<UPoly> rows(D + 1);
  for (int ia = 0; ia <= D; ia++) rows[ia] = interp(vals[ia]);
  BiPoly disc(D, D);
  for (int jb = 0; jb <= D; jb++) {
    std::vector<Rat> col(D + 1);
    for (int ia = 0; ia <= D; ia++) col[ia] = rows[ia].coeff(jb);
    UPoly pa = interp(col);
    for (int ia = 0; ia <= pa.deg(); ia++) disc.at(ia, jb) = pa.coeff(ia);
  }
  disc.trim();
  if (disc.is_zero()) throw std::logic_error("boundary_poly: chart discriminant vanished");

  BoundaryPoly out;
  BiPoly g = bipoly_squarefree(disc);
  g.normalize_canonical();

  // singular points on y=0 give vertical lines the chart can miss
  {
    UPoly u0 = section_x1y0(fred);
    UPoly g1 = u0;
    for (int var = 0; var < 3; var++) {
      UPoly s = section_x1y0(fred.partial(var));
      if (!s.is_zero()) g1 = upoly_gcd(g1, s);
    }
    if (g1.deg() >= 1) {
      UPoly gs = upoly_squarefree(g1);
      // W(a) = gs(-a): one line a = -u per singular point [u:1:0]
      UPoly W = gs;
      for (int i = 1; i <= W.deg(); i += 2) W.c[i] = -W.c[i];
      IPoly2 pb = g.as_poly_in_b();
      IPoly cont = poly_content(pb);
      UPoly have = upoly_monic(upoly_from_ipoly(cont));
      UPoly missing = poly_divexact(W, upoly_gcd(W, have));
      if (missing.deg() >= 1) {
        g = g * bipoly_from_upoly_in_a(missing);
        g.normalize_canonical();
        out.recovered_infinity_lines = true;
      }
    }
  }

  // peel off exact singular-point lines for component tagging
  BiPoly rem = g;
  for (const ProjPointR& p : real_singular_points(K)) {
    if (!p.exact) continue;
    BiPoly line(1, 1);
    line.at(0, 0) = p.q[0];
    line.at(1, 0) = p.q[1];
    line.at(0, 1) = p.q[2];
    line.trim();
    line.normalize_canonical();
    if (rem.total_degree() >= 1 && bipoly_divides(line, rem)) {
      rem = bipoly_divexact(rem, line);
      out.components.push_back({line, true});
    }
  }
  if (rem.total_degree() >= 1) {
    rem.normalize_canonical();
    out.components.push_back({rem, false});
  }
  out.g = g;
  return out;
}

LineRestriction restrict_profile(const HomPoly3& fred, const ProjPointR& p, double a, double b) {
  int m = fred.degree;
  LineRestriction lr;
  // base point q on the line, not proportional to p
  auto mk_base = [&](bool use_x) {
    std::array<double, 3> q;
    if (use_x)
      q = {-a, 1.0, 0.0};
    else
      q = {-b, 0.0, 1.0};
    return q;
  };
  std::array<double, 3> qf = mk_base(true);
  {
    // proportional iff cross product ~ 0
    double c0 = qf[1] * p.fp[2] - qf[2] * p.fp[1];
    double c1 = qf[2] * p.fp[0] - qf[0] * p.fp[2];
    double c2 = qf[0] * p.fp[1] - qf[1] * p.fp[0];
    if (std::fabs(c0) + std::fabs(c1) + std::fabs(c2) < 1e-9 * (1 + std::fabs(a)))
      qf = mk_base(false);
  }
  std::array<Rat, 3> q = {rat_of_double_exact(qf[0]), rat_of_double_exact(qf[1]),
                          rat_of_double_exact(qf[2])};
  std::array<Rat, 3> pp;
  if (p.exact)
    pp = p.q;
  else
    pp = {rat_of_double_exact(p.fp[0]), rat_of_double_exact(p.fp[1]),
          rat_of_double_exact(p.fp[2])};
  UPoly r = restrict_to_line(fred, q, pp);
  // float view for the root structure
  std::vector<double> rc(r.c.size());
  double norm = 0;
  for (size_t i = 0; i < r.c.size(); i++) {
    rc[i] = to_double(r.c[i]);
    norm = std::max(norm, std::fabs(rc[i]));
  }
  int deg = (int)rc.size() - 1;
  while (deg >= 0 && std::fabs(rc[deg]) <= 1e-8 * norm) deg--;
  lr.drop = m - deg;
  if (deg >= 2) {
    // repeated real root elsewhere: r' has a real root where r nearly vanishes
    std::vector<double> rcd(deg + 1);
    for (int i = 0; i <= deg; i++) rcd[i] = rc[i];
    std::vector<double> dc(deg);
    for (int i = 1; i <= deg; i++) dc[i - 1] = i * rcd[i];
    for (double s : real_roots_double(dc)) {
      double v = 0, pw = 1;
      for (int i = 0; i <= deg; i++) {
        v += rcd[i] * pw;
        pw *= s;
      }
      double scale = norm * std::pow(1.0 + std::fabs(s), deg);
      if (std::fabs(v) <= 1e-6 * scale) {
        lr.square_factor = true;
        break;
      }
    }
  }
  return lr;
}

TangentSet singularity_tangents(const KippenhahnData& K, const ProjPointR& p) {
  const HomPoly3& fred = K.fred;
  int m = fred.degree;
  double fval = fred.eval_double(p.fp[0], p.fp[1], p.fp[2]);
  double sc = 1.0;
  for (const auto& [e, v] : fred.coeffs) sc = std::max(sc, std::fabs(to_double(v)));
  if (std::fabs(fval) > 1e-6 * sc) throw std::domain_error("singularity_tangents: p not on curve");

  std::array<Rat, 3> pp;
  if (p.exact)
    pp = p.q;
  else
    pp = {rat_of_double_exact(p.fp[0]), rat_of_double_exact(p.fp[1]),
          rat_of_double_exact(p.fp[2])};
  AffineMap L;
  L.u02 = pp[0];
  L.u12 = pp[1];
  L.u22 = pp[2];
  if (pp[1] != 0) {
    L.u01 = Rat(0);
    L.u11 = Rat(0);
    L.u21 = Rat(1);
  } else {
    L.u01 = Rat(0);
    L.u11 = Rat(1);
    L.u21 = Rat(0);
  }
  if (L.det() == 0) throw std::domain_error("singularity_tangents: (p1,p2) = (0,0)");
  HomPoly3 fp = transform_poly(fred, L);

  int d = multiplicity_at(K, p);
  if (d < 1) throw std::domain_error("singularity_tangents: p not on curve");

  // lowest-degree part of fp(t,x,1)
  int dmin = 2 * m;
  for (const auto& [e, v] : fp.coeffs) dmin = std::min(dmin, e[0] + e[1]);
  UPoly hd;  // h_d(-c, 1)
  for (const auto& [e, v] : fp.coeffs) {
    if (e[0] + e[1] != dmin) continue;
    if ((int)hd.c.size() <= e[0]) hd.c.resize(e[0] + 1, Rat(0));
    Rat t = v;
    if (e[0] % 2) t = -t;
    hd.c[e[0]] += t;
  }
  hd.trim();

  // Disc_y(fp)(-c, 1): substitute first, then take the formal resultant in y
  UPoly disc_c;
  int dy = fp.deg_in(2);
  if (dy >= 1) {
    Poly<UPoly> u;
    u.c.resize(dy + 1);
    for (const auto& [e, v] : fp.coeffs) {
      UPoly& coeff = u.c[e[2]];
      if ((int)coeff.c.size() <= e[0]) coeff.c.resize(e[0] + 1, Rat(0));
      Rat t = v;
      if (e[0] % 2) t = -t;
      coeff.c[e[0]] += t;  // (-c)^i * 1^j
    }
    for (auto& coeff : u.c) coeff.trim();
    Poly<UPoly> du;
    du.c.resize(dy);
    for (int l = 1; l <= dy; l++) du.c[l - 1] = u.c[l] * Rat(l);
    Poly<UPoly> uu = u, dd = du;
    uu.trim();
    dd.trim();
    if (!dd.is_zero()) disc_c = sylvester_resultant(uu, dd, dy, dy - 1);
  }

  // candidate c values
  std::vector<Rat> cex;
  std::vector<double> cfl;
  auto add_roots = [&](const UPoly& q) {
    if (q.is_zero() || q.deg() < 1) return;
    RootIsolation ri = real_roots(q, Rat(Int(1), Int(1000000000000L)));
    for (const auto& iv : ri.intervals) {
      if (iv.lo == iv.hi)
        cex.push_back(iv.lo);
      else
        cfl.push_back(to_double((iv.lo + iv.hi) / 2));
    }
  };
  add_roots(hd);
  add_roots(disc_c);

  AffineMap Linv = L.inverse();
  TangentSet T;
  T.origin = p;
  auto push = [&](bool exact, const Rat& a, const Rat& b, double af, double bf) {
    for (const auto& t : T.lines)
      if (std::fabs(t.af - af) + std::fabs(t.bf - bf) < 1e-8) return;
    LineRestriction lr = restrict_profile(fred, p, af, bf);
    TangentLine tl;
    tl.exact = exact;
    tl.a = a;
    tl.b = b;
    tl.af = af;
    tl.bf = bf;
    tl.certified = lr.square_factor || lr.drop >= d + 1;
    if (!tl.certified) return;
    T.lines.push_back(tl);
  };
  for (const Rat& c0 : cex) {
    auto [a, b] = Linv.apply(c0, Rat(0));
    push(true, a, b, to_double(a), to_double(b));
  }
  for (double c0 : cfl) {
    auto [ar, br] = Linv.apply(rat_of_double_exact(c0), Rat(0));
    push(false, Rat(0), Rat(0), to_double(ar), to_double(br));
  }
  std::sort(T.lines.begin(), T.lines.end(), [](const TangentLine& x, const TangentLine& y) {
    return x.af != y.af ? x.af < y.af : x.bf < y.bf;
  });
  return T;
}

AntipodalSpan antipodal_span(const KippenhahnData& K, int k, double tol) {
  int n = K.n;
  AntipodalSpan sp;
  for (const ProjPointR& p : real_singular_points(K)) {
    double x = p.fp[1], y = p.fp[2];
    if (std::fabs(x) < 1e-14 && std::fabs(y) < 1e-14) continue;
    std::vector<double> ev = lambda_all(K.pair, x, y);
    double lk = ev[k - 1], lnk = ev[n - k];
    double eps = tol * (1 + std::fabs(lk));
    if (std::fabs(lk - lnk) <= eps && std::fabs(-p.fp[0] - lk) <= eps) sp.S.push_back(p);
  }
  if (sp.S.empty()) {
    sp.dimV = -1;
    return sp;
  }
  Eigen::MatrixXd M(sp.S.size(), 3);
  for (size_t i = 0; i < sp.S.size(); i++)
    for (int j = 0; j < 3; j++) M(i, j) = sp.S[i].fp[j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
  int rank = 0;
  double smax = svd.singularValues()(0);
  for (int i = 0; i < svd.singularValues().size(); i++)
    if (svd.singularValues()(i) > 1e-9 * std::max(1.0, smax)) rank++;
  sp.dimV = rank - 1;
  if (sp.dimV == 1) {
    // covector of the spanned line: cross product of two independent points
    std::array<double, 3> s1 = sp.S[0].fp, s2{};
    double best = 0;
    for (size_t i = 1; i < sp.S.size(); i++) {
      std::array<double, 3> c = {s1[1] * sp.S[i].fp[2] - s1[2] * sp.S[i].fp[1],
                                 s1[2] * sp.S[i].fp[0] - s1[0] * sp.S[i].fp[2],
                                 s1[0] * sp.S[i].fp[1] - s1[1] * sp.S[i].fp[0]};
      double nn = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
      if (nn > best) {
        best = nn;
        s2 = c;
      }
    }
    double nn = std::sqrt(s2[0] * s2[0] + s2[1] * s2[1] + s2[2] * s2[2]);
    for (double& v : s2) v /= nn;
    sp.covector = s2;
    if (std::fabs(s2[0]) > 1e-9) {
      sp.has_vperp = true;
      sp.vp_a = s2[1] / s2[0];
      sp.vp_b = s2[2] / s2[0];
    }
  }
  return sp;
}

std::vector<std::pair<double, double>> tritangent_candidates(const KippenhahnData& K) {
  std::vector<std::pair<double, double>> out;
  auto push = [&](double a, double b) {
    for (auto& [x, y] : out)
      if (std::fabs(x - a) + std::fabs(y - b) < 1e-8) return;
    out.emplace_back(a, b);
  };
  for (const LinearFactor& lf : linear_factors(K.fred)) push(lf.af, lf.bf);
  if (K.fred.degree < 6) return out;

  BoundaryPoly B = boundary_poly(K);
  const BiPoly& g = B.g;
  if (g.total_degree() < 2 || g.deg_a() < 1) return out;
  BiPoly ga = g.partial_a(), gb = g.partial_b();
  UPoly R1 = bipoly_resultant_a(g, ga);
  UPoly R2 = gb.is_zero() ? UPoly() : bipoly_resultant_a(g, gb);
  if (R1.is_zero()) return out;
  IPoly R1i = upoly_clear_denominators(R1);
  double bound = ipoly_root_bound(R1i);
  RootIsolation ri = (R1.deg() <= kExactDegreeLimit)
                         ? real_roots(R1, Rat(Int(1), Int(1000000000L)))
                         : real_roots_scan(R1i, -bound, bound, 4000, Rat(Int(1), Int(1000000000L)));
  IPoly R2i = R2.is_zero() ? IPoly() : upoly_clear_denominators(R2);
  BiPoly gaa = ga.partial_a(), gab = ga.partial_b(), gbb = gb.partial_b();
  double gscale = 1.0 + g.max_abs_coeff();
  for (const auto& iv : ri.intervals) {
    double b0 = to_double((iv.lo + iv.hi) / 2);
    if (!R2i.is_zero()) {
      // both resultants must vanish at a dual singular parameter
      double v2 = ipoly_eval_double(R2i, b0);
      double s2 = 0;
      for (int i = 0; i <= R2i.deg(); i++)
        s2 = std::max(s2, std::fabs(R2i.coeff(i).get_d()) * std::pow(std::fabs(b0) + 1, i));
      if (std::fabs(v2) > 1e-5 * (1 + s2)) continue;
    }
    // a-candidates on this horizontal line
    std::vector<double> cs(g.da + 1, 0.0);
    for (int i = 0; i <= g.da; i++) {
      double s = 0, pb = 1;
      for (int j = 0; j <= g.db; j++) {
        s += to_double(g.at(i, j)) * pb;
        pb *= b0;
      }
      cs[i] = s;
    }
    for (double a0 : real_roots_double(cs)) {
      double t = a0, y = b0;
      double grad = std::hypot(ga.eval_double(t, y), gb.eval_double(t, y));
      double lsc = gscale * std::pow(1 + std::fabs(t) + std::fabs(y), g.total_degree());
      if (grad > 1e-4 * lsc) continue;
      for (int it = 0; it < 80; it++) {
        double f1 = ga.eval_double(t, y), f2 = gb.eval_double(t, y);
        double j11 = gaa.eval_double(t, y), j12 = gab.eval_double(t, y),
               j22 = gbb.eval_double(t, y);
        double det = j11 * j22 - j12 * j12;
        if (std::fabs(det) < 1e-300) break;
        double dt = (f1 * j22 - f2 * j12) / det;
        double dy = (j11 * f2 - j12 * f1) / det;
        t -= dt;
        y -= dy;
        if (std::fabs(dt) + std::fabs(dy) < 1e-13 * (1 + std::fabs(t) + std::fabs(y))) break;
      }
      double lsc2 = gscale * std::pow(1 + std::fabs(t) + std::fabs(y), g.total_degree());
      if (std::fabs(g.eval_double(t, y)) <= 1e-6 * lsc2) push(t, y);
    }
  }
  return out;
}

}  // namespace nrange
