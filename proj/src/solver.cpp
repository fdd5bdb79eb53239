#include "nrange/solver.hpp"

#include "nrange/roots.hpp"
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nrange {

namespace {

constexpr double kPi = 3.14159265358979323846;

const Rat& root_precision() {
  static const Rat p(Int(1), Int(1000000000000L));
  return p;
}

UPoly upoly_of(const IPoly& p) {
  UPoly r;
  r.c.reserve(p.c.size());
  for (const auto& v : p.c) r.c.emplace_back(v);
  r.trim();
  return r;
}

struct CritIv {
  Rat lo, hi;
  double mid;
};

void collect_roots(const UPoly& p, std::vector<CritIv>& out) {
  if (p.deg() < 1) return;
  RootIsolation ri = real_roots(p, root_precision());
  for (const auto& iv : ri.intervals)
    out.push_back({iv.lo, iv.hi, to_double((iv.lo + iv.hi) / 2)});
}

// Membership with the retest ladder: a verdict whose margin lands within tol
// is reclassified against tol/10; only a margin within tol/10 stays ambiguous.
struct Laddered {
  MembershipVerdict v;
  bool ambiguous = false;
};

Laddered ladder_test(const KippenhahnData& K, int k, const PlanePoint& p, double tol) {
  Laddered out;
  out.v = p.exact ? membership_test(K, k, p.a, p.b, tol)
                  : membership_test_float(K, k, p.af, p.bf, tol);
  if (std::fabs(out.v.margin) <= tol) {
    double t2 = tol / 10;
    out.v.member = out.v.margin >= -t2;
    out.v.three_way = (out.v.margin > t2) ? 1 : (out.v.margin < -t2 ? -1 : 0);
    out.ambiguous = std::fabs(out.v.margin) <= t2;
  }
  return out;
}

void note(RangeResult& R, const std::string& msg) { R.diagnostics.push_back(msg); }

std::string fmt_pt(const PlanePoint& p) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << p.x() << ", " << p.y() << ")";
  return os.str();
}

// largest-degree fallback for the exact dual-curve pipeline; above this the
// solver classifies from dense support sampling instead
constexpr int kExactDualDegree = 4;

void classify_from_span_point(RangeResult& R, const KippenhahnData& K, int k,
                              const ProjPointR& p, double tol) {
  TangentSet T = singularity_tangents(K, p);
  // every candidate lies on the constraint line p0 + a p1 + b p2 = 0; its
  // direction in the (a,b) plane
  double d1 = p.fp[2], d2 = -p.fp[1];
  struct Pass {
    PlanePoint pt;
    double proj, margin;
  };
  std::vector<Pass> passing;
  for (const auto& L : T.lines) {
    PlanePoint q = L.exact ? PlanePoint::from_exact(L.a, L.b)
                           : PlanePoint::from_float(L.af, L.bf);
    Laddered lr = ladder_test(K, k, q, tol);
    R.ambiguous = R.ambiguous || lr.ambiguous;
    if (lr.v.margin < -tol) continue;
    double resid = p.fp[0] + p.fp[1] * q.x() + p.fp[2] * q.y();
    if (std::fabs(resid) > 1e-6 * (1 + std::fabs(q.x()) + std::fabs(q.y())))
      throw std::runtime_error("compute_range: accepted tangent point off the singular-point line");
    passing.push_back({q, d1 * q.x() + d2 * q.y(), lr.v.margin});
  }
  if (passing.empty()) {
    R.dim = -1;
    note(R, "antipodal singular point found but no tangent point is a member");
    return;
  }
  auto lo = std::min_element(passing.begin(), passing.end(),
                             [](const Pass& u, const Pass& v) { return u.proj < v.proj; });
  auto hi = std::max_element(passing.begin(), passing.end(),
                             [](const Pass& u, const Pass& v) { return u.proj < v.proj; });
  double scale = 1 + std::max(std::fabs(lo->proj), std::fabs(hi->proj));
  if (hi->proj - lo->proj <= 1e-9 * scale) {
    const Pass* best = &*lo;
    for (const auto& c : passing)
      if (c.margin > best->margin || (c.margin == best->margin && c.pt.exact && !best->pt.exact))
        best = &c;
    R.dim = 0;
    R.point = best->pt;
    note(R, "single tangent point through the antipodal singular point: " + fmt_pt(best->pt));
  } else {
    R.dim = 1;
    R.endpoints = {lo->pt, hi->pt};
    note(R, "segment on the singular-point line, endpoints " + fmt_pt(lo->pt) + " and " +
                fmt_pt(hi->pt));
  }
}

void classify_sampled(RangeResult& R, const ComplexMatrix& A, const KippenhahnData& K, int k,
                      const RangeConfig& cfg) {
  double tol = cfg.tol;
  SupportPolygon sp = halfplane_polygon(A, k, std::max(cfg.samples, 8));
  R.polygon = sp;
  double eps = 1e-5 * (1 + sp.rho);
  if (sp.empty()) {
    R.dim = -1;
    note(R, "support sampling: every halfplane intersection is empty");
    return;
  }
  double area = sp.area(), diam = sp.diameter();
  auto [cx, cy] = sp.centroid();
  PlanePoint c = PlanePoint::from_float(cx, cy);
  if (area > eps) {
    Laddered lr = ladder_test(K, k, c, tol);
    R.ambiguous = R.ambiguous || lr.ambiguous;
    if (lr.v.margin < -tol)
      throw std::runtime_error("compute_range: sampled region center fails membership");
    R.dim = 2;
    R.representatives = {c};
    note(R, "full-dimensional by support sampling; dual boundary polynomial omitted at degree > " +
                std::to_string(kExactDualDegree));
    return;
  }
  if (diam > eps) {
    // degenerate strip: take the farthest vertex pair as endpoints
    size_t bi = 0, bj = 0;
    double bd = -1;
    for (size_t i = 0; i < sp.vertices.size(); i++)
      for (size_t j = i + 1; j < sp.vertices.size(); j++) {
        double dx = sp.vertices[i].first - sp.vertices[j].first;
        double dy = sp.vertices[i].second - sp.vertices[j].second;
        double d = std::hypot(dx, dy);
        if (d > bd) bd = d, bi = i, bj = j;
      }
    PlanePoint e1 = PlanePoint::from_float(sp.vertices[bi].first, sp.vertices[bi].second);
    PlanePoint e2 = PlanePoint::from_float(sp.vertices[bj].first, sp.vertices[bj].second);
    Laddered l1 = ladder_test(K, k, e1, tol), l2 = ladder_test(K, k, e2, tol);
    if (l1.v.margin < -eps || l2.v.margin < -eps)
      throw std::runtime_error("compute_range: sampled segment endpoints fail membership");
    R.dim = 1;
    R.endpoints = {e1, e2};
    R.ambiguous = true;
    note(R, "segment classified from support sampling only");
    return;
  }
  Laddered lr = ladder_test(K, k, c, tol);
  R.ambiguous = R.ambiguous || lr.ambiguous;
  if (lr.v.margin < -eps) {
    R.dim = -1;
    note(R, "support polygon collapses to a point but its center fails membership");
    return;
  }
  R.dim = 0;
  R.point = c;
  if (lr.v.margin < -tol) {
    R.ambiguous = true;
    note(R, "point witness accepted within sampling tolerance only");
  }
  note(R, "support polygon collapses to the point " + fmt_pt(c));
}

}  // namespace

double SupportPolygon::area() const {
  double s = 0;
  int m = (int)vertices.size();
  for (int i = 0; i < m; i++) {
    auto [x1, y1] = vertices[i];
    auto [x2, y2] = vertices[(i + 1) % m];
    s += x1 * y2 - x2 * y1;
  }
  return std::fabs(s) / 2;
}

double SupportPolygon::diameter() const {
  double d = 0;
  for (size_t i = 0; i < vertices.size(); i++)
    for (size_t j = i + 1; j < vertices.size(); j++)
      d = std::max(d, std::hypot(vertices[i].first - vertices[j].first,
                                 vertices[i].second - vertices[j].second));
  return d;
}

std::pair<double, double> SupportPolygon::centroid() const {
  if (vertices.empty()) return {0, 0};
  double a2 = 0, cx = 0, cy = 0;
  int m = (int)vertices.size();
  for (int i = 0; i < m; i++) {
    auto [x1, y1] = vertices[i];
    auto [x2, y2] = vertices[(i + 1) % m];
    double w = x1 * y2 - x2 * y1;
    a2 += w;
    cx += (x1 + x2) * w;
    cy += (y1 + y2) * w;
  }
  if (std::fabs(a2) > 1e-14) return {cx / (3 * a2), cy / (3 * a2)};
  double sx = 0, sy = 0;
  for (auto& [x, y] : vertices) sx += x, sy += y;
  return {sx / m, sy / m};
}

SupportPolygon halfplane_polygon(const ComplexMatrix& A, int k, int m) {
  return halfplane_polygon(hermitian_parts(A), A.n, k, m);
}

SupportPolygon halfplane_polygon(const HermitianPair& pair, int n, int k, int m) {
  if (m < 8) throw std::invalid_argument("halfplane_polygon: need m >= 8");
  if (k < 1 || k > n) throw std::out_of_range("halfplane_polygon: k out of range");
  SupportPolygon sp;
  sp.thetas.resize(m);
  std::vector<double> lk(m), cth(m), sth(m);
  double rho = 0;
  for (int j = 0; j < m; j++) {
    double th = 2 * kPi * j / m;
    sp.thetas[j] = th;
    cth[j] = std::cos(th);
    sth[j] = std::sin(th);
    std::vector<double> ev = lambda_all(pair, cth[j], sth[j]);
    lk[j] = ev[k - 1];
    rho = std::max({rho, std::fabs(ev[0]), std::fabs(ev[n - 1])});
  }
  sp.rho = rho;
  double Rb = 4 * (1 + rho);
  std::vector<std::pair<double, double>> poly = {{-Rb, -Rb}, {Rb, -Rb}, {Rb, Rb}, {-Rb, Rb}};
  for (int j = 0; j < m && !poly.empty(); j++) {
    std::vector<std::pair<double, double>> out;
    int v = (int)poly.size();
    // slack keeps degenerate (zero-width) polygons from being chopped by
    // sign noise in d when both endpoints sit on the clip line
    double ctol = 1e-12 * (1 + rho);
    for (int i = 0; i < v; i++) {
      auto [x1, y1] = poly[i];
      auto [x2, y2] = poly[(i + 1) % v];
      double d1 = lk[j] - (cth[j] * x1 + sth[j] * y1);
      double d2 = lk[j] - (cth[j] * x2 + sth[j] * y2);
      bool in1 = d1 >= -ctol, in2 = d2 >= -ctol;
      if (in1) out.push_back({x1, y1});
      if (in1 != in2) {
        double t = std::clamp(d1 / (d1 - d2), 0.0, 1.0);
        out.push_back({x1 + t * (x2 - x1), y1 + t * (y2 - y1)});
      }
    }
    poly.swap(out);
  }
  // drop duplicate consecutive vertices left behind by near-tangent clips
  double dtol = 1e-12 * (1 + Rb);
  for (auto& p : poly) {
    if (sp.vertices.empty() || std::hypot(p.first - sp.vertices.back().first,
                                          p.second - sp.vertices.back().second) > dtol)
      sp.vertices.push_back(p);
  }
  while (sp.vertices.size() > 1 &&
         std::hypot(sp.vertices.front().first - sp.vertices.back().first,
                    sp.vertices.front().second - sp.vertices.back().second) <= dtol)
    sp.vertices.pop_back();
  return sp;
}

std::vector<std::pair<Rat, Rat>> bounded_component_reps(const BiPoly& g) {
  if (g.is_zero() || (g.deg_a() <= 0 && g.deg_b() <= 0))
    throw std::domain_error("bounded_component_reps: g is constant");
  BiPoly work = g;
  bool sheared = false;
  if (work.deg_a() <= 0) {
    work = work.shear_b_plus_a();
    sheared = true;
  }
  IPoly2 P = work.as_poly_in_a();
  IPoly cb = poly_content(P);
  IPoly2 P2 = poly_primitive(P);
  // critical b values: the a-discriminant of the a-dependent part, its leading
  // a-coefficient, and the a-free content
  std::vector<CritIv> crit;
  if (P2.deg() >= 1) {
    BiPoly g2 = BiPoly::from_poly_in_a(P2);
    collect_roots(bipoly_resultant_a(g2, g2.partial_a()), crit);
    collect_roots(upoly_of(P2.lead()), crit);
  }
  collect_roots(upoly_of(cb), crit);
  std::sort(crit.begin(), crit.end(), [](const CritIv& u, const CritIv& v) { return u.mid < v.mid; });
  std::vector<CritIv> merged;
  for (const auto& cv : crit) {
    if (!merged.empty() && cv.mid - merged.back().mid <= 1e-10) {
      if (cv.lo < merged.back().lo) merged.back().lo = cv.lo;
      if (merged.back().hi < cv.hi) merged.back().hi = cv.hi;
      merged.back().mid = to_double((merged.back().lo + merged.back().hi) / 2);
    } else {
      merged.push_back(cv);
    }
  }
  // sample in the middle half of the gap so the chosen rational can never be
  // one of the delimiting roots
  auto inner_sample = [](const Rat& lo, const Rat& hi) {
    return lo < hi ? simplest_rational_between((lo * 3 + hi) / 4, (lo + hi * 3) / 4)
                   : (lo + hi) / 2;
  };
  std::vector<std::pair<Rat, Rat>> reps;
  for (size_t i = 1; i < merged.size(); i++) {
    Rat bp = inner_sample(merged[i - 1].hi, merged[i].lo);
    UPoly ua = work.eval_at_b(bp);
    if (ua.deg() < 2) continue;
    RootIsolation ri = real_roots(ua, root_precision());
    for (size_t j = 1; j < ri.intervals.size(); j++) {
      Rat ap = inner_sample(ri.intervals[j - 1].hi, ri.intervals[j].lo);
      reps.emplace_back(ap, sheared ? ap + bp : bp);
    }
  }
  return reps;
}

RangeResult compute_range(const ComplexMatrix& A, int k, const RangeConfig& cfg) {
  int n = A.n;
  if (k < 1 || 2 * k >= n + 1)
    throw std::out_of_range("compute_range: requires 1 <= k < (n+1)/2");
  RangeResult R;
  R.kip = kippenhahn_poly(A);
  const KippenhahnData& K = R.kip;
  double tol = cfg.tol;
  if (K.fred.degree == 1) {
    R.dim = 0;
    R.point = PlanePoint::from_exact(K.fred.get(0, 1, 0), K.fred.get(0, 0, 1));
    note(R, "f is a power of one linear form; the range is the single point " + fmt_pt(*R.point));
    return R;
  }
  AntipodalSpan span = antipodal_span(K, k);
  if (span.dimV == 2) {
    R.dim = -1;
    note(R, "antipodal singular points impose inconsistent line constraints");
    return R;
  }
  if (span.dimV == 1) {
    if (!span.has_vperp) {
      R.dim = -1;
      note(R, "constraint lines meet at infinity only");
      return R;
    }
    PlanePoint p = PlanePoint::from_float(span.vp_a, span.vp_b);
    Laddered lr = ladder_test(K, k, p, tol);
    R.ambiguous = lr.ambiguous;
    if (lr.v.margin >= -tol) {
      R.dim = 0;
      R.point = p;
      note(R, "unique point satisfying two independent line constraints: " + fmt_pt(p));
    } else {
      R.dim = -1;
      note(R, "constraint-line intersection point fails membership");
    }
    return R;
  }
  if (span.dimV == 0) {
    classify_from_span_point(R, K, k, span.S.front(), tol);
    return R;
  }
  // no antipodal singular point: the range is empty, a tritangent point, or
  // full-dimensional
  if (K.fred.degree > kExactDualDegree) {
    classify_sampled(R, A, K, k, cfg);
    return R;
  }
  BoundaryPoly B = boundary_poly(K);
  std::vector<PlanePoint> reps;
  if (!B.g.is_zero() && (B.g.deg_a() > 0 || B.g.deg_b() > 0)) {
    for (const auto& [ra, rb] : bounded_component_reps(B.g)) {
      PlanePoint q = PlanePoint::from_exact(ra, rb);
      Laddered lr = ladder_test(K, k, q, tol);
      R.ambiguous = R.ambiguous || lr.ambiguous;
      if (lr.v.margin > tol) reps.push_back(q);
    }
  }
  if (!reps.empty()) {
    R.dim = 2;
    R.g = B;
    R.representatives = reps;
    note(R, std::to_string(reps.size()) + " interior representative(s) confirmed by membership");
    return R;
  }
  const PlanePoint* best = nullptr;
  PlanePoint bestp;
  double bestm = 0;
  for (const auto& [ca, cb2] : tritangent_candidates(K)) {
    PlanePoint q = PlanePoint::from_float(ca, cb2);
    Laddered lr = ladder_test(K, k, q, tol);
    R.ambiguous = R.ambiguous || lr.ambiguous;
    if (lr.v.margin >= -tol && (!best || lr.v.margin > bestm)) {
      bestp = q;
      bestm = lr.v.margin;
      best = &bestp;
    }
  }
  if (best) {
    R.dim = 0;
    R.point = bestp;
    note(R, "no interior representative; tritangent point " + fmt_pt(bestp) + " is a member");
  } else {
    R.dim = -1;
    note(R, "no representative or tritangent candidate passes membership");
  }
  return R;
}

RangeResult compute_range_high_k(const ComplexMatrix& A, int k, const RangeConfig& cfg) {
  int n = A.n;
  if (2 * k < n + 1 || k > n)
    throw std::out_of_range("compute_range_high_k: requires (n+1)/2 <= k <= n");
  RangeResult R;
  R.kip = kippenhahn_poly(A);
  const KippenhahnData& K = R.kip;
  int need = 2 * k - n;
  struct Pass {
    PlanePoint pt;
    double margin;
  };
  std::vector<Pass> passing;
  for (const auto& L : linear_factors(K.f)) {
    if (L.mult < need) continue;
    PlanePoint q = L.exact ? PlanePoint::from_exact(L.a, L.b)
                           : PlanePoint::from_float(L.af, L.bf);
    Laddered lr = ladder_test(K, k, q, cfg.tol);
    R.ambiguous = R.ambiguous || lr.ambiguous;
    if (lr.v.margin >= -cfg.tol) passing.push_back({q, lr.v.margin});
  }
  if (passing.empty()) {
    R.dim = -1;
    note(R, "no real linear factor of multiplicity >= " + std::to_string(need) +
                " passes membership");
    return R;
  }
  const Pass* best = &passing[0];
  for (const auto& c : passing) {
    if (std::fabs(c.pt.x() - best->pt.x()) + std::fabs(c.pt.y() - best->pt.y()) >
        1e-8 * (1 + std::fabs(best->pt.x()) + std::fabs(best->pt.y())))
      throw std::runtime_error("compute_range_high_k: several distinct points pass membership");
    if (c.margin > best->margin) best = &c;
  }
  R.dim = 0;
  R.point = best->pt;
  note(R, "linear factor of multiplicity >= " + std::to_string(need) + " gives the point " +
              fmt_pt(best->pt));
  return R;
}

RangeResult compute_range_auto(const ComplexMatrix& A, int k, const RangeConfig& cfg) {
  return 2 * k < A.n + 1 ? compute_range(A, k, cfg) : compute_range_high_k(A, k, cfg);
}

}  // namespace nrange
