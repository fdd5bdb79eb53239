#include "nrange/io.hpp"

#include <json.hpp>
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace nrange {

namespace {

using njson = nlohmann::ordered_json;

std::string dstr(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed6(double v) {
  if (std::fabs(v) < 5e-7) v = 0;  // avoid "-0.000000"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Int int_from_string(const std::string& s, const std::string& where) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("matrix file: bad integer '" + s + "' in " + where);
  }
}

njson rat4(const GRat& v) {
  return njson::array({v.re.get_num().get_str(), v.re.get_den().get_str(),
                       v.im.get_num().get_str(), v.im.get_den().get_str()});
}

njson witness_json(const PlanePoint& p) {
  njson w;
  w["x"] = dstr(p.x());
  w["y"] = dstr(p.y());
  w["err"] = p.exact ? "0" : "1e-12";
  if (p.exact)
    w["exact"] = njson::array({p.a.get_num().get_str(), p.a.get_den().get_str(),
                               p.b.get_num().get_str(), p.b.get_den().get_str()});
  return w;
}

njson bipoly_json(const BiPoly& g) {
  njson arr = njson::array();
  if (g.is_zero()) return arr;
  for (int i = 0; i <= g.deg_a(); i++)
    for (int j = 0; j <= g.deg_b(); j++) {
      const Rat& c = g.at(i, j);
      if (c == 0) continue;
      njson t;
      t["a"] = i;
      t["b"] = j;
      t["num"] = c.get_num().get_str();
      t["den"] = c.get_den().get_str();
      arr.push_back(std::move(t));
    }
  return arr;
}

struct Bounds {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool any = false;
  void add(double x, double y) {
    if (!any) {
      x0 = x1 = x;
      y0 = y1 = y;
      any = true;
    } else {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
};

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("NRANGE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

ComplexMatrix parse_matrix(std::istream& in, const std::string& origin) {
  njson j;
  try {
    j = njson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("matrix file " + origin + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw std::runtime_error("matrix file " + origin + ": need fields n, mode, entries");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw std::runtime_error("matrix file " + origin + ": n must be a positive integer");
  int n = j["n"].get<int>();
  std::string mode = j.value("mode", std::string("exact"));
  if (mode != "exact" && mode != "float")
    throw std::runtime_error("matrix file " + origin + ": mode must be exact or float");
  const njson& rows = j["entries"];
  if (!rows.is_array() || (int)rows.size() != n)
    throw std::runtime_error("matrix file " + origin + ": expected " + std::to_string(n) +
                             " rows, got " + std::to_string(rows.size()));
  ComplexMatrix A(n);
  A.exact = (mode == "exact");
  for (int i = 0; i < n; i++) {
    const njson& row = rows[i];
    if (!row.is_array() || (int)row.size() != n)
      throw std::runtime_error("matrix file " + origin + ": row " + std::to_string(i) + " has " +
                               std::to_string(row.size()) + " entries, expected " +
                               std::to_string(n));
    for (int jj = 0; jj < n; jj++) {
      const njson& e = row[jj];
      std::string where = "entry (" + std::to_string(i) + "," + std::to_string(jj) + ")";
      if (A.exact) {
        if (!e.is_array() || e.size() != 4 || !e[0].is_string())
          throw std::runtime_error("matrix file " + origin + ": " + where +
                                   " must be [num_re,den_re,num_im,den_im] strings");
        Int nr = int_from_string(e[0], where), dr = int_from_string(e[1], where);
        Int ni = int_from_string(e[2], where), di = int_from_string(e[3], where);
        if (dr == 0 || di == 0)
          throw std::runtime_error("matrix file " + origin + ": " + where + " has denominator 0");
        Rat re(nr, dr), im(ni, di);
        re.canonicalize();
        im.canonicalize();
        A.at(i, jj) = GRat(re, im);
      } else {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number())
          throw std::runtime_error("matrix file " + origin + ": " + where +
                                   " must be [re, im] numbers");
        A.at(i, jj) = GRat(rat_of_double_exact(e[0].get<double>()),
                           rat_of_double_exact(e[1].get<double>()));
      }
    }
  }
  return A;
}

ComplexMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("matrix file " + path + ": cannot open");
  return parse_matrix(in, path);
}

std::string serialize_matrix(const ComplexMatrix& A) {
  njson j;
  j["n"] = A.n;
  j["mode"] = A.exact ? "exact" : "float";
  njson rows = njson::array();
  for (int i = 0; i < A.n; i++) {
    njson row = njson::array();
    for (int jj = 0; jj < A.n; jj++) {
      const GRat& v = A.at(i, jj);
      if (A.exact)
        row.push_back(rat4(v));
      else
        row.push_back(njson::array({to_double(v.re), to_double(v.im)}));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string make_report(const ComplexMatrix& A, const std::vector<int>& ks,
                        const std::vector<RangeResult>& results, const CliConfig& cfg) {
  njson j;
  j["schema"] = "nrange-report/1";
  j["generator"] = "nrange 0.1.0";
  {
    char hx[20];
    std::snprintf(hx, sizeof hx, "%016llx", (unsigned long long)fnv1a(serialize_matrix(A)));
    njson in;
    in["n"] = A.n;
    in["matrix_hash"] = hx;
    in["k"] = ks;
    j["input"] = std::move(in);
  }
  {
    njson c;
    c["tol"] = dstr(cfg.tol);
    c["samples"] = cfg.samples;
    c["mode"] = cfg.mode;
    c["precision"] = "exact-rational curve/dual, double eigensolves";
    j["config"] = std::move(c);
  }
  if (!results.empty()) {
    njson kp = njson::array();
    for (const auto& [e, c] : results.front().kip.f.coeffs) {
      njson t;
      t["t"] = e[0];
      t["x"] = e[1];
      t["y"] = e[2];
      t["num"] = c.get_num().get_str();
      t["den"] = c.get_den().get_str();
      kp.push_back(std::move(t));
    }
    j["kippenhahn"] = std::move(kp);
  }
  njson res = njson::array();
  for (size_t i = 0; i < results.size(); i++) {
    const RangeResult& R = results[i];
    njson r;
    r["k"] = i < ks.size() ? ks[i] : (int)i + 1;
    r["dim"] = R.dim;
    r["ambiguous"] = R.ambiguous;
    if (R.point) r["point"] = witness_json(*R.point);
    if (R.endpoints)
      r["endpoints"] = njson::array({witness_json(R.endpoints->first), witness_json(R.endpoints->second)});
    if (!R.representatives.empty()) {
      njson reps = njson::array();
      for (const auto& p : R.representatives) reps.push_back(witness_json(p));
      r["representatives"] = std::move(reps);
    }
    if (R.g) {
      njson g;
      g["coeffs"] = bipoly_json(R.g->g);
      njson comps = njson::array();
      for (const auto& c : R.g->components) {
        njson cj;
        cj["singular_line"] = c.singular_line;
        cj["coeffs"] = bipoly_json(c.factor);
        comps.push_back(std::move(cj));
      }
      g["components"] = std::move(comps);
      r["g"] = std::move(g);
    }
    r["diagnostics"] = R.diagnostics;
    res.push_back(std::move(r));
  }
  j["results"] = std::move(res);
  return j.dump(2) + "\n";
}

CurveSamples sample_curve(const KippenhahnData& K, int m, double box_radius) {
  CurveSamples cs;
  if (m < 4) throw std::invalid_argument("sample_curve: need m >= 4");
  int n = K.n;
  // f(1, r c, r s) as a polynomial in r, per angle
  std::vector<std::vector<std::pair<std::array<int, 3>, double>>> terms(1);
  std::vector<std::pair<std::array<int, 3>, double>> tf;
  for (const auto& [e, c] : K.f.coeffs) tf.push_back({e, to_double(c)});
  cs.points.resize((size_t)m * n, {-1, 0, 0, 0});
  int wc = std::min(worker_count(), m);
  auto run = [&](int j0, int j1) {
    for (int j = j0; j < j1; j++) {
      double th = 2 * M_PI * j / m;
      double c = std::cos(th), s = std::sin(th);
      std::vector<double> u(n + 1, 0.0);
      for (const auto& [e, cf] : tf) {
        double w = cf;
        for (int q = 0; q < e[1]; q++) w *= c;
        for (int q = 0; q < e[2]; q++) w *= s;
        u[e[1] + e[2]] += w;
      }
      std::vector<double> ev = lambda_all(K.pair, c, s);
      for (int b = 0; b < n; b++) {
        double lam = ev[b];
        if (std::fabs(lam) * box_radius < 1.0) continue;  // point outside the box
        double r = -1.0 / lam;
        for (int it = 0; it < 6; it++) {
          double g = 0, dg = 0;
          for (int q = n; q >= 0; q--) {
            dg = dg * r + g;
            g = g * r + u[q];
          }
          if (dg == 0) break;
          double step = g / dg;
          r -= step;
          if (std::fabs(step) < 1e-15 * (1 + std::fabs(r))) break;
        }
        cs.points[(size_t)j * n + b] = {b, th, r * c, r * s};
      }
    }
  };
  if (wc <= 1) {
    run(0, m);
  } else {
    std::vector<std::thread> ts;
    for (int w = 0; w < wc; w++)
      ts.emplace_back(run, m * w / wc, m * (w + 1) / wc);
    for (auto& t : ts) t.join();
  }
  // drop the out-of-box markers, keep deterministic order (angle, branch)
  std::vector<CurveSamples::Point> kept;
  kept.reserve(cs.points.size());
  for (const auto& p : cs.points)
    if (p.branch >= 0) kept.push_back(p);
  cs.points = std::move(kept);
  return cs;
}

std::string curve_csv(const CurveSamples& cs) {
  std::string out = "branch,theta,x,y\n";
  for (const auto& p : cs.points)
    out += std::to_string(p.branch) + "," + dstr(p.theta) + "," + dstr(p.x) + "," + dstr(p.y) + "\n";
  return out;
}

std::string render_svg(const KippenhahnData& K, const std::vector<int>& ks,
                       const std::vector<RangeResult>& results, int samples) {
  if (results.empty()) throw std::domain_error("render_svg: nothing to draw");
  int m = std::max(samples, 64);
  std::vector<SupportPolygon> polys;
  for (size_t i = 0; i < results.size(); i++) {
    int k = i < ks.size() ? ks[i] : (int)i + 1;
    if (results[i].dim >= 0 && results[i].polygon)
      polys.push_back(*results[i].polygon);
    else if (results[i].dim >= 0)
      polys.push_back(halfplane_polygon(K.pair, K.n, k, m));
    else
      polys.push_back(SupportPolygon{});
  }
  Bounds bb;
  for (const auto& sp : polys)
    for (auto& [x, y] : sp.vertices) bb.add(x, y);
  auto add_witnesses = [&](const RangeResult& R) {
    if (R.point) bb.add(R.point->x(), R.point->y());
    if (R.endpoints) {
      bb.add(R.endpoints->first.x(), R.endpoints->first.y());
      bb.add(R.endpoints->second.x(), R.endpoints->second.y());
    }
    for (const auto& p : R.representatives) bb.add(p.x(), p.y());
  };
  for (const auto& R : results) add_witnesses(R);
  double rho = 1;
  for (const auto& sp : polys) rho = std::max(rho, sp.rho);
  double curve_box = bb.any ? 3 * (1 + std::max({std::fabs(bb.x0), std::fabs(bb.x1),
                                                 std::fabs(bb.y0), std::fabs(bb.y1)}))
                            : 3 * (1 + rho);
  CurveSamples cs = sample_curve(K, m, curve_box);
  for (const auto& p : cs.points) bb.add(p.x, p.y);
  if (!bb.any) bb = {-1, 1, -1, 1, true};
  double w = std::max(bb.x1 - bb.x0, 1e-6), h = std::max(bb.y1 - bb.y0, 1e-6);
  double mx = 0.1 * w, my = 0.1 * h;
  double x0 = bb.x0 - mx, y0 = bb.y0 - my, vw = w + 2 * mx, vh = h + 2 * my;
  double stroke = std::max(vw, vh) / 400;
  std::ostringstream svg;
  // y axis points up: flip via a group transform
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\""
      << fixed6(x0) << " " << fixed6(-y0 - vh) << " " << fixed6(vw) << " " << fixed6(vh)
      << "\">\n<g transform=\"scale(1,-1)\" transform-origin=\"0 0\">\n";
  static const char* kCurveColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                       "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};
  // filled ranges, low k first so darker (larger k) lands on top
  for (size_t i = 0; i < results.size(); i++) {
    const auto& sp = polys[i];
    if (results[i].dim < 2 || sp.vertices.size() < 3) continue;
    int k = i < ks.size() ? ks[i] : (int)i + 1;
    double op = std::min(0.2 + 0.15 * k, 0.85);
    svg << "<polygon fill=\"#336699\" fill-opacity=\"" << fixed6(op) << "\" stroke=\"none\" points=\"";
    for (auto& [x, y] : sp.vertices) svg << fixed6(x) << "," << fixed6(y) << " ";
    svg << "\"/>\n";
  }
  // curve branches
  int cur = -1;
  double last_th = 0;
  bool open = false;
  auto close_path = [&]() {
    if (open) svg << "\"/>\n";
    open = false;
  };
  for (const auto& p : cs.points) {
    bool brk = (p.branch != cur) || (p.theta - last_th > 4 * M_PI / m);
    if (brk) {
      close_path();
      cur = p.branch;
      svg << "<polyline fill=\"none\" stroke=\"" << kCurveColors[p.branch % 8] << "\" stroke-width=\""
          << fixed6(stroke) << "\" points=\"";
      open = true;
    }
    svg << fixed6(p.x) << "," << fixed6(p.y) << " ";
    cur = p.branch;
    last_th = p.theta;
  }
  close_path();
  // witnesses
  auto dot = [&](double x, double y, const char* color) {
    svg << "<circle cx=\"" << fixed6(x) << "\" cy=\"" << fixed6(y) << "\" r=\""
        << fixed6(2.5 * stroke) << "\" fill=\"" << color << "\"/>\n";
  };
  for (const auto& R : results) {
    if (R.point) dot(R.point->x(), R.point->y(), "#000000");
    if (R.endpoints) {
      svg << "<line x1=\"" << fixed6(R.endpoints->first.x()) << "\" y1=\""
          << fixed6(R.endpoints->first.y()) << "\" x2=\"" << fixed6(R.endpoints->second.x())
          << "\" y2=\"" << fixed6(R.endpoints->second.y()) << "\" stroke=\"#000000\" stroke-width=\""
          << fixed6(1.5 * stroke) << "\"/>\n";
      dot(R.endpoints->first.x(), R.endpoints->first.y(), "#000000");
      dot(R.endpoints->second.x(), R.endpoints->second.y(), "#000000");
    }
    for (const auto& p : R.representatives) dot(p.x(), p.y(), "#aa2200");
  }
  svg << "</g>\n";
  // legend
  double fs = vh / 28;
  for (size_t i = 0; i < results.size(); i++) {
    int k = i < ks.size() ? ks[i] : (int)i + 1;
    std::string entry = "\xce\x9b_" + std::to_string(k) + " ";
    if (results[i].dim < 0)
      entry += "= \xe2\x88\x85";
    else
      entry += "dim " + std::to_string(results[i].dim);
    svg << "<text x=\"" << fixed6(x0 + 0.3 * fs) << "\" y=\"" << fixed6(-y0 - vh + (i + 1.2) * fs)
        << "\" font-size=\"" << fixed6(fs) << "\" font-family=\"monospace\">" << entry << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

namespace {

void write_out(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << data;
}

Rat parse_rat(const std::string& s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) {
    // fall back to decimal notation
    try {
      size_t pos = 0;
      double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return rat_of_double_exact(v);
    } catch (...) {
      throw std::runtime_error("bad rational '" + s + "'");
    }
  }
  r.canonicalize();
  return r;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"rank-k numerical range computations"};
  app.require_subcommand(1);
  std::string matrix_path, out_path, svg_path, csv_path, chart = "t=1", mode = "exact", point_arg;
  std::vector<int> ks;
  CliConfig cfg;
  auto add_common = [&](CLI::App* sc, bool with_k) {
    sc->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    if (with_k) sc->add_option("--k", ks, "rank parameter, repeatable");
    sc->add_option("--tol", cfg.tol, "membership tolerance");
    sc->add_option("--samples", cfg.samples, "support sampling count");
    sc->add_option("--out", out_path, "report path (default stdout)");
    sc->add_option("--svg", svg_path, "SVG figure path");
    sc->add_option("--csv", csv_path, "CSV path");
    sc->add_option("--mode", mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));
  };
  CLI::App* c_compute = app.add_subcommand("compute", "classify Lambda_k and report witnesses");
  add_common(c_compute, true);
  CLI::App* c_curve = app.add_subcommand("curve", "sample the real Kippenhahn curve");
  add_common(c_curve, false);
  c_curve->add_option("--chart", chart, "affine chart (t=1)");
  CLI::App* c_boundary = app.add_subcommand("boundary", "emit the boundary polynomial g_A");
  add_common(c_boundary, false);
  CLI::App* c_member = app.add_subcommand("member", "single-point membership test");
  add_common(c_member, true);
  c_member->add_option("--point", point_arg, "query point a,b (rationals)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    ComplexMatrix A = parse_matrix_file(matrix_path);
    cfg.mode = mode;
    if (mode == "float") A.exact = false;
    if (c_compute->parsed()) {
      if (ks.empty()) {
        std::cerr << "compute: at least one --k is required\n";
        return 1;
      }
      RangeConfig rc;
      rc.tol = cfg.tol;
      rc.samples = std::max(cfg.samples, 8);
      std::vector<RangeResult> results;
      bool ambiguous = false;
      for (int k : ks) {
        results.push_back(compute_range_auto(A, k, rc));
        ambiguous = ambiguous || results.back().ambiguous;
      }
      write_out(out_path, make_report(A, ks, results, cfg));
      if (!svg_path.empty())
        write_out(svg_path, render_svg(results.front().kip, ks, results, cfg.samples));
      if (!csv_path.empty()) {
        double rr = results.front().polygon ? results.front().polygon->rho : 1.0;
        write_out(csv_path,
                  curve_csv(sample_curve(results.front().kip, cfg.samples, 100 * (1 + rr))));
      }
      return ambiguous ? 3 : 0;
    }
    KippenhahnData K = kippenhahn_poly(A);
    if (c_curve->parsed()) {
      if (chart != "t=1") throw std::runtime_error("unsupported chart '" + chart + "' (only t=1)");
      CurveSamples cs = sample_curve(K, std::max(cfg.samples, 8), 100.0);
      write_out(csv_path.empty() ? out_path : csv_path, curve_csv(cs));
      return 0;
    }
    if (c_boundary->parsed()) {
      BoundaryPoly B = boundary_poly(K);
      njson j;
      j["schema"] = "nrange-boundary/1";
      j["g"] = bipoly_json(B.g);
      njson comps = njson::array();
      for (const auto& c : B.components) {
        njson cj;
        cj["singular_line"] = c.singular_line;
        cj["coeffs"] = bipoly_json(c.factor);
        comps.push_back(std::move(cj));
      }
      j["components"] = std::move(comps);
      j["recovered_infinity_lines"] = B.recovered_infinity_lines;
      write_out(out_path, j.dump(2) + "\n");
      return 0;
    }
    // member
    size_t comma = point_arg.find(',');
    if (comma == std::string::npos) throw std::runtime_error("--point needs the form a,b");
    Rat pa = parse_rat(point_arg.substr(0, comma));
    Rat pb = parse_rat(point_arg.substr(comma + 1));
    if (ks.size() != 1) {
      std::cerr << "member: exactly one --k is required\n";
      return 1;
    }
    MembershipVerdict v = mode == "float"
                              ? membership_test_float(K, ks[0], to_double(pa), to_double(pb), cfg.tol)
                              : membership_test(K, ks[0], pa, pb, cfg.tol);
    njson j;
    j["schema"] = "nrange-member/1";
    j["k"] = ks[0];
    j["point"] = njson::array({dstr(to_double(pa)), dstr(to_double(pb))});
    j["member"] = v.member;
    j["margin"] = dstr(v.margin);
    j["three_way"] = v.three_way;
    j["ell_power"] = v.ell_power;
    write_out(out_path, j.dump(2) + "\n");
    return v.three_way == 0 ? 3 : 0;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nrange
