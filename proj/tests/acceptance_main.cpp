// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <vector>

#include <json.hpp>

#include "sphereq/coxeter.hpp"
#include "sphereq/geometry.hpp"
#include "sphereq/polarity.hpp"
#include "sphereq/linalg.hpp"
#include "sphereq/report.hpp"
#include "sphereq/rng.hpp"

using namespace sphereq;
using nlohmann::json;

namespace {

int g_failures = 0;

void report_line(int criterion, const std::string& what, bool pass,
                 const std::string& detail = "") {
  std::printf("%s  criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

const std::uint64_t kSeed = 2025;

// --------------------------------------------------------------------------
// 1. Algebra construction: generator counts and bracket closure.
// --------------------------------------------------------------------------
void criterion1() {
  bool ok = true;
  std::string detail;
  for (const auto& entry : registry()) {
    auto rep = build(entry.spec);
    double resid = rep.bracket_closure_residual();
    bool skew_ok = true;
    for (const Mat& g : rep.generators)
      skew_ok = skew_ok && (g + g.transpose()).cwiseAbs().maxCoeff() < 1e-12;
    if (rep.algebra_dim() != entry.spec.algebra_dim() || resid >= 1e-10 ||
        !skew_ok) {
      ok = false;
      detail += entry.id + " ";
    }
  }
  report_line(1, "generator counts match the dimension formulas and bracket "
                 "closure residual < 1e-10 on every registry group",
              ok, detail);
}

// --------------------------------------------------------------------------
// 2. Cohomogeneity column reproduction, exact integers.
// --------------------------------------------------------------------------
void criterion2() {
  const std::vector<std::pair<std::string, int>> expected = {
      {"T2-row1a", 3}, {"T2-row1b", 3}, {"T2-row1c", 3}, {"T2-row2", 4},
      {"T2-row3", 5},  {"T2-row4a", 4}, {"T2-row4b", 4}, {"T2-row5a", 3},
      {"T2-row5b", 3}, {"T2-row6", 6},  {"T2-row7", 5},  {"T2-row8", 4},
      {"T2-row9a", 3}, {"T2-row9b", 3}, {"T2-row9c", 3}, {"T2-row10", 4},
      {"T3-row11", 3}, {"T3-row12", 3}, {"T3-row13a", 3}, {"T3-row13b", 3},
      {"T3-row13c", 3}, {"T3-row14", 3}};
  bool ok = true;
  std::string detail;
  for (const auto& [id, want] : expected) {
    int got = cohomogeneity(build_entry(id), derive_seed(kSeed, id));
    if (got != want) {
      ok = false;
      detail += id + " got " + std::to_string(got) + " want " +
                std::to_string(want) + "; ";
    }
  }
  report_line(2, "every table row reproduces its cohomogeneity integer "
                 "(3,3,3,4,5,4,4,3,3,6,5,4,3,3,3,4 | 3,3,3,3,3,3)",
              ok, detail);
}

// --------------------------------------------------------------------------
// 3. Constant curvature 4 rows: 200 samples within 1e-6, finite-difference
//    cross-check of the A-tensor within 1e-3 on the curvature value.
// --------------------------------------------------------------------------
double curvature_fd(const LieGroupRep& rep, const Vec& p, const Vec& x,
                    const Vec& y) {
  const double h = 1e-5;
  Mat pv = vertical_projector(rep, p);
  Mat dpx =
      (vertical_projector(rep, p + h * x) - vertical_projector(rep, p - h * x)) /
      (2 * h);
  Mat dpy =
      (vertical_projector(rep, p + h * y) - vertical_projector(rep, p - h * y)) /
      (2 * h);
  Vec a = -0.5 * (pv * (dpx * y - dpy * x));
  return 1.0 + 3.0 * a.squaredNorm();
}

void criterion3() {
  bool ok = true;
  std::string detail;
  for (const auto& entry : registry()) {
    if (!entry.table1) continue;
    auto rep = build(entry.spec);
    const std::uint64_t seed = derive_seed(kSeed, entry.id);
    auto stats = curvature_statistics(rep, seed, 200);
    bool in_band = stats.min > 4.0 - 1e-6 && stats.max < 4.0 + 1e-6 &&
                   stats.samples == 200;
    // Finite-difference cross-check on fresh samples.
    Rng rng(derive_seed(seed, "fd"));
    const int max_orbit = rep.ambient_dim - cohomogeneity(rep, seed);
    bool fd_ok = true;
    int done = 0;
    while (done < 5) {
      Vec p = rng.unit_vector(rep.ambient_dim);
      if (orbit_dim_at(rep, p) != max_orbit) continue;
      auto iso = isotropy_algebra(rep, p);
      const int hd = static_cast<int>(iso.slice_basis.cols());
      Vec x = (iso.slice_basis * rng.gaussian_vector(hd)).normalized();
      Vec y = iso.slice_basis * rng.gaussian_vector(hd);
      y -= y.dot(x) * x;
      if (y.norm() < 1e-9) continue;
      y.normalize();
      double k_an = oneill_curvature(rep, p, x, y).curvature;
      double k_fd = curvature_fd(rep, p, x, y);
      fd_ok = fd_ok && std::abs(k_an - k_fd) < 1e-3;
      ++done;
    }
    if (!in_band || !fd_ok) {
      ok = false;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s K in [%.9f, %.9f] fd %s; ",
                    entry.id.c_str(), stats.min, stats.max,
                    fd_ok ? "ok" : "off");
      detail += buf;
    }
  }
  report_line(3, "constant-curvature-4 rows: 200 sampled curvatures in "
                 "[4-1e-6, 4+1e-6] with finite-difference cross-check at 1e-3",
              ok, detail);
}

// --------------------------------------------------------------------------
// 4. Polar controls vs non-polar table rows.
// --------------------------------------------------------------------------
void criterion4() {
  bool ok = true;
  std::string detail;
  for (const char* id : {"polar-control-so3-vec", "polar-control-so4-vec",
                         "polar-control-torus-split"}) {
    auto v = is_polar(build_entry(id), derive_seed(kSeed, id));
    if (v.verdict != Polarity::polar || v.residual >= 1e-8) {
      ok = false;
      detail += std::string(id) + " residual " + std::to_string(v.residual) +
                "; ";
    }
  }
  for (const auto& entry : registry()) {
    if (entry.table_row.empty()) continue;
    auto v = is_polar(build(entry.spec), derive_seed(kSeed, entry.id));
    if (v.verdict != Polarity::non_polar || v.residual <= 1e-2) {
      ok = false;
      detail += entry.id + " residual " + std::to_string(v.residual) + "; ";
    }
  }
  report_line(4, "controls are polar with residual < 1e-8; every table row "
                 "is non-polar with residual > 1e-2",
              ok, detail);
}

// --------------------------------------------------------------------------
// 5. Infinitesimal polarity verdicts.
// --------------------------------------------------------------------------
void criterion5() {
  bool ok = true;
  std::string detail;
  for (const auto& entry : registry()) {
    if (entry.table_row.empty()) continue;
    auto r =
        is_infinitesimally_polar(build(entry.spec), derive_seed(kSeed, entry.id));
    if (r.verdict != Polarity::polar) {
      ok = false;
      detail += entry.id + " " + to_string(r.verdict) + "; ";
    }
  }
  auto bad = is_infinitesimally_polar(build_entry("torus-su3-maximal"),
                                      derive_seed(kSeed, "torus-su3-maximal"));
  if (bad.verdict != Polarity::non_polar) {
    ok = false;
    detail += "torus-su3-maximal " + to_string(bad.verdict) + "; ";
  }
  report_line(5, "all table rows are infinitesimally polar; the rank-2 torus "
                 "with weights (1,0),(0,1),(-1,-1) on C^3 is not",
              ok, detail);
}

// --------------------------------------------------------------------------
// 6. Killing-field profile and boundary-to-soul distance.
// --------------------------------------------------------------------------
void criterion6() {
  auto sp2d = build_entry("T2-row6");
  Mat xi = Mat::Zero(16, 16);
  xi.block(0, 8, 8, 8) = -Mat::Identity(8, 8);
  xi.block(8, 0, 8, 8) = Mat::Identity(8, 8);
  auto gamma = [](double r) {
    Vec p = Vec::Zero(16);
    p[0] = std::cos(r);
    p[12] = std::sin(r);
    return p;
  };
  bool ok = true;
  std::string detail;
  for (int k = 1; k <= 7; ++k) {
    double r = 0.1 * k;
    auto [vert, hor] = killing_component_norms(sp2d, xi, gamma(r));
    if (std::abs(vert - std::sin(2 * r)) >= 1e-9 ||
        std::abs(hor - std::cos(2 * r)) >= 1e-9) {
      ok = false;
      char buf[120];
      std::snprintf(buf, sizeof buf, "r=%.1f (%.2e, %.2e); ", r,
                    vert - std::sin(2 * r), hor - std::cos(2 * r));
      detail += buf;
    }
  }
  auto d = orbit_distance(sp2d, gamma(0), gamma(M_PI / 4),
                          derive_seed(kSeed, "gamma"));
  if (std::abs(d.distance - M_PI / 4) >= 1e-3) {
    ok = false;
    detail += "distance " + std::to_string(d.distance) + "; ";
  }
  report_line(6, "Killing profile (sin 2r, cos 2r) at r = 0.1..0.7 to 1e-9; "
                 "distance from gamma(0) to gamma(pi/4) equals pi/4 +- 1e-3",
              ok, detail);
}

// --------------------------------------------------------------------------
// 7. The doubled spin(9) reduction chain.
// --------------------------------------------------------------------------
void criterion7() {
  auto rep = build_entry("T2-row2");
  const std::uint64_t seed = derive_seed(kSeed, "T2-row2");
  auto h = principal_isotropy(rep, seed);
  auto red = lrs_reduction(rep, seed);
  int red_cohom = cohomogeneity(red.rep, seed);
  bool ok = h.size() == 8 && red.fixed_basis.cols() == 8 &&
            red.rep.algebra_dim() == 4 && red_cohom == 4;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "principal %zu, fixed %d, reduced algebra %d, reduced cohom %d",
                h.size(), static_cast<int>(red.fixed_basis.cols()),
                red.rep.algebra_dim(), red_cohom);
  report_line(7, "spin(9) chain: principal isotropy 8, fixed space 8, reduced "
                 "algebra 4, reduced cohomogeneity 4",
              ok, buf);
}

// --------------------------------------------------------------------------
// 8. Coxeter checker on the bundled complexes.
// --------------------------------------------------------------------------
void criterion8() {
  CoxeterComplexData teardrop;
  teardrop.mirrors = {"rim"};
  teardrop.corners.push_back({2, {0, 0}});

  CoxeterComplexData square;
  square.mirrors = {"a", "b", "c", "d"};
  square.corners.push_back({2, {0, 1}});
  square.corners.push_back({2, {1, 2}});
  square.corners.push_back({2, {2, 3}});
  square.corners.push_back({2, {3, 0}});

  bool ok = check_goodness(teardrop).verdict == Goodness::bad &&
            check_goodness(square).verdict == Goodness::good;

  // C3 implies C1 and C2 on every bundled complex carrying both data forms.
  struct Bundle {
    CoxeterComplexData complex;
    std::vector<FaceCompletion> faces;
  };
  std::vector<Bundle> bundles;
  {
    Bundle b;
    b.complex = teardrop;
    FaceCompletion f;
    f.mirror = "rim";
    f.boundary_strata = {"end+", "end-"};
    f.intersections = {{0, 1, false}};
    b.faces = {f};
    bundles.push_back(b);
  }
  {
    Bundle b;
    b.complex.mirrors = {"a", "b", "c"};
    b.complex.corners.push_back({2, {0, 1}});
    b.complex.corners.push_back({2, {1, 2}});
    b.complex.corners.push_back({2, {2, 0}});
    for (const char* name : {"a", "b", "c"}) {
      FaceCompletion f;
      f.mirror = name;
      f.boundary_strata = {"edge1", "edge2"};
      f.intersections = {{0, 1, true}};
      b.faces.push_back(f);
    }
    bundles.push_back(b);
  }
  for (const auto& b : bundles) {
    auto [c3, wit] = check_c3(b.faces);
    if (c3) {
      auto g = check_goodness(b.complex);
      ok = ok && g.c1 && g.c2;
    }
  }
  report_line(8, "half tear-drop complex is bad, square chamber is good, and "
                 "C3 implies C1 and C2 on all bundled complexes",
              ok);
}

// --------------------------------------------------------------------------
// 9. Property suite.
// --------------------------------------------------------------------------
void criterion9() {
  bool ok = true;
  std::string detail;

  // (a) analytic vs finite-difference A-tensor, 50 configurations per entry
  //     with quotient dimension >= 2, relative tolerance 1e-6
  //     (denominator max(|A_fd|, 1e-2) to keep polar entries meaningful).
  // (b) K >= 1 at every sampled regular plane.
  for (const auto& entry : registry()) {
    auto rep = build(entry.spec);
    const std::uint64_t seed = derive_seed(kSeed, entry.id + "/prop");
    int cohom = cohomogeneity(rep, seed);
    if (cohom - 1 < 2) continue;
    const int max_orbit = rep.ambient_dim - cohom;
    Rng rng(seed);
    int done = 0, guard = 0;
    while (done < 50 && guard++ < 5000) {
      Vec p = rng.unit_vector(rep.ambient_dim);
      if (orbit_dim_at(rep, p) != max_orbit) continue;
      auto iso = isotropy_algebra(rep, p);
      const int hd = static_cast<int>(iso.slice_basis.cols());
      if (hd < 2) break;
      Vec x = (iso.slice_basis * rng.gaussian_vector(hd)).normalized();
      Vec y = iso.slice_basis * rng.gaussian_vector(hd);
      y -= y.dot(x) * x;
      if (y.norm() < 1e-9) continue;
      y.normalize();
      ++done;

      auto sample = oneill_curvature(rep, p, x, y);
      if (sample.curvature < 1.0 - 1e-9) {
        ok = false;
        detail += entry.id + " K=" + std::to_string(sample.curvature) + "; ";
      }
      const double h = 1e-5;
      Mat pv = vertical_projector(rep, p);
      Mat dpx = (vertical_projector(rep, p + h * x) -
                 vertical_projector(rep, p - h * x)) /
                (2 * h);
      Mat dpy = (vertical_projector(rep, p + h * y) -
                 vertical_projector(rep, p - h * y)) /
                (2 * h);
      Vec a_fd = -0.5 * (pv * (dpx * y - dpy * x));
      Vec a_an = -0.5 * (pv * (vertical_projection_derivative(rep, p, x) * y -
                               vertical_projection_derivative(rep, p, y) * x));
      double rel = (a_an - a_fd).norm() / std::max(a_fd.norm(), 1e-2);
      if (rel >= 1e-6) {
        ok = false;
        detail += entry.id + " fd rel " + std::to_string(rel) + "; ";
      }
    }
    if (done < 50 && cohom - 1 >= 2) {
      ok = false;
      detail += entry.id + " produced only " + std::to_string(done) +
                " configurations; ";
    }
  }

  // (c) distance symmetry and vanishing on orbits.
  for (const char* id : {"hopf", "polar-control-torus-split", "T2-row6"}) {
    auto rep = build_entry(id);
    const std::uint64_t seed = derive_seed(kSeed, std::string(id) + "/dist");
    Rng rng(seed);
    Vec p = rng.unit_vector(rep.ambient_dim);
    Vec q = rng.unit_vector(rep.ambient_dim);
    double dpq = orbit_distance(rep, p, q, seed).distance;
    double dqp = orbit_distance(rep, q, p, seed).distance;
    if (std::abs(dpq - dqp) >= 1e-6) {
      ok = false;
      detail += std::string(id) + " asym " + std::to_string(dpq - dqp) + "; ";
    }
    Mat xi = Mat::Zero(rep.ambient_dim, rep.ambient_dim);
    for (int i = 0; i < rep.algebra_dim(); ++i)
      xi += rng.uniform(-1.0, 1.0) * rep.generators[i];
    double dorb = orbit_distance(rep, p, expm(xi) * p, seed).distance;
    if (dorb >= 1e-6) {
      ok = false;
      detail += std::string(id) + " orbit dist " + std::to_string(dorb) + "; ";
    }
  }

  // (d) report determinism: byte-identical reruns.
  Config cfg;
  cfg.samples = 30;
  for (const char* id : {"hopf", "T2-row8"}) {
    if (verify_entry(id, cfg).json_text != verify_entry(id, cfg).json_text) {
      ok = false;
      detail += std::string(id) + " nondeterministic report; ";
    }
  }

  report_line(9, "property suite: A-tensor finite-difference agreement, "
                 "K >= 1, distance symmetry/vanishing, report determinism",
              ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
