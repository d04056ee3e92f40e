#include <doctest.h>

#include <cmath>

#include "sphereq/geometry.hpp"
#include "sphereq/linalg.hpp"
#include "sphereq/registry.hpp"
#include "sphereq/rng.hpp"

using namespace sphereq;

namespace {

// Finite-difference oracle for the projector derivative.
Mat dp_fd(const LieGroupRep& rep, const Vec& p, const Vec& v, double h) {
  return (vertical_projector(rep, p + h * v) -
          vertical_projector(rep, p - h * v)) /
         (2 * h);
}

// Horizontal orthonormal pair at a regular point.
std::pair<Vec, Vec> horizontal_pair(const LieGroupRep& rep, const Vec& p,
                                    Rng& rng) {
  auto iso = isotropy_algebra(rep, p);
  const int h = static_cast<int>(iso.slice_basis.cols());
  REQUIRE(h >= 2);
  Vec x = (iso.slice_basis * rng.gaussian_vector(h)).normalized();
  Vec y = iso.slice_basis * rng.gaussian_vector(h);
  y -= y.dot(x) * x;
  y.normalize();
  return {x, y};
}

}  // namespace

TEST_CASE("projector derivative against central finite differences") {
  Rng rng(31);
  for (const char* id : {"hopf", "polar-control-torus-split", "T2-row4b"}) {
    auto rep = build_entry(id);
    for (int s = 0; s < 5; ++s) {
      Vec p = rng.unit_vector(rep.ambient_dim);
      Vec v = rng.unit_vector(rep.ambient_dim);
      v -= v.dot(p) * p;
      v.normalize();
      Mat analytic = vertical_projection_derivative(rep, p, v);
      Mat fd = dp_fd(rep, p, v, 1e-5);
      CHECK((analytic - fd).cwiseAbs().maxCoeff() < 1e-6);
    }
  }

  // v = 0 gives the zero map.
  auto hopf = build_entry("hopf");
  Vec p = rng.unit_vector(4);
  CHECK(vertical_projection_derivative(hopf, p, Vec::Zero(4)).norm() == 0.0);
}

TEST_CASE("curvature of the named quotients") {
  // Hopf: constant curvature 4 at every regular plane.
  auto hopf = build_entry("hopf");
  Rng rng(32);
  for (int s = 0; s < 10; ++s) {
    Vec p = rng.unit_vector(4);
    auto [x, y] = horizontal_pair(hopf, p, rng);
    auto sample = oneill_curvature(hopf, p, x, y);
    CHECK(sample.curvature == doctest::Approx(4.0).epsilon(1e-9));
  }

  // so(3) doubling: the quotient is a constant-curvature-4 hemisphere.
  auto so3d = doubling(build_classical(FactorKind::so, 3));
  auto stats = curvature_statistics(so3d, 1, 60);
  CHECK(stats.min > 4.0 - 1e-6);
  CHECK(stats.max < 4.0 + 1e-6);

  // Polar control: the rank-3 split torus on C^3 has an integrable horizontal
  // distribution, so every sampled plane has curvature 1.
  auto torus3 =
      build_torus(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  REQUIRE(cohomogeneity(torus3, 1) == 3);
  auto pstats = curvature_statistics(torus3, 1, 40);
  CHECK(pstats.min > 1.0 - 1e-8);
  CHECK(pstats.max < 1.0 + 1e-8);

  // Weighted projective line (1,2): non-constant curvature. Dense sampling
  // fixes the spread; analytically K ranges over [7/4, 13].
  auto wcp = build_entry("wcp-1-2");
  auto wstats = curvature_statistics(wcp, 1, 400);
  CHECK(wstats.min == doctest::Approx(1.75).epsilon(0.02));
  CHECK(wstats.max > 8.0);
  CHECK(wstats.max - wstats.min > 0.5);
  CHECK(wstats.min > 1.0 - 1e-9);
}

TEST_CASE("orbit distances on the Hopf action") {
  auto hopf = build_entry("hopf");
  Vec e1 = Vec::Zero(4), e2 = Vec::Zero(4);
  e1[0] = 1;
  e2[2] = 1;
  CHECK(orbit_distance(hopf, e1, e2, 1).distance ==
        doctest::Approx(M_PI / 2).epsilon(1e-9));

  // Grid oracle for the mixed point: minimize the angle over the circle.
  Vec mix = (e1 + e2) / std::sqrt(2.0);
  double oracle = M_PI;
  for (int k = 0; k < 20000; ++k) {
    double t = 2 * M_PI * k / 20000.0;
    Vec moved(4);
    moved << std::cos(t) * mix[0] - std::sin(t) * mix[1],
        std::sin(t) * mix[0] + std::cos(t) * mix[1],
        std::cos(t) * mix[2] - std::sin(t) * mix[3],
        std::sin(t) * mix[2] + std::cos(t) * mix[3];
    oracle = std::min(oracle, std::acos(std::clamp(e1.dot(moved), -1.0, 1.0)));
  }
  CHECK(oracle == doctest::Approx(M_PI / 4).epsilon(1e-6));
  CHECK(orbit_distance(hopf, e1, mix, 1).distance ==
        doctest::Approx(M_PI / 4).epsilon(1e-6));
}

TEST_CASE("orbit distance symmetry and vanishing on orbits") {
  Rng rng(35);
  for (const char* id : {"hopf", "T2-row6"}) {
    auto rep = build_entry(id);
    const int n = rep.ambient_dim;
    Vec p = rng.unit_vector(n);
    Vec q = rng.unit_vector(n);
    double dpq = orbit_distance(rep, p, q, 7).distance;
    double dqp = orbit_distance(rep, q, p, 7).distance;
    CHECK(std::abs(dpq - dqp) < 1e-6);
    CHECK(dpq <= std::acos(std::clamp(p.dot(q), -1.0, 1.0)) + 1e-12);

    Mat xi = Mat::Zero(n, n);
    for (int i = 0; i < rep.algebra_dim(); ++i)
      xi += rng.uniform(-1.0, 1.0) * rep.generators[i];
    Vec moved = expm(xi) * p;
    CHECK(orbit_distance(rep, p, moved, 7).distance < 1e-6);
  }
}

TEST_CASE("Killing component profile along the quaternionic geodesic") {
  auto sp2d = build_entry("T2-row6");
  // gamma(r) = (cos r e_1, sin r e_2) in H^2 + H^2; xi is quaternionic right
  // multiplication by [[0,1],[-1,0]], sending (v1, v2) to (-v2, v1).
  Mat xi = Mat::Zero(16, 16);
  xi.block(0, 8, 8, 8) = -Mat::Identity(8, 8);
  xi.block(8, 0, 8, 8) = Mat::Identity(8, 8);
  auto gamma = [](double r) {
    Vec p = Vec::Zero(16);
    p[0] = std::cos(r);
    p[12] = std::sin(r);
    return p;
  };

  for (double r : {0.1, 0.25, 0.3, 0.6}) {
    auto [vert, hor] = killing_component_norms(sp2d, xi, gamma(r));
    CHECK(vert == doctest::Approx(std::sin(2 * r)).epsilon(1e-9));
    CHECK(hor == doctest::Approx(std::cos(2 * r)).epsilon(1e-9));
  }
  {
    auto [vert, hor] = killing_component_norms(sp2d, xi, gamma(0.0));
    CHECK(vert == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hor == doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    auto [vert, hor] = killing_component_norms(sp2d, xi, gamma(M_PI / 4));
    CHECK(vert == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hor == doctest::Approx(0.0).epsilon(1e-9));
  }

  // Pythagoras over the three-way orthogonal split, exactly.
  Rng rng(36);
  Vec p = rng.unit_vector(16);
  Vec v = xi * p;
  auto [vert, hor] = killing_component_norms(sp2d, xi, p);
  double radial = v.dot(p);
  CHECK(vert * vert + hor * hor + radial * radial ==
        doctest::Approx(v.squaredNorm()).epsilon(1e-12));

  // Distance from the boundary point to the soul point.
  CHECK(orbit_distance(sp2d, gamma(0), gamma(M_PI / 4), 1).distance ==
        doctest::Approx(M_PI / 4).epsilon(1e-3));
}

TEST_CASE("quotient geodesic tracing") {
  auto sp2d = build_entry("T2-row6");
  // gamma of the quaternionic discussion: starts on the boundary stratum,
  // immediately enters the principal stratum.
  Vec p = Vec::Zero(16);
  p[0] = 1;
  Vec v = Vec::Zero(16);
  v[12] = 1;
  auto segs = trace_quotient_geodesic(sp2d, p, v, 40, M_PI / 160, 1);
  REQUIRE(segs.size() >= 2);
  CHECK(segs[0].signature.codim == 1);
  CHECK(segs[0].t_end < 1e-6);
  CHECK(segs[1].signature.codim == 0);

  // Free action: constant principal signature.
  auto hopf = build_entry("hopf");
  Rng rng(38);
  Vec hp = rng.unit_vector(4);
  auto iso = isotropy_algebra(hopf, hp);
  Vec hv = iso.slice_basis.col(0);
  auto hsegs = trace_quotient_geodesic(hopf, hp, hv, 40, M_PI / 80, 1);
  CHECK(hsegs.size() == 1);
  CHECK(hsegs[0].signature.codim == 0);

  // (1,2) circle: geodesic through the corner preimage starts with the
  // order-2 codimension-2 signature and drops to the principal one.
  auto wcp = build_entry("wcp-1-2");
  Vec cp = Vec::Zero(4);
  cp[2] = 1;
  Vec cv = Vec::Zero(4);
  cv[0] = 1;
  auto csegs = trace_quotient_geodesic(wcp, cp, cv, 40, M_PI / 160, 1);
  REQUIRE(csegs.size() >= 2);
  CHECK(csegs[0].signature.codim == 2);
  CHECK(csegs[0].signature.order == 2);
  CHECK(csegs[0].t_end < 1e-6);
  CHECK(csegs[1].signature.codim == 0);
}

TEST_CASE("corner angles") {
  // (1,2) circle at the weight-2 axis: the angle of the order-2 corner.
  auto wcp = build_entry("wcp-1-2");
  Vec c = Vec::Zero(4);
  c[2] = 1;
  CHECK(corner_angle(wcp, c, 1) == doctest::Approx(M_PI / 2).epsilon(1e-3));

  // Free actions have no corners.
  auto hopf = build_entry("hopf");
  Rng rng(39);
  CHECK_THROWS_AS(corner_angle(hopf, rng.unit_vector(4), 1), NotACorner);

  // Half tear-drop at its most singular point.
  auto row12 = build_entry("T3-row12");
  Vec p = Vec::Zero(7);
  p[4] = 1;
  CHECK(corner_angle(row12, p, 1) == doctest::Approx(M_PI / 2).epsilon(1e-3));
}
