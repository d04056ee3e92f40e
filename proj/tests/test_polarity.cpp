#include <doctest.h>

#include "sphereq/polarity.hpp"
#include "sphereq/registry.hpp"
#include "sphereq/rng.hpp"

using namespace sphereq;

TEST_CASE("section test on controls and table rows") {
  auto v = is_polar(build_entry("polar-control-so3-vec"), 1);
  CHECK(v.verdict == Polarity::polar);
  CHECK(v.residual < 1e-10);

  v = is_polar(build_entry("polar-control-torus-split"), 1);
  CHECK(v.verdict == Polarity::polar);
  CHECK(v.residual < 1e-8);

  v = is_polar(build_entry("T2-row6"), 1);
  CHECK(v.verdict == Polarity::non_polar);
  CHECK(v.residual > 1e-2);

  v = is_polar(build_entry("hopf"), 1);
  CHECK(v.verdict == Polarity::non_polar);
}

TEST_CASE("verdict is invariant under orthogonal conjugation") {
  Rng rng(21);
  for (const char* id : {"polar-control-torus-split", "T2-row6"}) {
    auto rep = build_entry(id);
    const int n = rep.ambient_dim;
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    auto conj = conjugate(rep, q);
    CHECK(is_polar(conj, 1).verdict == is_polar(rep, 1).verdict);
  }
}

TEST_CASE("infinitesimal polarity") {
  // Every constant-curvature-4 row at minimal parameters is infinitesimally
  // polar.
  for (const char* id : {"T2-row2", "T2-row4b", "T2-row6"}) {
    auto r = is_infinitesimally_polar(build_entry(id), 1);
    CHECK(r.verdict == Polarity::polar);
  }

  // The maximal torus of su(3) on C^3 is not: the slice at a coordinate
  // point contains a weight-(1,-1) circle.
  auto bad = is_infinitesimally_polar(build_entry("torus-su3-maximal"), 1);
  CHECK(bad.verdict == Polarity::non_polar);
  REQUIRE(bad.failing_witness.has_value());
  CHECK(bad.failing_witness->iso_dim > 0);

  auto good = is_infinitesimally_polar(build_entry("T3-row12"), 1);
  CHECK(good.verdict == Polarity::polar);
}

TEST_CASE("quotient dimension 1 forces a polar verdict") {
  // cohomogeneity-2 control: the split torus on C^2.
  auto rep = build_entry("polar-control-torus-split");
  REQUIRE(cohomogeneity(rep, 1) == 2);
  CHECK(is_infinitesimally_polar(rep, 1).verdict == Polarity::polar);
}
