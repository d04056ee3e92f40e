#include <doctest.h>

#include <Eigen/Dense>

#include "sphereq/liealg.hpp"
#include "sphereq/registry.hpp"
#include "sphereq/rng.hpp"

using namespace sphereq;

namespace {

// Test-side oracle: component of m outside span{basis}, via explicit
// Gram-Schmidt on vectorized matrices (independent of the library path).
double span_residual_oracle(const std::vector<Mat>& gens, const Mat& m) {
  const int n = static_cast<int>(m.rows());
  Mat stacked(static_cast<int>(gens.size()), n * n);
  for (size_t i = 0; i < gens.size(); ++i)
    stacked.row(static_cast<int>(i)) =
        Eigen::Map<const Vec>(gens[i].data(), n * n);
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinV);
  Vec v = Eigen::Map<const Vec>(m.data(), n * n);
  Vec rest = v;
  for (int c = 0; c < svd.rank(); ++c) {
    Vec b = svd.matrixV().col(c);
    rest -= b.dot(v) * b;
  }
  return rest.norm();
}

// Test-side oracle: kernel dimension of the evaluation map at p.
int eval_kernel_dim_oracle(const LieGroupRep& rep, const Vec& p) {
  Mat e(rep.ambient_dim, rep.algebra_dim());
  for (int i = 0; i < rep.algebra_dim(); ++i) e.col(i) = rep.generators[i] * p;
  Eigen::JacobiSVD<Mat> svd(e);
  double cut = 1e-8 * svd.singularValues()[0];
  int r = 0;
  while (r < svd.singularValues().size() && svd.singularValues()[r] > cut) ++r;
  return rep.algebra_dim() - r;
}

}  // namespace

TEST_CASE("dimension formulas for the classical families") {
  CHECK(build_classical(FactorKind::so, 4).algebra_dim() == 6);
  CHECK(build_classical(FactorKind::so, 4).ambient_dim == 4);
  CHECK(build_classical(FactorKind::sp, 2).algebra_dim() == 10);
  CHECK(build_classical(FactorKind::sp, 2).ambient_dim == 8);
  CHECK(build_classical(FactorKind::u, 2).algebra_dim() == 4);
  CHECK(build_classical(FactorKind::u, 2).ambient_dim == 4);
  CHECK(build_classical(FactorKind::su, 3).algebra_dim() == 8);
  CHECK_THROWS_AS(build_classical(FactorKind::so, 0), InvalidParameter);
  CHECK_THROWS_AS(build_classical(FactorKind::g2, 3), InvalidParameter);
}

TEST_CASE("u(2) bracket closure against the direct commutator oracle") {
  auto rep = build_classical(FactorKind::u, 2);
  for (const Mat& a : rep.generators)
    for (const Mat& b : rep.generators)
      CHECK(span_residual_oracle(rep.generators, a * b - b * a) < 1e-10);
}

TEST_CASE("gamma matrices satisfy the Clifford relations bit-tight") {
  auto g9 = clifford_gammas9();
  REQUIRE(g9.size() == 9);
  for (size_t i = 0; i < 9; ++i) {
    CHECK((g9[i] - g9[i].transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (size_t j = 0; j < 9; ++j) {
      Mat ac = g9[i] * g9[j] + g9[j] * g9[i];
      if (i == j) ac -= 2.0 * Mat::Identity(16, 16);
      CHECK(ac.cwiseAbs().maxCoeff() <= 1e-14);
    }
  }
  // The 8-dimensional system is of the opposite kind: skew with square -I.
  auto j7 = clifford_gammas7();
  REQUIRE(j7.size() == 7);
  for (size_t i = 0; i < 7; ++i) {
    CHECK((j7[i] + j7[i].transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (size_t j = 0; j < 7; ++j) {
      Mat ac = j7[i] * j7[j] + j7[j] * j7[i];
      if (i == j) ac += 2.0 * Mat::Identity(8, 8);
      CHECK(ac.cwiseAbs().maxCoeff() <= 1e-14);
    }
  }
}

TEST_CASE("spin modules") {
  auto spin7 = build_spin(7);
  CHECK(spin7.ambient_dim == 8);
  CHECK(spin7.algebra_dim() == 21);
  CHECK(spin7.bracket_closure_residual() < 1e-10);

  auto spin9 = build_spin(9);
  CHECK(spin9.ambient_dim == 16);
  CHECK(spin9.algebra_dim() == 36);
  CHECK(spin9.bracket_closure_residual() < 1e-10);

  // Generic isotropy of a unit spinor has dimension 21 (the next spin group
  // down), via the evaluation-kernel oracle.
  Rng rng(11);
  CHECK(eval_kernel_dim_oracle(spin9, rng.unit_vector(16)) == 21);
  // And for the 8-dimensional module the stabilizer has dimension 14.
  CHECK(eval_kernel_dim_oracle(spin7, rng.unit_vector(8)) == 14);

  CHECK_THROWS_AS(build_spin(8), InvalidParameter);
}

TEST_CASE("g2 as the derivation algebra of the octonion cross product") {
  auto g2 = build_g2();
  CHECK(g2.ambient_dim == 7);
  CHECK(g2.algebra_dim() == 14);
  CHECK(g2.bracket_closure_residual() < 1e-10);

  // Derivation-system rank oracle: rebuild the constraint matrix from the
  // multiplication table and count its kernel by singular values.
  auto cross = [&](const Vec& x, const Vec& y) {
    Vec r = Vec::Zero(7);
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) {
        auto [sign, idx] = octonion_mult(a + 1, b + 1);
        if (idx > 0) r[idx - 1] += sign * x[a] * y[b];
      }
    return r;
  };
  std::vector<Mat> so7;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      Mat m = Mat::Zero(7, 7);
      m(i, j) = -1;
      m(j, i) = 1;
      so7.push_back(m);
    }
  Mat constraints(21 * 7, 21);
  int row = 0;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      Vec ea = Vec::Zero(7), eb = Vec::Zero(7);
      ea[a] = 1;
      eb[b] = 1;
      for (size_t k = 0; k < so7.size(); ++k)
        constraints.block(row, static_cast<int>(k), 7, 1) =
            so7[k] * cross(ea, eb) - cross(so7[k] * ea, eb) -
            cross(ea, so7[k] * eb);
      row += 7;
    }
  Eigen::JacobiSVD<Mat> svd(constraints);
  double cut = 1e-8 * svd.singularValues()[0];
  int rank = 0;
  while (rank < svd.singularValues().size() &&
         svd.singularValues()[rank] > cut)
    ++rank;
  CHECK(21 - rank == 14);

  // Isotropy of one unit vector is 8-dimensional (su(3)).
  Rng rng(3);
  CHECK(eval_kernel_dim_oracle(g2, rng.unit_vector(7)) == 8);
}

TEST_CASE("circle and torus constructions") {
  auto hopf = build_circle_weights({1, 1});
  CHECK(hopf.ambient_dim == 4);
  CHECK(hopf.algebra_dim() == 1);
  // Hopf generator: one speed-1 rotation per complex coordinate.
  Mat expected = Mat::Zero(4, 4);
  expected(0, 1) = -1;
  expected(1, 0) = 1;
  expected(2, 3) = -1;
  expected(3, 2) = 1;
  CHECK((hopf.generators[0] - expected).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(build_circle_weights({1, 0}), InvalidParameter);

  auto single = build_circle_weights({3});
  Rng rng(5);
  // Orbit through any unit point is 1-dimensional.
  CHECK(eval_kernel_dim_oracle(single, rng.unit_vector(2)) == 0);

  // Almost-freeness: the evaluation Gram matrix has full rank 1 at every
  // sampled unit point.
  auto wcp = build_circle_weights({1, 2});
  for (int s = 0; s < 32; ++s) {
    Vec p = rng.unit_vector(4);
    CHECK((wcp.generators[0] * p).norm() > 1e-6);
  }
}

TEST_CASE("combine: doubling, quaternionic tensor, direct sum") {
  auto su2 = build_classical(FactorKind::su, 2);
  auto dbl = doubling(su2);
  CHECK(dbl.ambient_dim == 8);
  CHECK(dbl.algebra_dim() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK((dbl.generators[i].topLeftCorner(4, 4) - su2.generators[i]).norm() ==
          0.0);
    CHECK(
        (dbl.generators[i].bottomRightCorner(4, 4) - su2.generators[i]).norm() ==
        0.0);
  }

  auto sp2 = build_classical(FactorKind::sp, 2);
  auto sp1 = build_classical(FactorKind::sp, 1);
  auto tens = tensor_combine(FieldTag::quaternionic, sp2, sp1);
  CHECK(tens.ambient_dim == 8);
  CHECK(tens.algebra_dim() == 13);
  CHECK(tens.bracket_closure_residual() < 1e-10);

  auto spin9_delta = build_spin(9);
  GroupSpec rho9_spec;
  rho9_spec.name = "spin9-vector";
  rho9_spec.factors.push_back({FactorKind::spin9, 9});
  Summand sm;
  sm.field = FieldTag::real;
  sm.base = BaseTerm{0, BaseModule::so_vector};
  rho9_spec.summands.push_back(sm);
  auto rho9 = build(rho9_spec);
  CHECK(rho9.ambient_dim == 9);
  auto sum = direct_sum(spin9_delta, rho9);
  CHECK(sum.ambient_dim == 25);
  CHECK(sum.algebra_dim() == 36);

  // Requesting a complex tensor without an invariant complex structure is a
  // structure error.
  auto so3 = build_classical(FactorKind::so, 3);
  CHECK_THROWS_AS(tensor_combine(FieldTag::complex, so3, sp1), StructureError);
}

TEST_CASE("registry groups: dimension formula and closure") {
  for (const auto& entry : registry()) {
    auto rep = build(entry.spec);
    CHECK(rep.algebra_dim() == entry.spec.algebra_dim());
    CHECK(rep.bracket_closure_residual() < 1e-10);
    for (const Mat& g : rep.generators)
      CHECK((g + g.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("serialization round trip is exact") {
  auto rep = build_entry("T2-row5a");
  auto back = LieGroupRep::from_json(rep.to_json());
  REQUIRE(back.algebra_dim() == rep.algebra_dim());
  CHECK(back.ambient_dim == rep.ambient_dim);
  for (int i = 0; i < rep.algebra_dim(); ++i)
    CHECK((back.generators[i] - rep.generators[i]).cwiseAbs().maxCoeff() ==
          0.0);
}
