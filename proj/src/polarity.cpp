#include "sphereq/polarity.hpp"

#include <algorithm>

#include "sphereq/linalg.hpp"
#include "sphereq/rng.hpp"

namespace sphereq {

std::string to_string(Polarity p) {
  switch (p) {
    case Polarity::polar: return "polar";
    case Polarity::non_polar: return "non-polar";
    case Polarity::inconclusive: return "inconclusive";
  }
  return "?";
}

PolarityVerdict is_polar(const LieGroupRep& rep, std::uint64_t seed, double tol,
                         int samples, double tol_rank) {
  Rng rng(derive_seed(seed, "polar"));
  const int n = rep.ambient_dim;

  Vec p;
  int max_orbit = -1;
  for (int s = 0; s < 16; ++s) {
    Vec q = rng.unit_vector(n);
    int r = orbit_dim_at(rep, q, tol_rank);
    if (r > max_orbit) {
      max_orbit = r;
      p = q;
    }
  }

  IsotropyData iso = isotropy_algebra(rep, p, tol_rank);
  // Candidate section: the normal space R p + H_p at the principal point.
  const int sdim = 1 + static_cast<int>(iso.slice_basis.cols());
  Mat section(n, sdim);
  section.col(0) = p;
  section.rightCols(sdim - 1) = iso.slice_basis;

  double residual = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec c = rng.gaussian_vector(sdim);
    double nc = c.norm();
    if (nc < 1e-12) continue;
    Vec q = section * (c / nc);
    for (const Mat& a : rep.generators) {
      Vec v = a * q;
      double nv = v.norm();
      if (nv < 1e-10) continue;
      residual = std::max(residual, (section.transpose() * v).norm() / nv);
    }
  }

  PolarityVerdict out;
  out.residual = residual;
  out.test_points = samples;
  if (residual < tol)
    out.verdict = Polarity::polar;
  else if (residual > 10 * tol)
    out.verdict = Polarity::non_polar;
  else
    out.verdict = Polarity::inconclusive;
  return out;
}

InfinitesimalPolarity is_infinitesimally_polar(const LieGroupRep& rep,
                                               std::uint64_t seed, double tol,
                                               int restarts, double tol_rank) {
  InfinitesimalPolarity agg;
  const int cohom = cohomogeneity(rep, seed, 16, tol_rank);
  const int max_depth = std::max(cohom, 1);

  // All slice tests run against honest points of the original sphere: slice
  // witnesses found inside a slice representation are lifted back to ambient
  // points cos(eps) p + sin(eps) u, whose isotropy is recomputed from exact
  // linear algebra. Depth counts lift generations; signatures already tested
  // are skipped.
  const double eps = 0.1;
  struct Item {
    Vec point;
    int depth;
  };
  std::vector<Item> queue;
  for (const Vec& p : singular_candidates(rep, seed, restarts, tol_rank))
    queue.push_back({p, 0});

  std::vector<StratumWitness> tested;
  size_t next = 0;
  while (next < queue.size()) {
    Item item = queue[next++];
    StratumWitness w = stratum_codim(rep, item.point, cohom, tol_rank);
    if (w.iso_dim == 0) continue;
    bool seen = false;
    for (const auto& t : tested) seen = seen || t.same_signature(w);
    if (seen) continue;
    tested.push_back(w);

    IsotropyData iso = isotropy_algebra(rep, item.point, tol_rank);
    const LieGroupRep& slice = iso.slice_rep;
    if (slice.ambient_dim == 0) continue;

    SliceCheck check;
    check.witness = w;
    check.depth = item.depth;
    check.verdict =
        is_polar(slice, derive_seed(seed, "slice"), tol, 256, tol_rank);
    agg.checks.push_back(check);
    if (check.verdict.verdict == Polarity::non_polar) {
      agg.verdict = Polarity::non_polar;
      if (!agg.failing_witness) agg.failing_witness = w;
      return agg;
    }
    if (check.verdict.verdict == Polarity::inconclusive &&
        agg.verdict == Polarity::polar)
      agg.verdict = Polarity::inconclusive;

    if (item.depth >= max_depth || slice.algebra_dim() == 0) continue;
    for (const Vec& u : singular_candidates(
             slice, derive_seed(seed, "lift"), std::max(8, restarts / 2),
             tol_rank)) {
      Vec lifted = std::cos(eps) * item.point +
                   std::sin(eps) * (iso.slice_basis * u);
      queue.push_back({lifted, item.depth + 1});
    }
  }
  return agg;
}

}  // namespace sphereq
