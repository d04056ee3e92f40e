#include "sphereq/isotropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sphereq/linalg.hpp"
#include "sphereq/rng.hpp"

namespace sphereq {

namespace {

void require_unit(const Vec& p) {
  if (std::abs(p.norm() - 1.0) > 1e-9)
    throw InvalidParameter("point must be a unit vector");
}

}  // namespace

Mat evaluation_matrix(const LieGroupRep& rep, const Vec& p) {
  Mat e(rep.ambient_dim, rep.algebra_dim());
  for (int i = 0; i < rep.algebra_dim(); ++i) e.col(i) = rep.generators[i] * p;
  return e;
}

int orbit_dim_at(const LieGroupRep& rep, const Vec& p, double tol_rank) {
  return numerical_rank(evaluation_matrix(rep, p), tol_rank);
}

IsotropyData isotropy_algebra(const LieGroupRep& rep, const Vec& p,
                              double tol_rank) {
  require_unit(p);
  const int n = rep.ambient_dim;
  const int d = rep.algebra_dim();
  IsotropyData data;
  data.point = p;

  Mat e = evaluation_matrix(rep, p);
  Mat coeff_kernel = kernel(e, tol_rank);  // d x k coefficient vectors
  std::vector<Mat> iso_raw;
  for (int c = 0; c < coeff_kernel.cols(); ++c) {
    Mat xi = Mat::Zero(n, n);
    for (int i = 0; i < d; ++i) xi += coeff_kernel(i, c) * rep.generators[i];
    iso_raw.push_back(xi);
  }
  data.isotropy_basis = orthonormalize_span(iso_raw, n, n, 1e-10);
  data.iso_dim = static_cast<int>(data.isotropy_basis.size());

  // [E | p] spans Rp + V_p; A_i p is orthogonal to p automatically.
  Mat ep(n, d + 1);
  ep.leftCols(d) = e;
  ep.col(d) = p;
  data.orbit_basis = column_space(e, tol_rank);
  data.orbit_dim = static_cast<int>(data.orbit_basis.cols());
  data.slice_basis = orthogonal_complement(ep, tol_rank);

  LieGroupRep slice;
  slice.ambient_dim = static_cast<int>(data.slice_basis.cols());
  for (const Mat& xi : data.isotropy_basis) {
    Mat restricted = data.slice_basis.transpose() * xi * data.slice_basis;
    // Elements acting trivially on the slice restrict to pure roundoff; keep
    // only the honest part so the slice is a faithful representation.
    if (restricted.norm() > 1e-9) slice.generators.push_back(restricted);
  }
  data.slice_rep = std::move(slice);
  return data;
}

int cohomogeneity(const LieGroupRep& rep, std::uint64_t seed, int samples,
                  double tol_rank) {
  Rng rng(derive_seed(seed, "cohomogeneity"));
  int max_orbit = 0;
  for (int s = 0; s < samples; ++s) {
    Vec p = rng.unit_vector(rep.ambient_dim);
    max_orbit = std::max(max_orbit, orbit_dim_at(rep, p, tol_rank));
  }
  return rep.ambient_dim - max_orbit;
}

std::vector<Mat> principal_isotropy(const LieGroupRep& rep, std::uint64_t seed,
                                    int samples, double tol_rank) {
  Rng rng(derive_seed(seed, "principal"));
  Vec best;
  int max_orbit = -1;
  for (int s = 0; s < samples; ++s) {
    Vec p = rng.unit_vector(rep.ambient_dim);
    int r = orbit_dim_at(rep, p, tol_rank);
    if (r > max_orbit) {
      max_orbit = r;
      best = p;
    }
  }
  return isotropy_algebra(rep, best, tol_rank).isotropy_basis;
}

LieGroupRep slice_representation(const LieGroupRep& rep, const Vec& p,
                                 double tol_rank) {
  return isotropy_algebra(rep, p, tol_rank).slice_rep;
}

namespace {

// Rationalizes a set of positive frequencies as integer multiples of a common
// unit. Returns the integer multipliers, or empty when no small denominator
// fits.
std::vector<long> integerize(const std::vector<double>& freqs) {
  if (freqs.empty()) return {};
  double fmin = *std::min_element(freqs.begin(), freqs.end());
  for (int k = 1; k <= 64; ++k) {
    double unit = fmin / k;
    std::vector<long> ints;
    bool ok = true;
    for (double f : freqs) {
      double q = f / unit;
      long n = std::lround(q);
      if (n < 1 || std::abs(q - n) > 1e-6) {
        ok = false;
        break;
      }
      ints.push_back(n);
    }
    if (ok) return ints;
  }
  return {};
}

long gcd_of(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace

int cyclic_isotropy_order(const LieGroupRep& rep, const Vec& p,
                          double tol_rank) {
  if (rep.algebra_dim() != 1) return 1;
  const Mat& a = rep.generators[0];
  Eigen::SelfAdjointEigenSolver<Mat> es(a.transpose() * a);
  const Vec& evals = es.eigenvalues();
  double top = std::sqrt(std::max(evals.maxCoeff(), 0.0));
  if (top < tol_rank) return 1;

  // Cluster eigenvalues of a^T a into distinct frequencies and record the
  // projection weight of p on each frequency's invariant subspace.
  std::vector<double> freqs;
  std::vector<double> weight;
  for (int i = 0; i < evals.size(); ++i) {
    double w = std::sqrt(std::max(evals[i], 0.0));
    double coef = es.eigenvectors().col(i).dot(p);
    bool merged = false;
    for (size_t k = 0; k < freqs.size(); ++k) {
      if (std::abs(freqs[k] - w) < 1e-9 * top) {
        weight[k] += coef * coef;
        merged = true;
        break;
      }
    }
    if (!merged) {
      freqs.push_back(w);
      weight.push_back(coef * coef);
    }
  }
  std::vector<double> all;
  std::vector<bool> active;
  for (size_t k = 0; k < freqs.size(); ++k) {
    if (freqs[k] < tol_rank * top) {
      if (weight[k] > 1e-16) return 1;  // p meets the fixed block: free here
      continue;
    }
    all.push_back(freqs[k]);
    active.push_back(weight[k] > 1e-16);
  }
  auto ints_all = integerize(all);
  if (ints_all.empty()) return 1;
  std::vector<long> ints_active;
  for (size_t k = 0; k < all.size(); ++k)
    if (active[k]) ints_active.push_back(ints_all[k]);
  long g_all = gcd_of(ints_all);
  long g_active = gcd_of(ints_active);
  if (g_all == 0 || g_active == 0) return 1;
  return static_cast<int>(g_active / g_all);
}

StratumWitness stratum_codim(const LieGroupRep& rep, const Vec& p, int cohom,
                             double tol_rank) {
  require_unit(p);
  IsotropyData iso = isotropy_algebra(rep, p, tol_rank);
  StratumWitness w;
  w.point = p;
  w.iso_dim = iso.iso_dim;
  w.orbit_dim = iso.orbit_dim;
  w.order = cyclic_isotropy_order(rep, p, tol_rank);

  const int slice_dim = static_cast<int>(iso.slice_basis.cols());
  Mat stacked(static_cast<int>(iso.slice_rep.generators.size()) * slice_dim,
              slice_dim);
  for (size_t i = 0; i < iso.slice_rep.generators.size(); ++i)
    stacked.middleRows(static_cast<int>(i) * slice_dim, slice_dim) =
        iso.slice_rep.generators[i];
  // The absolute floor matters: at principal points the restrictions are pure
  // roundoff and a relative cutoff would fabricate full rank.
  Mat fixed = iso.slice_rep.generators.empty()
                  ? Mat::Identity(slice_dim, slice_dim)
                  : kernel_abs(stacked, tol_rank, 1e-10);

  if (w.order > 1) {
    // Intersect with the fixed space of the detected cyclic element.
    const Mat& a = rep.generators[0];
    Eigen::SelfAdjointEigenSolver<Mat> es(a.transpose() * a);
    double top = std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
    std::vector<double> freqs;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      double f = std::sqrt(std::max(es.eigenvalues()[i], 0.0));
      if (f > tol_rank * top) freqs.push_back(f);
    }
    std::sort(freqs.begin(), freqs.end());
    freqs.erase(std::unique(freqs.begin(), freqs.end(),
                            [&](double x, double y) {
                              return std::abs(x - y) < 1e-9 * top;
                            }),
                freqs.end());
    auto ints = integerize(freqs);
    if (!ints.empty() && fixed.cols() > 0) {
      long g_all = gcd_of(ints);
      // Global period T = 2pi / (unit * g_all); the cyclic generator at p is
      // the rotation by T / order.
      double unit_times_gall = freqs[0] * g_all / ints[0];
      double t = 2.0 * M_PI / (unit_times_gall * w.order);
      Mat g = expm(t * a);
      Mat gh = iso.slice_basis.transpose() * g * iso.slice_basis;
      Mat m = (gh - Mat::Identity(slice_dim, slice_dim)) * fixed;
      if (m.norm() > 1e-9) fixed = fixed * kernel(m, 1e-6);
    }
  }
  w.fixed_dim = static_cast<int>(fixed.cols());
  w.codim = (cohom - 1) - w.fixed_dim;
  return w;
}

StratumWitness stratum_codim(const LieGroupRep& rep, const Vec& p,
                             std::uint64_t seed, double tol_rank) {
  return stratum_codim(rep, p, cohomogeneity(rep, seed, 16, tol_rank),
                       tol_rank);
}

namespace {

// Sum of the r smallest singular values of the evaluation matrix, with its
// Riemannian gradient on the sphere.
double singular_objective(const LieGroupRep& rep, const Vec& p, int r,
                          Vec* grad) {
  Mat e = evaluation_matrix(rep, p);
  Eigen::JacobiSVD<Mat> svd(e, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const int m = static_cast<int>(s.size());
  double value = 0;
  if (grad) *grad = Vec::Zero(rep.ambient_dim);
  for (int k = m - r; k < m; ++k) {
    if (k < 0) continue;
    value += s[k];
    if (grad) {
      Vec u = svd.matrixU().col(k);
      Vec v = svd.matrixV().col(k);
      Vec g = Vec::Zero(rep.ambient_dim);
      for (int i = 0; i < rep.algebra_dim(); ++i)
        g += v[i] * (rep.generators[i].transpose() * u);
      *grad += g;
    }
  }
  if (grad) *grad -= grad->dot(p) * p;
  return value;
}

Vec descend_to_singular(const LieGroupRep& rep, Vec p, int r) {
  double value = 0;
  Vec grad;
  for (int iter = 0; iter < 200; ++iter) {
    value = singular_objective(rep, p, r, &grad);
    double gn = grad.norm();
    if (gn < 1e-12 || value < 1e-13) break;
    double step = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 30; ++bt) {
      Vec q = (p - step * grad).normalized();
      double v2 = singular_objective(rep, q, r, nullptr);
      if (v2 < value - 0.1 * step * gn * gn) {
        p = q;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return p;
}

// A descent endpoint counts as a stratum witness only if the singular values
// it claims as kernel are tightly zero; otherwise nearby-rank pollution
// produces phantom signatures with garbage slices. Re-descend on the detected
// kernel size and accept when the objective collapses.
bool polish_witness(const LieGroupRep& rep, Vec& p, double tol_rank) {
  Mat e = evaluation_matrix(rep, p);
  Eigen::JacobiSVD<Mat> svd(e);
  const auto& s = svd.singularValues();
  double top = s.size() ? s[0] : 0.0;
  if (top < 1e-12) return true;
  int iso = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] < tol_rank * top) ++iso;
  if (iso == 0) return true;
  double residual = singular_objective(rep, p, iso, nullptr);
  if (residual < 1e-11) return true;
  Vec q = descend_to_singular(rep, p, iso);
  if (singular_objective(rep, q, iso, nullptr) < 1e-11) {
    p = q;
    return true;
  }
  return false;
}

std::vector<Vec> structured_seeds(const LieGroupRep& rep) {
  std::vector<Vec> seeds;
  const int n = rep.ambient_dim;
  for (int i = 0; i < n; ++i) {
    Vec p = Vec::Zero(n);
    p[i] = 1;
    seeds.push_back(p);
  }
  // Mixtures of two coordinate directions from different summands.
  const auto& sr = rep.summand_ranges;
  for (size_t a = 0; a + 1 < sr.size(); ++a)
    for (size_t b = a + 1; b < sr.size(); ++b) {
      int stride_a = std::max(1, sr[a].dim / 2);
      int stride_b = std::max(1, sr[b].dim / 2);
      for (int i = 0; i < sr[a].dim; i += stride_a)
        for (int j = 0; j < sr[b].dim; j += stride_b) {
          Vec p = Vec::Zero(n);
          p[sr[a].offset + i] = M_SQRT1_2;
          p[sr[b].offset + j] = M_SQRT1_2;
          seeds.push_back(p);
        }
    }
  return seeds;
}

}  // namespace

std::vector<Vec> singular_candidates(const LieGroupRep& rep,
                                     std::uint64_t seed, int restarts,
                                     double tol_rank) {
  const int cohom = cohomogeneity(rep, seed, 16, tol_rank);
  Rng rng(derive_seed(seed, "witness"));
  const int max_orbit = rep.ambient_dim - cohom;

  std::vector<Vec> candidates = structured_seeds(rep);
  // Always include one generic point so the principal signature is reported.
  candidates.push_back(rng.unit_vector(rep.ambient_dim));

  const int max_drop = std::min(max_orbit, 8);
  for (int r = 1; r <= max_drop; ++r) {
    int tries = std::max(1, restarts / max_drop);
    for (int t = 0; t < tries; ++t) {
      Vec p0 = rng.unit_vector(rep.ambient_dim);
      candidates.push_back(descend_to_singular(rep, p0, r));
    }
  }

  std::vector<Vec> polished;
  for (Vec& p : candidates)
    if (polish_witness(rep, p, tol_rank)) polished.push_back(p);
  return polished;
}

std::vector<StratumWitness> find_singular_points(const LieGroupRep& rep,
                                                 std::uint64_t seed,
                                                 int restarts,
                                                 double tol_rank) {
  const int cohom = cohomogeneity(rep, seed, 16, tol_rank);
  std::vector<Vec> candidates =
      singular_candidates(rep, seed, restarts, tol_rank);

  std::vector<StratumWitness> witnesses;
  for (const Vec& p : candidates) {
    StratumWitness w = stratum_codim(rep, p, cohom, tol_rank);
    bool dup = false;
    for (const auto& seen : witnesses) dup = dup || seen.same_signature(w);
    if (!dup) witnesses.push_back(w);
  }
  std::sort(witnesses.begin(), witnesses.end(),
            [](const StratumWitness& a, const StratumWitness& b) {
              if (a.codim != b.codim) return a.codim < b.codim;
              if (a.iso_dim != b.iso_dim) return a.iso_dim < b.iso_dim;
              if (a.fixed_dim != b.fixed_dim) return a.fixed_dim < b.fixed_dim;
              return a.order < b.order;
            });
  return witnesses;
}

namespace {

ReductionResult reduce_by_subalgebra(const LieGroupRep& rep,
                                     const std::vector<Mat>& h_basis,
                                     int cohom, double tol_rank) {
  const int n = rep.ambient_dim;
  const int d = rep.algebra_dim();
  ReductionResult out;

  if (h_basis.empty()) {
    out.rep = rep;
    out.fixed_basis = Mat::Identity(n, n);
    out.normalizer_dim = d;
    out.reduced = false;
    return out;
  }

  const int k = static_cast<int>(h_basis.size());
  // W = joint kernel of the h action on R^n.
  Mat stacked(k * n, n);
  for (int j = 0; j < k; ++j) stacked.middleRows(j * n, n) = h_basis[j];
  Mat w_basis = kernel(stacked, tol_rank);
  if (w_basis.cols() < cohom)
    throw DegenerateReduction("fixed subspace smaller than cohomogeneity");

  // Normalizer algebra: coefficients c with [sum c_i A_i, H_j] in span(h).
  Mat constraints(k * n * n, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) {
      Mat br = rep.generators[i] * h_basis[j] - h_basis[j] * rep.generators[i];
      Mat rest = outside_span(br, h_basis);
      constraints.block((j * n) * n, i, n * n, 1) =
          Eigen::Map<Vec>(rest.data(), n * n);
    }
  }
  Mat coeffs = kernel_abs(constraints, tol_rank, 1e-10);
  out.normalizer_dim = static_cast<int>(coeffs.cols());

  std::vector<Mat> restricted;
  for (int c = 0; c < coeffs.cols(); ++c) {
    Mat xi = Mat::Zero(n, n);
    for (int i = 0; i < d; ++i) xi += coeffs(i, c) * rep.generators[i];
    Mat s = w_basis.transpose() * xi * w_basis;
    if (s.norm() > 1e-10) restricted.push_back(s);
  }
  const int w = static_cast<int>(w_basis.cols());
  LieGroupRep reduced;
  reduced.ambient_dim = w;
  reduced.generators = orthonormalize_span(restricted, w, w, 1e-10);
  reduced.validate();

  out.rep = std::move(reduced);
  out.fixed_basis = w_basis;
  out.reduced = true;
  return out;
}

}  // namespace

ReductionResult lrs_reduction(const LieGroupRep& rep, std::uint64_t seed,
                              double tol_rank) {
  auto h = principal_isotropy(rep, seed, 16, tol_rank);
  int cohom = cohomogeneity(rep, seed, 16, tol_rank);
  return reduce_by_subalgebra(rep, h, cohom, tol_rank);
}

ReductionResult strata_reduction(const LieGroupRep& rep, const Vec& p,
                                 double tol_rank) {
  require_unit(p);
  auto iso = isotropy_algebra(rep, p, tol_rank);
  return reduce_by_subalgebra(rep, iso.isotropy_basis, 0, tol_rank);
}

}  // namespace sphereq
