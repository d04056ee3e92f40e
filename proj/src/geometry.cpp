#include "sphereq/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "sphereq/linalg.hpp"
#include "sphereq/rng.hpp"

namespace sphereq {

namespace {

double clamp_cos(double c) { return std::min(1.0, std::max(-1.0, c)); }

}  // namespace

Mat vertical_projector(const LieGroupRep& rep, const Vec& p, double tol_rank) {
  Mat basis = column_space(evaluation_matrix(rep, p), tol_rank);
  return basis * basis.transpose();
}

namespace {

struct SubBasis {
  std::vector<int> indices;  // generator indices with independent A_i p
};

SubBasis select_sub_basis(const LieGroupRep& rep, const Vec& p,
                          double tol_rank) {
  Mat e = evaluation_matrix(rep, p);
  Eigen::ColPivHouseholderQR<Mat> qr(e);
  qr.setThreshold(tol_rank);
  const int r = static_cast<int>(qr.rank());
  SubBasis sb;
  for (int i = 0; i < r; ++i)
    sb.indices.push_back(static_cast<int>(qr.colsPermutation().indices()[i]));
  std::sort(sb.indices.begin(), sb.indices.end());
  return sb;
}

Mat eval_cols(const LieGroupRep& rep, const Vec& q,
              const std::vector<int>& idx) {
  Mat k(rep.ambient_dim, static_cast<int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i) k.col(i) = rep.generators[idx[i]] * q;
  return k;
}

}  // namespace

Mat vertical_projection_derivative(const LieGroupRep& rep, const Vec& p,
                                   const Vec& v, double tol_rank) {
  SubBasis sb = select_sub_basis(rep, p, tol_rank);
  Mat k = eval_cols(rep, p, sb.indices);
  Mat g = k.transpose() * k;
  Eigen::LDLT<Mat> ldlt(g);
  if (ldlt.info() != Eigen::Success ||
      ldlt.vectorD().minCoeff() < tol_rank * ldlt.vectorD().maxCoeff())
    throw RankDropError("evaluation sub-basis degenerates at p");
  Mat ginv = ldlt.solve(Mat::Identity(g.rows(), g.cols()));

  Mat dk = eval_cols(rep, v, sb.indices);
  Mat dg = dk.transpose() * k + k.transpose() * dk;
  // d(K G^{-1} K^T) by the product rule with d(G^{-1}) = -G^{-1} dG G^{-1}.
  return dk * ginv * k.transpose() - k * ginv * dg * ginv * k.transpose() +
         k * ginv * dk.transpose();
}

CurvatureSample oneill_curvature(const LieGroupRep& rep, const Vec& p,
                                 const Vec& x, const Vec& y, double tol_rank) {
  Mat pv = vertical_projector(rep, p, tol_rank);
  auto check_horizontal = [&](const Vec& w) {
    if (std::abs(w.norm() - 1.0) > 1e-9 || std::abs(w.dot(p)) > 1e-9 ||
        (pv * w).norm() > 1e-9)
      throw InvalidParameter("x, y must be orthonormal horizontal at p");
  };
  check_horizontal(x);
  check_horizontal(y);
  if (std::abs(x.dot(y)) > 1e-12)
    throw InvalidParameter("x, y must be orthonormal");

  Mat dpx = vertical_projection_derivative(rep, p, x, tol_rank);
  Mat dpy = vertical_projection_derivative(rep, p, y, tol_rank);
  Vec a = -0.5 * (pv * (dpx * y - dpy * x));

  CurvatureSample s;
  s.point = p;
  s.x = x;
  s.y = y;
  s.a_norm_sq = a.squaredNorm();
  s.curvature = 1.0 + 3.0 * s.a_norm_sq;
  return s;
}

CurvatureStats curvature_statistics(const LieGroupRep& rep, std::uint64_t seed,
                                    int samples, double tol_rank) {
  const int n = rep.ambient_dim;
  const int cohom = cohomogeneity(rep, seed, 16, tol_rank);
  if (cohom - 1 < 2)
    throw InvalidParameter("curvature statistics need quotient dimension >= 2");
  const int max_orbit = n - cohom;

  Rng rng(derive_seed(seed, "curvature"));
  CurvatureStats stats;
  stats.min = std::numeric_limits<double>::infinity();
  stats.max = -std::numeric_limits<double>::infinity();
  double sum = 0.0, sum_sq = 0.0;

  int produced = 0;
  int guard = 0;
  while (produced < samples && guard < 50 * samples) {
    ++guard;
    Vec p = rng.unit_vector(n);
    if (orbit_dim_at(rep, p, tol_rank) != max_orbit) continue;
    IsotropyData iso = isotropy_algebra(rep, p, tol_rank);
    const int h = static_cast<int>(iso.slice_basis.cols());
    if (h < 2) continue;
    Vec cx = rng.gaussian_vector(h);
    Vec x = iso.slice_basis * cx;
    if (x.norm() < 1e-12) continue;
    x.normalize();
    Vec cy = rng.gaussian_vector(h);
    Vec y = iso.slice_basis * cy;
    y -= y.dot(x) * x;
    if (y.norm() < 1e-9) continue;
    y.normalize();
    CurvatureSample s = oneill_curvature(rep, p, x, y, tol_rank);
    stats.min = std::min(stats.min, s.curvature);
    stats.max = std::max(stats.max, s.curvature);
    sum += s.curvature;
    sum_sq += s.curvature * s.curvature;
    ++produced;
  }
  if (produced == 0) throw RankDropError("no regular samples produced");
  stats.samples = produced;
  stats.mean = sum / produced;
  stats.stddev = std::sqrt(std::max(0.0, sum_sq / produced - stats.mean * stats.mean));
  return stats;
}

DistanceResult orbit_distance(const LieGroupRep& rep, const Vec& p,
                              const Vec& q, std::uint64_t seed, int restarts,
                              Mat* best_element) {
  const int n = rep.ambient_dim;
  auto basis = orthonormalize_span(rep.generators, n, n, 1e-12);
  const int d = static_cast<int>(basis.size());
  Rng rng(derive_seed(seed, "distance"));

  double best = clamp_cos(p.dot(q));
  Mat best_g = Mat::Identity(n, n);
  int total_iter = 0;

  for (int start = 0; start < restarts; ++start) {
    Mat g = Mat::Identity(n, n);
    if (start > 0) {
      Mat xi = Mat::Zero(n, n);
      for (int i = 0; i < d; ++i) xi += rng.uniform(-M_PI, M_PI) * basis[i];
      g = expm(xi);
    }
    double c = p.dot(g * q);
    for (int iter = 0; iter < 300; ++iter) {
      ++total_iter;
      Vec gq = g * q;
      Vec grad(d);
      for (int i = 0; i < d; ++i) grad[i] = p.dot(basis[i] * gq);
      double gn = grad.norm();
      if (gn < 1e-10) break;
      Mat dir = Mat::Zero(n, n);
      for (int i = 0; i < d; ++i) dir += (grad[i] / gn) * basis[i];
      double step = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        Mat g2 = expm(step * dir) * g;
        double c2 = p.dot(g2 * q);
        if (c2 > c + 0.3 * step * gn) {
          g = g2;
          c = c2;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    if (c > best) {
      best = c;
      best_g = g;
    }
    if (best > 1.0 - 1e-15) break;
  }

  if (best_element) *best_element = best_g;
  DistanceResult out;
  out.distance = std::acos(clamp_cos(best));
  out.restarts = restarts;
  out.iterations = total_iter;
  return out;
}

std::pair<double, double> killing_component_norms(const LieGroupRep& rep,
                                                  const Mat& xi, const Vec& p,
                                                  double tol_rank) {
  if ((xi + xi.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidParameter("xi must be skew-symmetric");
  if (std::abs(p.norm() - 1.0) > 1e-9)
    throw InvalidParameter("p must be a unit vector");
  Vec v = xi * p;
  Vec vert = vertical_projector(rep, p, tol_rank) * v;
  Vec hor = v - v.dot(p) * p - vert;
  return {vert.norm(), hor.norm()};
}

std::vector<GeodesicSegment> trace_quotient_geodesic(
    const LieGroupRep& rep, const Vec& p, const Vec& v, int step_count,
    double step_size, std::uint64_t seed, double tol_rank) {
  if (std::abs(v.norm() - 1.0) > 1e-9 || std::abs(v.dot(p)) > 1e-9 ||
      (vertical_projector(rep, p, tol_rank) * v).norm() > 1e-9)
    throw InvalidParameter("v must be a horizontal unit vector at p");
  const int cohom = cohomogeneity(rep, seed, 16, tol_rank);

  auto point_at = [&](double t) -> Vec {
    return std::cos(t) * p + std::sin(t) * v;
  };
  auto witness_at = [&](double t) {
    return stratum_codim(rep, point_at(t), cohom, tol_rank);
  };

  std::vector<GeodesicSegment> segments;
  double t0 = 0.0;
  StratumWitness current = witness_at(0.0);
  for (int k = 1; k <= step_count; ++k) {
    double t = k * step_size;
    StratumWitness w = witness_at(t);
    if (!w.same_signature(current)) {
      // Bisect the change point to 1e-9 in the parameter.
      double lo = t - step_size, hi = t;
      while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        if (witness_at(mid).same_signature(current))
          lo = mid;
        else
          hi = mid;
      }
      GeodesicSegment seg;
      seg.t_begin = t0;
      seg.t_end = 0.5 * (lo + hi);
      seg.signature = current;
      segments.push_back(seg);
      t0 = seg.t_end;
      current = w;
    }
  }
  GeodesicSegment last;
  last.t_begin = t0;
  last.t_end = step_count * step_size;
  last.signature = current;
  segments.push_back(last);
  return segments;
}

namespace {

// Minimal quotient distance between two unit slice directions under the slice
// algebra and, when present, the finite cyclic element restricted to the slice.
double slice_direction_distance(const LieGroupRep& slice,
                                const std::vector<Mat>& cyclic_powers,
                                const Vec& u, const Vec& v, std::uint64_t seed,
                                int restarts) {
  double best = M_PI;
  auto try_target = [&](const Vec& w) {
    if (slice.algebra_dim() == 0) {
      best = std::min(best, std::acos(clamp_cos(u.dot(w))));
    } else {
      DistanceResult d = orbit_distance(slice, u, w, seed, restarts);
      best = std::min(best, d.distance);
    }
  };
  try_target(v);
  for (const Mat& g : cyclic_powers) try_target(g * v);
  return best;
}

}  // namespace

double corner_angle(const LieGroupRep& rep, const Vec& p, std::uint64_t seed,
                    double tol_rank) {
  const int cohom = cohomogeneity(rep, seed, 16, tol_rank);
  if (cohom - 1 < 2) throw NotACorner("quotient dimension below 2");
  StratumWitness w = stratum_codim(rep, p, cohom, tol_rank);
  if (w.codim != 2) throw NotACorner("stratum codimension at p is not 2");

  IsotropyData iso = isotropy_algebra(rep, p, tol_rank);
  const LieGroupRep& slice = iso.slice_rep;
  const int h = static_cast<int>(iso.slice_basis.cols());

  // Powers of the finite cyclic element restricted to the slice basis.
  std::vector<Mat> cyclic_powers;
  if (w.order > 1 && rep.algebra_dim() == 1) {
    const Mat& a = rep.generators[0];
    Eigen::SelfAdjointEigenSolver<Mat> es(a.transpose() * a);
    double top = std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
    std::vector<double> freqs;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
     double f = std::sqrt(std::max(es.eigenvalues()[i], 0.0));
      if (f > tol_rank * top) freqs.push_back(f);
    }
    std::sort(freqs.begin(), freqs.end());
    // Full period from the smallest frequency unit (weights are integers).
    double t_gen = 2.0 * M_PI / (freqs[0] * w.order);
    for (int k = 1; k < 8 * w.order; ++k) {
      Mat g = expm((k * t_gen) * a);
      cyclic_powers.push_back(iso.slice_basis.transpose() * g *
                              iso.slice_basis);
    }
  }

  // Direction samples. The diameter of the slice quotient is attained along
  // invariant subspaces, so sample those exactly: eigenplanes of generic
  // algebra combinations split H_p into the weight lines, and for
  // 2-dimensional slices a uniform fan of directions covers the submultiple
  // angles pi/k exactly.
  std::vector<Vec> dirs;
  Rng rng(derive_seed(seed, "corner"));
  if (slice.algebra_dim() > 0) {
    for (int trial = 0; trial < 3; ++trial) {
      Mat xi = Mat::Zero(h, h);
      for (const Mat& s : slice.generators) xi += rng.gaussian() * s;
      Eigen::SelfAdjointEigenSolver<Mat> es(xi.transpose() * xi);
      for (int i = 0; i < h; ++i) dirs.push_back(es.eigenvectors().col(i));
    }
  }
  if (h == 2) {
    for (int m = 0; m < 48; ++m) {
      double a = m * M_PI / 24.0;
      Vec e(2);
      e << std::cos(a), std::sin(a);
      dirs.push_back(e);
    }
  }
  for (int i = 0; i < h; ++i) {
    Vec e = Vec::Zero(h);
    e[i] = 1;
    dirs.push_back(e);
  }
  const int want = 48;
  while (static_cast<int>(dirs.size()) < want) dirs.push_back(rng.unit_vector(h));

  double angle = 0.0;
  for (size_t i = 0; i < dirs.size(); ++i)
    for (size_t j = i + 1; j < dirs.size(); ++j)
      angle = std::max(angle,
                       slice_direction_distance(slice, cyclic_powers, dirs[i],
                                                dirs[j], seed, 8));
  return angle;
}

}  // namespace sphereq
