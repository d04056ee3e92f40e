#pragma once

#include <utility>
#include <vector>

#include "sphereq/common.hpp"
#include "sphereq/isotropy.hpp"
#include "sphereq/liealg.hpp"

namespace sphereq {

/// Orthogonal projector onto the orbit tangent space V_p = span{A_i p}.
Mat vertical_projector(const LieGroupRep& rep, const Vec& p,
                       double tol_rank = 1e-8);

/// Exact directional derivative of the orbit-tangent projector at a regular
/// point p along v, via P_V = K (K^T K)^{-1} K^T for a full-rank sub-basis
/// K(q) = [A_i q] selected by pivoted QR at p. Throws RankDropError when the
/// sub-basis degenerates.
Mat vertical_projection_derivative(const LieGroupRep& rep, const Vec& p,
                                   const Vec& v, double tol_rank = 1e-8);

/// One sectional-curvature sample of the quotient through a regular point:
/// A_x y = -(1/2) P_V (dP_V[x] y - dP_V[y] x) and K = 1 + 3 |A_x y|^2.
struct CurvatureSample {
  Vec point;
  Vec x, y;
  double a_norm_sq = 0.0;
  double curvature = 1.0;
};

CurvatureSample oneill_curvature(const LieGroupRep& rep, const Vec& p,
                                 const Vec& x, const Vec& y,
                                 double tol_rank = 1e-8);

struct CurvatureStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double stddev = 0.0;
  int samples = 0;
};

/// Sectional curvatures at random regular points and random orthonormal
/// horizontal 2-planes. Requires quotient dimension >= 2.
CurvatureStats curvature_statistics(const LieGroupRep& rep, std::uint64_t seed,
                                    int samples = 200, double tol_rank = 1e-8);

struct DistanceResult {
  double distance = 0.0;  // radians in [0, pi]
  int restarts = 0;
  int iterations = 0;
};

/// Upper bound for the quotient distance between the orbits of p and q:
/// multi-start gradient ascent of <p, g q> over the group, with group
/// elements applied through the matrix exponential. Equals the distance when
/// the restarts suffice; the restart count is reported for audit.
/// best_element, when non-null, receives the optimizing group element.
DistanceResult orbit_distance(const LieGroupRep& rep, const Vec& p,
                              const Vec& q, std::uint64_t seed,
                              int restarts = 32, Mat* best_element = nullptr);

/// Lengths of the vertical and horizontal components of the Killing-type
/// field xi at p: v = xi p splits orthogonally into P_V v, <v,p> p and the
/// rest; returns (|P_V v|, |rest|).
std::pair<double, double> killing_component_norms(const LieGroupRep& rep,
                                                  const Mat& xi, const Vec& p,
                                                  double tol_rank = 1e-8);

struct GeodesicSegment {
  double t_begin = 0.0;
  double t_end = 0.0;
  StratumWitness signature;  // witness at a representative interior point
};

/// Stratum signatures along the great circle cos(t) p + sin(t) v, with
/// signature changes bracketed by bisection to 1e-9 in the parameter.
/// v must be a horizontal unit vector at p.
std::vector<GeodesicSegment> trace_quotient_geodesic(
    const LieGroupRep& rep, const Vec& p, const Vec& v, int step_count,
    double step_size, std::uint64_t seed, double tol_rank = 1e-8);

/// Length of the quotient of the slice unit sphere at a codimension-2 corner,
/// measured as the maximal pairwise quotient distance between slice
/// directions (the slice quotient is an arc for corners of 2-dimensional
/// quotients). For single-circle actions the detected finite cyclic isotropy
/// participates in the identification. Throws NotACorner when the stratum
/// codimension at p is not 2 or the quotient dimension is below 2.
double corner_angle(const LieGroupRep& rep, const Vec& p, std::uint64_t seed,
                    double tol_rank = 1e-8);

}  // namespace sphereq
