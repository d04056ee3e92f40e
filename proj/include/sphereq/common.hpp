#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sphereq {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Thrown when a construction parameter is outside its documented domain.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when requested algebraic structure (complex/quaternionic) is absent.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a computation requires a regular point and the rank degenerates.
class RankDropError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by reductions when the fixed subspace is too small for the quotient.
class DegenerateReduction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by corner_angle when the base point is not a codimension-2 witness.
class NotACorner : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a measured corner angle is not close to a submultiple of pi.
class AngleNotSubmultiple : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a Coxeter presentation is requested for a complex failing C1/C2.
class PreconditionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Run-wide numeric configuration. A single instance is threaded through the
/// analysis pipeline so that a report is reproducible from (input, config).
struct Config {
  std::uint64_t seed = 2025;
  int samples = 0;  // 0 selects the per-operation default sample count
  double tol_rank = 1e-8;    // relative singular-value cutoff
  double tol_polar = 1e-6;   // polarity residual threshold
  int restarts = 32;         // multi-start count for distance optimization

  int polar_samples() const { return samples > 0 ? samples : 256; }
  int curvature_samples() const { return samples > 0 ? samples : 200; }
};

inline constexpr double kSkewTol = 1e-12;
inline constexpr double kClosureTol = 1e-10;

}  // namespace sphereq
