#pragma once

#include <optional>
#include <vector>

#include "sphereq/common.hpp"
#include "sphereq/isotropy.hpp"
#include "sphereq/liealg.hpp"

namespace sphereq {

enum class Polarity { polar, non_polar, inconclusive };

std::string to_string(Polarity p);

/// Result of the numerical section test. residual is the maximal orthogonality
/// defect ||P_Sigma(A_i q)|| / ||A_i q|| over sampled q in the candidate
/// section, a dimensionless number in [0, 1].
struct PolarityVerdict {
  Polarity verdict = Polarity::inconclusive;
  double residual = 0.0;
  int test_points = 0;
};

/// Section test: the candidate section is R p + H_p at a sampled principal
/// point p. polar iff residual < tol, non_polar iff residual > 10 tol,
/// inconclusive in between (retry with another seed or more samples).
PolarityVerdict is_polar(const LieGroupRep& rep, std::uint64_t seed,
                         double tol = 1e-6, int samples = 256,
                         double tol_rank = 1e-8);

struct SliceCheck {
  StratumWitness witness;
  PolarityVerdict verdict;
  int depth = 0;
};

struct InfinitesimalPolarity {
  Polarity verdict = Polarity::polar;
  std::vector<SliceCheck> checks;                // all slice tests performed
  std::optional<StratumWitness> failing_witness; // first non-polar slice
};

/// Witness-based test of infinitesimal polarity: every discovered singular
/// witness must have a polar slice representation, recursively up to depth
/// equal to the cohomogeneity. Witness discovery is not exhaustive, so a
/// polar verdict certifies the sampled strata only.
InfinitesimalPolarity is_infinitesimally_polar(const LieGroupRep& rep,
                                               std::uint64_t seed,
                                               double tol = 1e-6,
                                               int restarts = 32,
                                               double tol_rank = 1e-8);

}  // namespace sphereq
