#pragma once

#include <vector>

#include "sphereq/common.hpp"
#include "sphereq/liealg.hpp"

namespace sphereq {

/// Isotropy data at a unit point p: orthonormal basis of the isotropy algebra
/// g_p = {xi : xi p = 0} under the trace inner product, orthonormal bases of
/// the orbit tangent V_p = span{A_i p} and of the slice H_p = (Rp + V_p)^perp,
/// and the induced representation of g_p on H_p in the slice basis.
struct IsotropyData {
  Vec point;
  std::vector<Mat> isotropy_basis;
  Mat orbit_basis;  // ambient_dim x orbit_dim
  Mat slice_basis;  // ambient_dim x slice_dim
  LieGroupRep slice_rep;
  int iso_dim = 0;
  int orbit_dim = 0;
};

/// Stratum witness at p. codim is measured inside the quotient:
/// codim = (cohomogeneity - 1) - fixed_dim, where fixed_dim is the dimension
/// of the subspace of H_p fixed by the isotropy algebra and, for actions of a
/// single circle, also by the detected finite cyclic isotropy.
/// order is that finite cyclic order; it is detected only for one-dimensional
/// algebras (from rotation frequencies) and reported as 1 otherwise.
struct StratumWitness {
  Vec point;
  int iso_dim = 0;
  int orbit_dim = 0;
  int fixed_dim = 0;
  int codim = 0;
  int order = 1;

  bool same_signature(const StratumWitness& o) const {
    return iso_dim == o.iso_dim && orbit_dim == o.orbit_dim &&
           fixed_dim == o.fixed_dim && order == o.order;
  }
};

/// N x d matrix [A_1 p | ... | A_d p].
Mat evaluation_matrix(const LieGroupRep& rep, const Vec& p);

int orbit_dim_at(const LieGroupRep& rep, const Vec& p, double tol_rank = 1e-8);

IsotropyData isotropy_algebra(const LieGroupRep& rep, const Vec& p,
                              double tol_rank = 1e-8);

/// dim V minus the maximal orbit dimension over sampled random unit points.
int cohomogeneity(const LieGroupRep& rep, std::uint64_t seed, int samples = 16,
                  double tol_rank = 1e-8);

/// Isotropy algebra at a sampled point of maximal orbit dimension, returned
/// as an orthonormal basis in canonical form.
std::vector<Mat> principal_isotropy(const LieGroupRep& rep, std::uint64_t seed,
                                    int samples = 16, double tol_rank = 1e-8);

/// Restriction of the isotropy algebra to the slice, in the slice basis.
LieGroupRep slice_representation(const LieGroupRep& rep, const Vec& p,
                                 double tol_rank = 1e-8);

/// Finite cyclic isotropy order at p for single-circle actions (algebra
/// dimension one); returns 1 when undetectable or not applicable.
int cyclic_isotropy_order(const LieGroupRep& rep, const Vec& p,
                          double tol_rank = 1e-8);

StratumWitness stratum_codim(const LieGroupRep& rep, const Vec& p,
                             int cohom, double tol_rank = 1e-8);

/// Convenience overload computing the cohomogeneity from the seed.
StratumWitness stratum_codim(const LieGroupRep& rep, const Vec& p,
                             std::uint64_t seed, double tol_rank = 1e-8);

/// Candidate singular points: structured seeds (coordinate vectors,
/// per-summand points, two-summand mixtures) plus the results of multi-start
/// projected descent minimizing the r smallest singular values of the
/// evaluation matrix for r = 1, 2, ...
std::vector<Vec> singular_candidates(const LieGroupRep& rep,
                                     std::uint64_t seed, int restarts = 64,
                                     double tol_rank = 1e-8);

/// Witnesses at the singular candidates, deduplicated by
/// (iso_dim, fixed_dim, orbit_dim, order). The output is a witness list, not
/// an exhaustive stratification.
std::vector<StratumWitness> find_singular_points(const LieGroupRep& rep,
                                                 std::uint64_t seed,
                                                 int restarts = 64,
                                                 double tol_rank = 1e-8);

struct ReductionResult {
  LieGroupRep rep;        // induced action on the fixed subspace
  Mat fixed_basis;        // ambient_dim x w orthonormal basis of W
  int normalizer_dim = 0; // dimension of the normalizer subalgebra
  bool reduced = false;   // false when the seed algebra was trivial
};

/// Luna-Richardson-Straume reduction: the normalizer algebra of the principal
/// isotropy algebra h acting on the fixed subspace W of h, with the directions
/// restricting to zero discarded. Returns the input unchanged when h = 0.
ReductionResult lrs_reduction(const LieGroupRep& rep, std::uint64_t seed,
                              double tol_rank = 1e-8);

/// Same construction seeded with the full isotropy algebra at p.
ReductionResult strata_reduction(const LieGroupRep& rep, const Vec& p,
                                 double tol_rank = 1e-8);

}  // namespace sphereq
