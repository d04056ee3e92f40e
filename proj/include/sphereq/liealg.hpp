#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphereq/common.hpp"
#include "sphereq/groupspec.hpp"

namespace sphereq {

struct FactorRange {
  int begin = 0;
  int count = 0;
};

struct SummandRange {
  int offset = 0;
  int dim = 0;
};

/// An orthogonal representation of a compact Lie algebra, given by an ambient
/// dimension N and an ordered basis of skew-symmetric N x N generators.
/// Values are immutable after construction and safe to share across threads.
struct LieGroupRep {
  int ambient_dim = 0;
  std::vector<Mat> generators;
  std::optional<GroupSpec> spec;
  std::vector<FactorRange> factor_ranges;    // generator ranges per factor
  std::vector<SummandRange> summand_ranges;  // coordinate ranges per summand

  // Invariant structure matrices commuting with every generator, when the
  // module carries one globally: size 1 (complex J) or 3 (quaternionic triple).
  std::vector<Mat> complex_structure;
  std::vector<Mat> quaternionic_structure;

  int algebra_dim() const { return static_cast<int>(generators.size()); }

  /// Checks skew-symmetry (1e-12), linear independence, bracket closure
  /// (residual outside the span < 1e-10) and, when a spec is attached,
  /// the closed-form dimension count. Throws StructureError on failure.
  void validate() const;

  /// Largest Frobenius-norm component of any commutator outside the span.
  double bracket_closure_residual() const;

  std::string to_json() const;
  static LieGroupRep from_json(const std::string& text);
};

/// Builds the representation described by a validated GroupSpec.
LieGroupRep build(const GroupSpec& spec);

/// Standard vector representation of so(n), su(n), u(n) or sp(n).
/// Complex coordinates are realified as (1, i), quaternionic as (1, i, j, k).
LieGroupRep build_classical(FactorKind kind, int n);

/// Half-spin module: n = 7 acts on R^8, n = 9 on R^16. Generators are
/// (1/2) gamma_i gamma_j for real symmetric anticommuting gamma matrices
/// built from the octonion multiplication table.
LieGroupRep build_spin(int n);

/// The 14-dimensional derivation algebra of the octonion cross product on R^7,
/// extracted as the kernel of the derivation constraint system and
/// orthonormalized under the trace inner product.
LieGroupRep build_g2();

/// One circle acting on R^{2m} with integer rotation speeds. Zero weights are
/// rejected; trivial summands must be declared explicitly elsewhere.
LieGroupRep build_circle_weights(const std::vector<int>& weights);

/// Rank-ell torus acting on C^m with one integer weight vector per summand.
LieGroupRep build_torus(int rank, const std::vector<std::vector<int>>& weights);

/// Diagonal action on V + V.
LieGroupRep doubling(const LieGroupRep& rep);

/// Diagonal action on V_a + V_b; both parts must realize the same algebra
/// (matching factor structure and generator count).
LieGroupRep direct_sum(const LieGroupRep& a, const LieGroupRep& b);

/// Tensor product over the indicated field with blockwise Leibniz assembly.
/// field == complex: both parts need an invariant complex structure.
/// field == quaternionic: b must be the scalar module H (sp(1) or a sub-
/// algebra of it acting on R^4); the result is a's module with b acting by
/// quaternionic right multiplication.
LieGroupRep tensor_combine(FieldTag field, const LieGroupRep& a,
                           const LieGroupRep& b);

/// Same representation conjugated by a fixed orthogonal matrix.
LieGroupRep conjugate(const LieGroupRep& rep, const Mat& q);

/// The nine 16 x 16 gamma matrices used for build_spin(9): real symmetric,
/// squaring to +I, pairwise anticommuting. Exposed for tests.
std::vector<Mat> clifford_gammas9();

/// The seven 8 x 8 octonion left multiplications used for build_spin(7):
/// real skew, squaring to -I, pairwise anticommuting (a Cl(0,7) system; a
/// symmetric Cl(7,0) system on R^8 does not exist). Exposed for tests.
std::vector<Mat> clifford_gammas7();

/// Octonion multiplication table as structure constants: mult(a, b) returns
/// (sign, index) with e_a * e_b = sign * e_index under the Fano convention
/// e_i e_{i+1} = e_{i+3} (imaginary indices mod 7).
std::pair<int, int> octonion_mult(int a, int b);

}  // namespace sphereq
