#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphereq/common.hpp"

namespace sphereq {

enum class FactorKind { torus, so, su, u, sp, spin7, spin9, g2 };

std::string to_string(FactorKind k);
FactorKind factor_kind_from_string(const std::string& s);

/// One factor of a product group, described by kind and rank/size parameter.
/// The parameter is the torus rank for tori and n for so/su/u/sp; it is
/// ignored for spin7, spin9 and g2.
struct Factor {
  FactorKind kind = FactorKind::so;
  int param = 1;

  int algebra_dim() const;
};

/// Module through which a non-torus factor enters a summand.
///   vector    : R^n (so, g2), C^n (su, u) or H^n (sp), realified
///   spin      : half-spin module of spin7 (R^8) or spin9 (R^16)
///   so_vector : conjugation module; R^9 for spin9, R^5 for sp(2),
///               R^3 for sp(1) and su(2)
enum class BaseModule { vector, spin, so_vector };

std::string to_string(BaseModule m);
BaseModule base_module_from_string(const std::string& s);

struct BaseTerm {
  int factor = 0;
  BaseModule module = BaseModule::vector;
};

/// A torus factor entering a summand through integer weights, one weight per
/// circle coordinate. The circle with weight w rotates the summand's complex
/// structure at speed w.
struct CircleTerm {
  int factor = 0;
  std::vector<int> weights;
};

enum class FieldTag { real, complex, quaternionic };

std::string to_string(FieldTag f);
FieldTag field_tag_from_string(const std::string& s);

/// One irreducible-summand word of the representation plan. The base term is
/// absent exactly for pure circle summands on C. right_quat lists sp(1)
/// factors acting by quaternionic right multiplication on a quaternionic base.
struct Summand {
  FieldTag field = FieldTag::real;
  std::optional<BaseTerm> base;
  std::vector<CircleTerm> circles;
  std::vector<int> right_quat;
};

/// Symbolic descriptor of a product group together with its representation.
struct GroupSpec {
  std::string name;
  std::vector<Factor> factors;
  std::vector<Summand> summands;

  int algebra_dim() const;
  int summand_real_dim(int s) const;
  int ambient_dim() const;

  /// Enforces the structural invariants: every factor acts on at least one
  /// summand, torus weights are integers not all zero per listing, and the
  /// module/field combinations are admissible. Throws on violation.
  void validate() const;

  std::string to_json() const;
  static GroupSpec from_json(const std::string& text);
};

}  // namespace sphereq
