#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphereq/groupspec.hpp"
#include "sphereq/liealg.hpp"

namespace sphereq {

/// One registry entry: a representation at its minimal admissible parameters
/// together with the expected values transcribed from the classification
/// tables. Expected fields left unset are reported but not scored.
struct RegistryEntry {
  std::string id;           // e.g. "T2-row6", "hopf", "polar-control-so3-vec"
  std::string table_row;    // "1a".."14" for table rows, empty otherwise
  std::string description;  // group and module in table notation
  std::string quotient;     // orbit-space text where the tables state one
  GroupSpec spec;

  std::optional<int> cohom;
  std::optional<bool> polar;
  std::optional<bool> inf_polar;
  std::optional<double> curvature;  // constant sectional curvature
  std::optional<bool> boundary;
  bool table1 = false;  // listed among the constant-curvature-4 quotients
};

/// All entries: the 16 rows of the good-quotient table and 6 rows of the
/// bad-quotient table at minimal parameters, the constant-curvature-4 rows
/// flagged, plus polar controls and named examples.
const std::vector<RegistryEntry>& registry();

const RegistryEntry& registry_entry(const std::string& id);

std::vector<std::string> registry_ids();

LieGroupRep build_entry(const std::string& id);

}  // namespace sphereq
