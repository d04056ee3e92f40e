#pragma once

#include <string>
#include <vector>

#include "sphereq/common.hpp"
#include "sphereq/liealg.hpp"

namespace sphereq {

/// One codimension-2 stratum: its local dihedral order n >= 2 (half the local
/// isotropy order) and the mirrors whose closures contain it. A well-formed
/// corner lists exactly two mirror slots; builders may emit degenerate slot
/// lists (fewer slots, or one mirror twice), which fail condition C1.
struct CoxeterCorner {
  int order = 2;
  std::vector<int> mirrors;  // indices into CoxeterComplexData::mirrors
};

struct CoxeterComplexData {
  std::vector<std::string> mirrors;
  std::vector<CoxeterCorner> corners;
  bool simply_connected = true;
  std::string note;  // assumptions recorded by builders

  std::string to_json() const;
  static CoxeterComplexData from_json(const std::string& text);
};

enum class Goodness { good, bad, unknown };

std::string to_string(Goodness g);

struct GoodnessVerdict {
  bool c1 = true;
  bool c2 = true;
  Goodness verdict = Goodness::unknown;
  std::vector<std::string> failing;  // human-readable witnesses
};

/// C1: every codimension-2 stratum lies in two different mirrors.
/// C2: two mirrors sharing two corners share them with equal orders.
/// good iff C1 and C2 hold and the underlying space is simply connected;
/// unknown whenever the simply-connected flag is false.
GoodnessVerdict check_goodness(const CoxeterComplexData& data);

/// Caller-supplied completion data for condition C3: per mirror, the closures
/// of the codimension-1 strata of the face completion and their pairwise
/// intersection flags.
struct FaceCompletion {
  std::string mirror;
  std::vector<std::string> boundary_strata;
  // (i, j, intersects) over pairs of boundary strata
  std::vector<std::tuple<int, int, bool>> intersections;
};

/// True iff every listed pair intersects, for every face. C3 implies C1 and
/// C2; that implication is asserted where both data forms exist (tests).
std::pair<bool, std::vector<std::string>> check_c3(
    const std::vector<FaceCompletion>& faces);

struct CoxeterPresentation {
  std::vector<std::string> generators;  // involutions s_W per mirror
  std::vector<std::string> relations;   // s_W^2 and (s_W s_W')^{n(S)}
  std::string text;
};

/// Coxeter presentation of the orbifold fundamental group; requires C1 and C2
/// (throws PreconditionViolation otherwise). Relation count equals
/// mirror count + corner count.
CoxeterPresentation coxeter_presentation(const CoxeterComplexData& data);

/// Assembles the Coxeter complex of a 2-dimensional quotient (cohomogeneity 3)
/// from measured strata data: corners are codimension-2 witnesses with order
/// round(pi / corner_angle); mirrors and their incidences are found by tracing
/// quotient geodesics out of each corner along singular slice directions. The
/// simply-connected flag is set true for sphere quotients of connected-group
/// actions without exceptional orbits; this assumption is recorded in note.
CoxeterComplexData complex_from_action(const LieGroupRep& rep,
                                       std::uint64_t seed,
                                       double tol_rank = 1e-8);

}  // namespace sphereq
