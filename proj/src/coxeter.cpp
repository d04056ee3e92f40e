#include "sphereq/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <json.hpp>

#include "sphereq/geometry.hpp"
#include "sphereq/isotropy.hpp"
#include "sphereq/linalg.hpp"
#include "sphereq/rng.hpp"

namespace sphereq {

using nlohmann::json;

std::string to_string(Goodness g) {
  switch (g) {
    case Goodness::good: return "good";
    case Goodness::bad: return "bad";
    case Goodness::unknown: return "unknown";
  }
  return "?";
}

std::string CoxeterComplexData::to_json() const {
  json j;
  j["mirrors"] = mirrors;
  j["corners"] = json::array();
  for (const auto& c : corners) {
    json jc;
    jc["order"] = c.order;
    json names = json::array();
    for (int m : c.mirrors) names.push_back(mirrors.at(m));
    jc["mirrors"] = names;
    j["corners"].push_back(jc);
  }
  j["simply_connected"] = simply_connected;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

CoxeterComplexData CoxeterComplexData::from_json(const std::string& text) {
  json j = json::parse(text);
  CoxeterComplexData data;
  data.mirrors = j.at("mirrors").get<std::vector<std::string>>();
  for (const auto& jc : j.at("corners")) {
    CoxeterCorner c;
    c.order = jc.at("order").get<int>();
    if (c.order < 2) throw InvalidParameter("corner order must be >= 2");
    for (const auto& name : jc.at("mirrors")) {
      auto it = std::find(data.mirrors.begin(), data.mirrors.end(),
                          name.get<std::string>());
      if (it == data.mirrors.end())
        throw InvalidParameter("corner references unknown mirror");
      c.mirrors.push_back(static_cast<int>(it - data.mirrors.begin()));
    }
    data.corners.push_back(c);
  }
  data.simply_connected = j.value("simply_connected", true);
  data.note = j.value("note", "");
  return data;
}

GoodnessVerdict check_goodness(const CoxeterComplexData& data) {
  GoodnessVerdict v;
  for (size_t i = 0; i < data.corners.size(); ++i) {
    const auto& c = data.corners[i];
    if (c.mirrors.size() != 2 || c.mirrors[0] == c.mirrors[1]) {
      v.c1 = false;
      v.failing.push_back("corner " + std::to_string(i) +
                          " is not contained in two different mirrors");
    }
  }
  // Corners grouped by unordered pair of distinct mirrors.
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (size_t i = 0; i < data.corners.size(); ++i) {
    const auto& c = data.corners[i];
    if (c.mirrors.size() != 2 || c.mirrors[0] == c.mirrors[1]) continue;
    int a = std::min(c.mirrors[0], c.mirrors[1]);
    int b = std::max(c.mirrors[0], c.mirrors[1]);
    by_pair[{a, b}].push_back(static_cast<int>(i));
  }
  for (const auto& [pair, ids] : by_pair) {
    for (size_t x = 0; x + 1 < ids.size(); ++x)
      for (size_t y = x + 1; y < ids.size(); ++y)
        if (data.corners[ids[x]].order != data.corners[ids[y]].order) {
          v.c2 = false;
          v.failing.push_back(
              "mirrors (" + data.mirrors[pair.first] + ", " +
              data.mirrors[pair.second] + ") share corners of orders " +
              std::to_string(data.corners[ids[x]].order) + " and " +
              std::to_string(data.corners[ids[y]].order));
        }
  }
  if (!data.simply_connected)
    v.verdict = Goodness::unknown;
  else
    v.verdict = (v.c1 && v.c2) ? Goodness::good : Goodness::bad;
  return v;
}

std::pair<bool, std::vector<std::string>> check_c3(
    const std::vector<FaceCompletion>& faces) {
  bool ok = true;
  std::vector<std::string> witnesses;
  for (const auto& f : faces) {
    for (const auto& [i, j, meets] : f.intersections) {
      if (!meets) {
        ok = false;
        witnesses.push_back("face " + f.mirror + ": strata " +
                            f.boundary_strata.at(i) + " and " +
                            f.boundary_strata.at(j) + " do not intersect");
      }
    }
  }
  return {ok, witnesses};
}

CoxeterPresentation coxeter_presentation(const CoxeterComplexData& data) {
  GoodnessVerdict v = check_goodness(data);
  if (!v.c1 || !v.c2)
    throw PreconditionViolation(
        "presentation requires C1 and C2; the word group is not the orbifold "
        "group otherwise");
  CoxeterPresentation p;
  for (const auto& m : data.mirrors) p.generators.push_back("s_" + m);
  for (const auto& m : data.mirrors) p.relations.push_back("s_" + m + "^2");
  for (const auto& c : data.corners)
    p.relations.push_back("(s_" + data.mirrors[c.mirrors[0]] + " s_" +
                          data.mirrors[c.mirrors[1]] + ")^" +
                          std::to_string(c.order));
  std::string gens;
  for (size_t i = 0; i < p.generators.size(); ++i)
    gens += (i ? ", " : "") + p.generators[i];
  std::string rels;
  for (size_t i = 0; i < p.relations.size(); ++i)
    rels += (i ? ", " : "") + p.relations[i];
  p.text = "< " + gens + " | " + rels + " >";
  return p;
}

// ---------------------------------------------------------------------------
// complex_from_action
// ---------------------------------------------------------------------------

namespace {

struct CornerNode {
  Vec point;
  StratumWitness witness;
  IsotropyData iso;
  std::vector<Vec> rays;       // slice-coordinate unit directions
  std::vector<int> germ_ids;   // germ id per ray
  int order = 2;
};

struct UnionFind {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Quotient distance between slice directions under the slice representation.
double slice_dist(const LieGroupRep& slice, const Vec& u, const Vec& v,
                  std::uint64_t seed) {
  if (slice.algebra_dim() == 0)
    return std::acos(std::min(1.0, std::max(-1.0, u.dot(v))));
  return orbit_distance(slice, u, v, seed, 6).distance;
}

}  // namespace

CoxeterComplexData complex_from_action(const LieGroupRep& rep,
                                       std::uint64_t seed, double tol_rank) {
  const int cohom = cohomogeneity(rep, seed, 16, tol_rank);
  if (cohom != 3)
    throw InvalidParameter(
        "complex_from_action handles 2-dimensional quotients only");

  const double match_tol = 0.1;
  const double probe_t = 0.05;

  auto witness_of = [&](const Vec& p) {
    return stratum_codim(rep, p, cohom, tol_rank);
  };

  // Corner nodes: codimension-2 witnesses, distinct as strata (a codim-2
  // stratum of a 2-dimensional quotient is a point, so distance separates).
  std::vector<CornerNode> corners;
  auto register_corner = [&](const Vec& p, const StratumWitness& w) -> int {
    for (size_t i = 0; i < corners.size(); ++i) {
      if (!corners[i].witness.same_signature(w)) continue;
      if (orbit_distance(rep, corners[i].point, p, seed, 8).distance <
          match_tol)
        return static_cast<int>(i);
    }
    CornerNode node;
    node.point = p;
    node.witness = w;
    node.iso = isotropy_algebra(rep, p, tol_rank);
    corners.push_back(std::move(node));
    return static_cast<int>(corners.size()) - 1;
  };

  std::vector<StratumWitness> codim1_signatures;
  for (const Vec& p : singular_candidates(rep, seed, 64, tol_rank)) {
    StratumWitness w = witness_of(p);
    if (w.codim == 2) register_corner(p, w);
    if (w.codim == 1) {
      bool seen = false;
      for (const auto& s : codim1_signatures) seen = seen || s.same_signature(w);
      if (!seen) codim1_signatures.push_back(w);
    }
  }

  UnionFind uf;
  // signature of the mirror each germ runs in, for matching standalone ones
  std::vector<StratumWitness> germ_mirror_sig;

  // Discover boundary rays of a corner: singular directions of the slice
  // representation whose outgoing geodesic lies in a codimension-1 stratum.
  auto find_rays = [&](CornerNode& node) {
    const LieGroupRep& slice = node.iso.slice_rep;
    if (slice.algebra_dim() == 0) return;
    for (const Vec& u : singular_candidates(slice, derive_seed(seed, "ray"),
                                            24, tol_rank)) {
      Vec ambient_u = node.iso.slice_basis * u;
      Vec probe = std::cos(probe_t) * node.point + std::sin(probe_t) * ambient_u;
      StratumWitness w = witness_of(probe);
      if (w.codim != 1) continue;
      bool dup = false;
      for (const Vec& r : node.rays)
        dup = dup || slice_dist(slice, r, u, seed) < match_tol;
      if (dup) continue;
      node.rays.push_back(u);
      node.germ_ids.push_back(uf.add());
      germ_mirror_sig.push_back(w);
    }
  };

  for (auto& node : corners) find_rays(node);

  // Trace each germ along its great circle until the next corner and glue it
  // to the arrival germ.
  size_t processed_corners = 0;
  std::vector<std::pair<int, int>> pending;  // (corner, ray) still to trace
  for (size_t c = 0; c < corners.size(); ++c)
    for (size_t r = 0; r < corners[c].rays.size(); ++r)
      pending.push_back({static_cast<int>(c), static_cast<int>(r)});
  (void)processed_corners;

  size_t guard = 0;
  while (!pending.empty() && guard++ < 64) {
    auto [ci, ri] = pending.back();
    pending.pop_back();
    CornerNode& node = corners[ci];
    Vec u_amb = node.iso.slice_basis * node.rays[ri];
    auto gamma = [&](double t) -> Vec {
      return std::cos(t) * node.point + std::sin(t) * u_amb;
    };

    // Corners are isolated points on the traced circle where the isotropy
    // jumps above the mirror's. Locate the first one as a zero of the
    // (k+1)-th smallest singular value of the evaluation matrix, where k is
    // the mirror's isotropy dimension.
    const int mirror_iso = witness_of(gamma(probe_t)).iso_dim;
    const int d = rep.algebra_dim();
    auto objective = [&](double t) -> double {
      Eigen::JacobiSVD<Mat> svd(evaluation_matrix(rep, gamma(t)));
      int idx = d - 1 - mirror_iso;
      return idx >= 0 ? svd.singularValues()[idx] : 0.0;
    };

    const int grid = 720;
    const double dt = 2 * M_PI / grid;
    std::vector<double> fvals(grid + 1);
    for (int j = 0; j <= grid; ++j) fvals[j] = objective(probe_t + j * dt);

    double t_hit = -1.0;
    for (int j = 1; j < grid && t_hit < 0; ++j) {
      if (fvals[j] > fvals[j - 1] || fvals[j] > fvals[j + 1]) continue;
      // Local minimum: refine by ternary search down to ~1e-12 in t.
      double lo = probe_t + (j - 1) * dt, hi = probe_t + (j + 1) * dt;
      for (int it = 0; it < 90; ++it) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (objective(m1) < objective(m2))
          hi = m2;
        else
          lo = m1;
      }
      double t_star = 0.5 * (lo + hi);
      if (objective(t_star) > 1e-7) continue;
      if (witness_of(gamma(t_star)).codim < 2) continue;
      t_hit = t_star;
    }
    if (t_hit < 0) continue;  // closed mirror circle without corners

    Vec q = gamma(t_hit);
    StratumWitness wq = witness_of(q);
    size_t n_before = corners.size();
    int cj = register_corner(q, wq);
    CornerNode& target = corners[cj];
    if (corners.size() > n_before) {
      // Newly discovered corner: give it rays and queue their traces.
      find_rays(target);
      for (size_t r = 0; r < target.rays.size(); ++r)
        pending.push_back({cj, static_cast<int>(r)});
    }

    // Transport the arrival direction to the stored representative point.
    Mat g;
    orbit_distance(rep, target.point, q, seed, 8, &g);
    Vec u_q = std::sin(t_hit) * node.point - std::cos(t_hit) * u_amb;
    Vec transported = g * u_q;
    Vec in_slice = target.iso.slice_basis.transpose() * transported;
    if (in_slice.norm() < 0.5) continue;  // arrival direction not horizontal
    in_slice.normalize();

    int best_ray = -1;
    double best_d = match_tol;
    for (size_t r = 0; r < target.rays.size(); ++r) {
      double d = slice_dist(target.iso.slice_rep, target.rays[r], in_slice,
                            seed);
      if (d < best_d) {
        best_d = d;
        best_ray = static_cast<int>(r);
      }
    }
    if (best_ray < 0) {
      target.rays.push_back(in_slice);
      best_ray = static_cast<int>(target.rays.size()) - 1;
      target.germ_ids.push_back(uf.add());
      germ_mirror_sig.push_back(witness_of(gamma(t_hit - probe_t)));
    }
    uf.unite(node.germ_ids[ri], target.germ_ids[best_ray]);
  }

  // Assemble the complex.
  CoxeterComplexData data;
  std::map<int, int> mirror_of_class;
  auto mirror_index = [&](int germ_id) {
    int root = uf.find(germ_id);
    auto it = mirror_of_class.find(root);
    if (it != mirror_of_class.end()) return it->second;
    int idx = static_cast<int>(data.mirrors.size());
    data.mirrors.push_back("m" + std::to_string(idx));
    mirror_of_class[root] = idx;
    return idx;
  };

  for (auto& node : corners) {
    double angle = corner_angle(rep, node.point, seed, tol_rank);
    double n_real = M_PI / angle;
    if (std::abs(n_real - std::lround(n_real)) > 0.05)
      throw AngleNotSubmultiple("corner angle " + std::to_string(angle) +
                                " is not close to a submultiple of pi");
    CoxeterCorner c;
    c.order = std::max<int>(2, static_cast<int>(std::lround(n_real)));
    for (int gid : node.germ_ids) c.mirrors.push_back(mirror_index(gid));
    data.corners.push_back(c);
  }

  // Codimension-1 signatures never reached by a traced germ become
  // standalone mirrors (boundary circles without corners).
  for (const auto& sig : codim1_signatures) {
    bool realized = false;
    for (const auto& gs : germ_mirror_sig)
      realized = realized || gs.same_signature(sig);
    if (!realized)
      data.mirrors.push_back("m" + std::to_string(data.mirrors.size()));
  }

  data.simply_connected = true;
  data.note =
      "simply-connected underlying space assumed: sphere quotient of a "
      "connected-group action without exceptional orbits (witness-based)";
  return data;
}

}  // namespace sphereq
