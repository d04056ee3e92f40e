#include "sphereq/report.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sphereq/coxeter.hpp"
#include "sphereq/geometry.hpp"
#include "sphereq/isotropy.hpp"
#include "sphereq/polarity.hpp"
#include "sphereq/rng.hpp"

namespace sphereq {

using nlohmann::json;

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::fail: return "fail";
    case ReportStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

Config config_from_json(const std::string& text) {
  json j = json::parse(text);
  Config c;
  c.seed = j.value("seed", c.seed);
  c.samples = j.value("samples", c.samples);
  c.tol_rank = j.value("tol_rank", c.tol_rank);
  c.tol_polar = j.value("tol_polar", c.tol_polar);
  c.restarts = j.value("restarts", c.restarts);
  return c;
}

std::string config_to_json(const Config& c) {
  json j;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["tol_rank"] = c.tol_rank;
  j["tol_polar"] = c.tol_polar;
  j["restarts"] = c.restarts;
  return j.dump();
}

namespace {

json witness_json(const StratumWitness& w) {
  json j;
  j["iso_dim"] = w.iso_dim;
  j["orbit_dim"] = w.orbit_dim;
  j["fixed_dim"] = w.fixed_dim;
  j["codim"] = w.codim;
  j["order"] = w.order;
  return j;
}

struct Check {
  std::string field;
  json expected;
  json computed;
  bool pass = true;
};

// Shared pipeline; expected values come from the entry when present. Stage
// failures (e.g. rank misclassification under a degraded tolerance) are
// recorded in the report and fail it; they never escape as exceptions.
AnalysisReport run_pipeline(const std::string& id, const GroupSpec& spec,
                            const RegistryEntry* entry, const Config& config) {
  const std::uint64_t seed = derive_seed(config.seed, id);
  json doc;
  doc["schema"] = 1;
  doc["id"] = id;
  doc["spec"] = json::parse(spec.to_json());
  doc["config"] = json::parse(config_to_json(config));

  std::vector<Check> checks;
  bool inconclusive = false;
  json stage_errors = json::object();
  auto guarded = [&](const char* stage, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& ex) {
      stage_errors[stage] = ex.what();
    }
  };

  LieGroupRep rep = build(spec);
  json computed;
  computed["ambient_dim"] = rep.ambient_dim;
  computed["algebra_dim"] = rep.algebra_dim();
  {
    Check c;
    c.field = "algebra_dim";
    c.expected = spec.algebra_dim();
    c.computed = rep.algebra_dim();
    c.pass = rep.algebra_dim() == spec.algebra_dim();
    checks.push_back(c);
  }
  {
    double resid = rep.bracket_closure_residual();
    computed["bracket_closure_residual"] = resid;
    Check c;
    c.field = "bracket_closure";
    c.expected = "< 1e-10";
    c.computed = resid;
    c.pass = resid < 1e-10;
    checks.push_back(c);
  }

  int cohom = -1;
  guarded("cohomogeneity", [&] {
    cohom = cohomogeneity(rep, seed, 16, config.tol_rank);
    computed["cohomogeneity"] = cohom;
    computed["quotient_dim"] = cohom - 1;
    if (entry && entry->cohom) {
      Check c;
      c.field = "cohomogeneity";
      c.expected = *entry->cohom;
      c.computed = cohom;
      c.pass = cohom == *entry->cohom;
      checks.push_back(c);
    }
  });

  bool principal_nontrivial = false;
  guarded("principal_isotropy", [&] {
    auto h = principal_isotropy(rep, seed, 16, config.tol_rank);
    principal_nontrivial = !h.empty();
    computed["principal_isotropy_dim"] = static_cast<int>(h.size());
  });

  guarded("polar", [&] {
    PolarityVerdict pol = is_polar(rep, seed, config.tol_polar,
                                   config.polar_samples(), config.tol_rank);
    computed["polar"] = {{"verdict", to_string(pol.verdict)},
                         {"residual", pol.residual},
                         {"test_points", pol.test_points}};
    if (pol.verdict == Polarity::inconclusive) inconclusive = true;
    if (entry && entry->polar) {
      Check c;
      c.field = "polar";
      c.expected = *entry->polar;
      c.computed = to_string(pol.verdict);
      c.pass = (pol.verdict == Polarity::polar) == *entry->polar &&
               pol.verdict != Polarity::inconclusive;
      checks.push_back(c);
    }
  });

  guarded("inf_polar", [&] {
    InfinitesimalPolarity ip = is_infinitesimally_polar(
        rep, seed, config.tol_polar, config.restarts, config.tol_rank);
    json jw = json::array();
    for (const auto& chk : ip.checks) {
      json j = witness_json(chk.witness);
      j["depth"] = chk.depth;
      j["slice_verdict"] = to_string(chk.verdict.verdict);
      j["slice_residual"] = chk.verdict.residual;
      jw.push_back(j);
    }
    computed["inf_polar"] = {{"verdict", to_string(ip.verdict)},
                             {"checked_witnesses", jw},
                             {"note", "witness-based verdict"}};
    if (ip.failing_witness)
      computed["inf_polar"]["failing_witness"] =
          witness_json(*ip.failing_witness);
    if (ip.verdict == Polarity::inconclusive) inconclusive = true;
    if (entry && entry->inf_polar) {
      Check c;
      c.field = "inf_polar";
      c.expected = *entry->inf_polar;
      c.computed = to_string(ip.verdict);
      c.pass = (ip.verdict == Polarity::polar) == *entry->inf_polar &&
               ip.verdict != Polarity::inconclusive;
      checks.push_back(c);
    }
  });

  guarded("strata", [&] {
    auto witnesses = find_singular_points(rep, seed, 64, config.tol_rank);
    json jw = json::array();
    for (const auto& w : witnesses) jw.push_back(witness_json(w));
    computed["strata"] = jw;
    // For orbifold quotients of a simply connected sphere under a connected
    // group, the boundary is empty exactly when the action has no singular
    // orbits; singular orbits carry positive-dimensional isotropy, so the
    // witness list decides the flag (exceptional orbits do not contribute).
    bool boundary = principal_nontrivial;
    int codim1_count = 0;
    for (const auto& w : witnesses) {
      if (w.iso_dim > 0) boundary = true;
      if (w.codim == 1) ++codim1_count;
    }
    computed["boundary"] = boundary;
    computed["codim1_signature_count"] = codim1_count;
    if (entry && entry->boundary) {
      Check c;
      c.field = "boundary";
      c.expected = *entry->boundary;
      c.computed = boundary;
      c.pass = boundary == *entry->boundary;
      checks.push_back(c);
    }
  });

  computed["curvature"] = nullptr;
  if (cohom - 1 >= 2) {
    guarded("curvature", [&] {
      CurvatureStats ks = curvature_statistics(
          rep, seed, config.curvature_samples(), config.tol_rank);
      computed["curvature"] = {{"min", ks.min},
                               {"max", ks.max},
                               {"mean", ks.mean},
                               {"stddev", ks.stddev},
                               {"samples", ks.samples}};
      if (entry && entry->curvature) {
        const double k = *entry->curvature;
        const double tol = 1e-6;
        Check c;
        c.field = "curvature";
        c.expected = k;
        c.computed = {{"min", ks.min}, {"max", ks.max}};
        c.pass = std::abs(ks.min - k) < tol && std::abs(ks.max - k) < tol;
        checks.push_back(c);
      }
    });
  }

  guarded("reduction", [&] {
    auto red = lrs_reduction(rep, seed, config.tol_rank);
    int red_cohom = red.reduced
                        ? cohomogeneity(red.rep, seed, 16, config.tol_rank)
                        : cohom;
    computed["reduction"] = {
        {"reduced", red.reduced},
        {"ambient", {rep.ambient_dim, red.rep.ambient_dim}},
        {"algebra", {rep.algebra_dim(), red.rep.algebra_dim()}},
        {"cohomogeneity", {cohom, red_cohom}}};
    Check c;
    c.field = "reduction_preserves_cohomogeneity";
    c.expected = cohom;
    c.computed = red_cohom;
    c.pass = red_cohom == cohom;
    checks.push_back(c);
  });

  if (cohom == 3) {
    guarded("coxeter", [&] {
      CoxeterComplexData data = complex_from_action(rep, seed, config.tol_rank);
      GoodnessVerdict good = check_goodness(data);
      computed["coxeter"] = {{"complex", json::parse(data.to_json())},
                             {"c1", good.c1},
                             {"c2", good.c2},
                             {"verdict", to_string(good.verdict)}};
    });
  }

  doc["computed"] = computed;
  doc["errors"] = stage_errors;

  json jchecks = json::array();
  bool any_fail = !stage_errors.empty();
  for (const auto& c : checks) {
    jchecks.push_back({{"field", c.field},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"pass", c.pass}});
    any_fail = any_fail || !c.pass;
  }
  doc["checks"] = jchecks;

  AnalysisReport report;
  report.id = id;
  report.status = any_fail ? ReportStatus::fail
                  : inconclusive ? ReportStatus::inconclusive
                                 : ReportStatus::pass;
  doc["status"] = to_string(report.status);
  report.json_text = doc.dump(2);
  return report;
}

}  // namespace

AnalysisReport verify_entry(const std::string& id, const Config& config) {
  const RegistryEntry& entry = registry_entry(id);
  return run_pipeline(id, entry.spec, &entry, config);
}

AnalysisReport analyze(const GroupSpec& spec, const Config& config) {
  std::string id = spec.name.empty() ? "adhoc" : spec.name;
  return run_pipeline(id, spec, nullptr, config);
}

ReportStatus verify_tables(const Config& config, std::ostream& out,
                           std::string* json_out) {
  ReportStatus agg = ReportStatus::pass;
  json all = json::array();
  out << std::left << std::setw(26) << "id" << std::setw(8) << "cohom"
      << std::setw(14) << "polar" << std::setw(14) << "inf-polar"
      << std::setw(24) << "curvature[min,max]" << "status\n";
  for (const auto& entry : registry()) {
    AnalysisReport rep = verify_entry(entry.id, config);
    json doc = json::parse(rep.json_text);
    const auto& c = doc["computed"];
    std::ostringstream curv;
    if (!c.contains("curvature") || c["curvature"].is_null())
      curv << "-";
    else
      curv << std::setprecision(7) << c["curvature"]["min"].get<double>()
           << "," << c["curvature"]["max"].get<double>();
    out << std::left << std::setw(26) << entry.id << std::setw(8)
        << (c.contains("cohomogeneity") ? std::to_string(
                                              c["cohomogeneity"].get<int>())
                                        : "?")
        << std::setw(14)
        << (c.contains("polar")
                ? c["polar"]["verdict"].get<std::string>()
                : "?")
        << std::setw(14)
        << (c.contains("inf_polar")
                ? c["inf_polar"]["verdict"].get<std::string>()
                : "?")
        << std::setw(24) << curv.str() << to_string(rep.status) << "\n";
    all.push_back(doc);
    if (rep.status == ReportStatus::fail) agg = ReportStatus::fail;
    if (rep.status == ReportStatus::inconclusive && agg == ReportStatus::pass)
      agg = ReportStatus::inconclusive;
  }
  out << "overall: " << to_string(agg) << "\n";
  if (json_out) {
    json top;
    top["schema"] = 1;
    top["entries"] = all;
    top["overall"] = to_string(agg);
    *json_out = top.dump(2);
  }
  return agg;
}

}  // namespace sphereq
