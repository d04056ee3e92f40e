// Command-line interface: build representations, analyze specs, verify the
// classification tables, and run the geometric probes.
//
// Exit codes: 0 pass, 1 fail, 2 inconclusive, 3 usage or construction error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphereq/coxeter.hpp"
#include "sphereq/geometry.hpp"
#include "sphereq/polarity.hpp"
#include "sphereq/report.hpp"
#include "sphereq/rng.hpp"

using namespace sphereq;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write " + path);
  out << text;
}

Vec parse_vector(const std::string& csv, int expect_dim) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
  if (expect_dim > 0 && static_cast<int>(vals.size()) != expect_dim)
    throw InvalidParameter("expected a vector of dimension " +
                           std::to_string(expect_dim));
  Vec v(static_cast<int>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
  return v;
}

LieGroupRep rep_from_options(const std::string& registry_id,
                             const std::string& spec_file) {
  if (!registry_id.empty()) return build_entry(registry_id);
  if (!spec_file.empty()) return build(GroupSpec::from_json(slurp(spec_file)));
  throw InvalidParameter("provide --registry <id> or --spec <file.json>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sphereq: numerical verification of sphere-quotient geometry"};
  app.require_subcommand(1);
  // Global flags (--seed, --config, --json, --dump-samples) may follow the
  // subcommand.
  app.fallthrough();

  std::uint64_t seed = 2025;
  bool seed_set = false;
  std::string config_path, json_out, dump_samples;
  app.add_option("--seed", seed, "random seed")->each([&](const std::string&) {
    seed_set = true;
  });
  app.add_option("--config", config_path,
                 "JSON config {seed, samples, tol_rank, tol_polar, restarts}");
  app.add_option("--json", json_out, "write the JSON report to this path");
  app.add_option("--dump-samples", dump_samples,
                 "write curvature samples as CSV to this path");

  std::string registry_id, spec_file, out_path, in_path, p_csv, q_csv, entry_id;

  auto* cmd_build = app.add_subcommand("build", "construct a representation");
  cmd_build->add_option("--registry", registry_id, "registry entry id");
  cmd_build->add_option("--spec", spec_file, "GroupSpec JSON file");
  cmd_build->add_option("--out", out_path, "output path for the JSON rep");

  auto* cmd_analyze = app.add_subcommand("analyze", "run the full pipeline");
  cmd_analyze->add_option("--registry", registry_id, "registry entry id");
  cmd_analyze->add_option("--spec", spec_file, "GroupSpec JSON file");

  auto* cmd_verify = app.add_subcommand("verify-entry",
                                        "verify one registry entry");
  cmd_verify->add_option("id", entry_id, "registry entry id")->required();

  auto* cmd_tables =
      app.add_subcommand("verify-tables", "verify the whole registry");

  auto* cmd_curv = app.add_subcommand("curvature", "sectional curvature stats");
  cmd_curv->add_option("--registry", registry_id, "registry entry id");
  cmd_curv->add_option("--spec", spec_file, "GroupSpec JSON file");

  auto* cmd_dist = app.add_subcommand("distance", "orbit distance");
  cmd_dist->add_option("--registry", registry_id, "registry entry id");
  cmd_dist->add_option("--spec", spec_file, "GroupSpec JSON file");
  cmd_dist->add_option("--p", p_csv, "first point, comma separated")->required();
  cmd_dist->add_option("--q", q_csv, "second point, comma separated")
      ->required();

  auto* cmd_cox = app.add_subcommand("coxeter-check",
                                     "goodness check of a Coxeter complex");
  cmd_cox->add_option("--in", in_path, "CoxeterComplexData JSON file")
      ->required();

  auto* cmd_list = app.add_subcommand("list", "list registry entry ids");

  CLI11_PARSE(app, argc, argv);

  try {
    Config config;
    if (!config_path.empty()) config = config_from_json(slurp(config_path));
    if (seed_set) config.seed = seed;

    if (cmd_build->parsed()) {
      auto rep = rep_from_options(registry_id, spec_file);
      std::string text = rep.to_json();
      if (!out_path.empty())
        spit(out_path, text);
      else
        std::cout << text << "\n";
      return 0;
    }

    if (cmd_analyze->parsed()) {
      GroupSpec spec = !registry_id.empty()
                           ? registry_entry(registry_id).spec
                           : GroupSpec::from_json(slurp(spec_file));
      auto report = analyze(spec, config);
      if (!json_out.empty()) spit(json_out, report.json_text);
      std::cout << report.json_text << "\n";
      return report.status == ReportStatus::pass        ? 0
             : report.status == ReportStatus::inconclusive ? 2
                                                           : 1;
    }

    if (cmd_verify->parsed()) {
      auto report = verify_entry(entry_id, config);
      if (!json_out.empty()) spit(json_out, report.json_text);
      std::cout << report.json_text << "\n";
      return report.status == ReportStatus::pass        ? 0
             : report.status == ReportStatus::inconclusive ? 2
                                                           : 1;
    }

    if (cmd_tables->parsed()) {
      std::string json_text;
      auto status = verify_tables(config, std::cout,
                                  json_out.empty() ? nullptr : &json_text);
      if (!json_out.empty()) spit(json_out, json_text);
      return status == ReportStatus::pass        ? 0
             : status == ReportStatus::inconclusive ? 2
                                                    : 1;
    }

    if (cmd_curv->parsed()) {
      auto rep = rep_from_options(registry_id, spec_file);
      auto stats = curvature_statistics(rep, config.seed,
                                        config.curvature_samples(),
                                        config.tol_rank);
      json j = {{"min", stats.min},
                {"max", stats.max},
                {"mean", stats.mean},
                {"stddev", stats.stddev},
                {"samples", stats.samples}};
      if (!dump_samples.empty()) {
        // Re-sample with the same stream to emit the CSV.
        std::ostringstream csv;
        csv << "index,K,a_norm_sq\n";
        Rng rng(derive_seed(config.seed, "curvature"));
        int cohom = cohomogeneity(rep, config.seed, 16, config.tol_rank);
        int max_orbit = rep.ambient_dim - cohom;
        int produced = 0, guard = 0;
        while (produced < stats.samples && guard++ < 50 * stats.samples) {
          Vec p = rng.unit_vector(rep.ambient_dim);
          if (orbit_dim_at(rep, p, config.tol_rank) != max_orbit) continue;
          auto iso = isotropy_algebra(rep, p, config.tol_rank);
          int hd = static_cast<int>(iso.slice_basis.cols());
          if (hd < 2) continue;
          Vec cx = rng.gaussian_vector(hd);
          Vec x = iso.slice_basis * cx;
          if (x.norm() < 1e-12) continue;
          x.normalize();
          Vec cy = rng.gaussian_vector(hd);
          Vec y = iso.slice_basis * cy;
          y -= y.dot(x) * x;
          if (y.norm() < 1e-9) continue;
          y.normalize();
          auto s = oneill_curvature(rep, p, x, y, config.tol_rank);
          csv << produced << "," << s.curvature << "," << s.a_norm_sq << "\n";
          ++produced;
        }
        spit(dump_samples, csv.str());
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_dist->parsed()) {
      auto rep = rep_from_options(registry_id, spec_file);
      Vec p = parse_vector(p_csv, rep.ambient_dim).normalized();
      Vec q = parse_vector(q_csv, rep.ambient_dim).normalized();
      auto d = orbit_distance(rep, p, q, config.seed, config.restarts);
      json j = {{"distance", d.distance},
                {"restarts", d.restarts},
                {"iterations", d.iterations}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_cox->parsed()) {
      auto data = CoxeterComplexData::from_json(slurp(in_path));
      auto verdict = check_goodness(data);
      json j = {{"c1", verdict.c1},
                {"c2", verdict.c2},
                {"verdict", to_string(verdict.verdict)},
                {"failing", verdict.failing}};
      if (!json_out.empty()) spit(json_out, j.dump(2));
      std::cout << j.dump(2) << "\n";
      return verdict.verdict == Goodness::bad       ? 1
             : verdict.verdict == Goodness::unknown ? 2
                                                    : 0;
    }

    if (cmd_list->parsed()) {
      for (const auto& id : registry_ids()) std::cout << id << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  }
  return 3;
}
