#include "sphereq/groupspec.hpp"

#include <set>

#include <json.hpp>

namespace sphereq {

using nlohmann::json;

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::torus: return "torus";
    case FactorKind::so: return "so";
    case FactorKind::su: return "su";
    case FactorKind::u: return "u";
    case FactorKind::sp: return "sp";
    case FactorKind::spin7: return "spin7";
    case FactorKind::spin9: return "spin9";
    case FactorKind::g2: return "g2";
  }
  return "?";
}

FactorKind factor_kind_from_string(const std::string& s) {
  if (s == "torus") return FactorKind::torus;
  if (s == "so") return FactorKind::so;
  if (s == "su") return FactorKind::su;
  if (s == "u") return FactorKind::u;
  if (s == "sp") return FactorKind::sp;
  if (s == "spin7") return FactorKind::spin7;
  if (s == "spin9") return FactorKind::spin9;
  if (s == "g2") return FactorKind::g2;
  throw InvalidParameter("unknown factor kind: " + s);
}

std::string to_string(BaseModule m) {
  switch (m) {
    case BaseModule::vector: return "vector";
    case BaseModule::spin: return "spin";
    case BaseModule::so_vector: return "so_vector";
  }
  return "?";
}

BaseModule base_module_from_string(const std::string& s) {
  if (s == "vector") return BaseModule::vector;
  if (s == "spin") return BaseModule::spin;
  if (s == "so_vector") return BaseModule::so_vector;
  throw InvalidParameter("unknown module: " + s);
}

std::string to_string(FieldTag f) {
  switch (f) {
    case FieldTag::real: return "real";
    case FieldTag::complex: return "complex";
    case FieldTag::quaternionic: return "quaternionic";
  }
  return "?";
}

FieldTag field_tag_from_string(const std::string& s) {
  if (s == "real") return FieldTag::real;
  if (s == "complex") return FieldTag::complex;
  if (s == "quaternionic") return FieldTag::quaternionic;
  throw InvalidParameter("unknown field tag: " + s);
}

int Factor::algebra_dim() const {
  switch (kind) {
    case FactorKind::torus: return param;
    case FactorKind::so: return param * (param - 1) / 2;
    case FactorKind::su: return param * param - 1;
    case FactorKind::u: return param * param;
    case FactorKind::sp: return param * (2 * param + 1);
    case FactorKind::spin7: return 21;
    case FactorKind::spin9: return 36;
    case FactorKind::g2: return 14;
  }
  return 0;
}

int GroupSpec::algebra_dim() const {
  int d = 0;
  for (const auto& f : factors) d += f.algebra_dim();
  return d;
}

namespace {

int base_real_dim(const Factor& f, BaseModule m) {
  switch (f.kind) {
    case FactorKind::so:
      if (m == BaseModule::vector) return f.param;
      break;
    case FactorKind::su:
    case FactorKind::u:
      if (m == BaseModule::vector) return 2 * f.param;
      if (m == BaseModule::so_vector && f.kind == FactorKind::su && f.param == 2)
        return 3;
      break;
    case FactorKind::sp:
      if (m == BaseModule::vector) return 4 * f.param;
      if (m == BaseModule::so_vector && f.param == 2) return 5;
      if (m == BaseModule::so_vector && f.param == 1) return 3;
      break;
    case FactorKind::spin7:
      if (m == BaseModule::spin) return 8;
      break;
    case FactorKind::spin9:
      if (m == BaseModule::spin) return 16;
      if (m == BaseModule::so_vector) return 9;
      break;
    case FactorKind::g2:
      if (m == BaseModule::vector) return 7;
      break;
    case FactorKind::torus:
      break;
  }
  throw InvalidParameter("factor " + to_string(f.kind) + "(" +
                         std::to_string(f.param) + ") has no module '" +
                         to_string(m) + "'");
}

}  // namespace

int GroupSpec::summand_real_dim(int s) const {
  const Summand& sm = summands.at(s);
  if (!sm.base) return 2;  // pure circle summand on C
  return base_real_dim(factors.at(sm.base->factor), sm.base->module);
}

int GroupSpec::ambient_dim() const {
  int n = 0;
  for (int s = 0; s < static_cast<int>(summands.size()); ++s)
    n += summand_real_dim(s);
  return n;
}

void GroupSpec::validate() const {
  if (factors.empty()) throw InvalidParameter("spec has no factors");
  if (summands.empty()) throw InvalidParameter("spec has no summands");
  for (const auto& f : factors) {
    if (f.kind == FactorKind::torus && f.param < 1)
      throw InvalidParameter("torus rank must be >= 1");
    if ((f.kind == FactorKind::so || f.kind == FactorKind::su ||
         f.kind == FactorKind::u || f.kind == FactorKind::sp) &&
        f.param < 1)
      throw InvalidParameter("classical factor needs n >= 1");
  }
  std::set<int> used;
  for (const auto& sm : summands) {
    if (sm.base) {
      const auto& f = factors.at(sm.base->factor);
      if (f.kind == FactorKind::torus)
        throw InvalidParameter("torus factors enter via circle weights");
      base_real_dim(f, sm.base->module);  // throws if inadmissible
      used.insert(sm.base->factor);
      if (sm.field == FieldTag::quaternionic &&
          !(f.kind == FactorKind::sp && sm.base->module == BaseModule::vector))
        throw StructureError("quaternionic summand needs an sp vector base");
      if (sm.field == FieldTag::complex &&
          !((f.kind == FactorKind::su || f.kind == FactorKind::u) &&
            sm.base->module == BaseModule::vector) &&
          !(f.kind == FactorKind::sp && sm.base->module == BaseModule::vector))
        throw StructureError("complex summand needs a complex structure");
    } else if (sm.field != FieldTag::complex) {
      throw StructureError("pure circle summands live on C");
    }
    for (const auto& c : sm.circles) {
      const auto& f = factors.at(c.factor);
      if (f.kind != FactorKind::torus)
        throw InvalidParameter("circle term must reference a torus factor");
      if (static_cast<int>(c.weights.size()) != f.param)
        throw InvalidParameter("weight vector length must equal torus rank");
      bool all_zero = true;
      for (int w : c.weights) all_zero = all_zero && (w == 0);
      if (all_zero)
        throw InvalidParameter(
            "torus weights are not all zero in a summand listing the torus");
      if (sm.base && sm.field == FieldTag::real)
        throw StructureError("circle weights on a real summand");
      used.insert(c.factor);
    }
    for (int rq : sm.right_quat) {
      const auto& f = factors.at(rq);
      if (!(f.kind == FactorKind::sp && f.param == 1))
        throw InvalidParameter("right quaternion action requires an sp(1)");
      if (!sm.base || sm.base->module != BaseModule::vector ||
          factors.at(sm.base->factor).kind != FactorKind::sp)
        throw StructureError("right quaternion action needs an sp vector base");
      used.insert(rq);
    }
  }
  for (int i = 0; i < static_cast<int>(factors.size()); ++i) {
    if (!used.count(i))
      throw InvalidParameter("factor " + std::to_string(i) +
                             " does not act on any summand");
  }
}

std::string GroupSpec::to_json() const {
  json j;
  j["name"] = name;
  j["factors"] = json::array();
  for (const auto& f : factors)
    j["factors"].push_back({{"kind", to_string(f.kind)}, {"param", f.param}});
  j["summands"] = json::array();
  for (const auto& sm : summands) {
    json js;
    js["field"] = to_string(sm.field);
    if (sm.base)
      js["base"] = {{"factor", sm.base->factor},
                    {"module", to_string(sm.base->module)}};
    if (!sm.circles.empty()) {
      js["circles"] = json::array();
      for (const auto& c : sm.circles)
        js["circles"].push_back({{"factor", c.factor}, {"weights", c.weights}});
    }
    if (!sm.right_quat.empty()) js["right_quat"] = sm.right_quat;
    j["summands"].push_back(js);
  }
  return j.dump();
}

GroupSpec GroupSpec::from_json(const std::string& text) {
  json j = json::parse(text);
  GroupSpec spec;
  spec.name = j.value("name", "");
  for (const auto& jf : j.at("factors")) {
    Factor f;
    f.kind = factor_kind_from_string(jf.at("kind").get<std::string>());
    f.param = jf.value("param", 1);
    spec.factors.push_back(f);
  }
  for (const auto& js : j.at("summands")) {
    Summand sm;
    sm.field = field_tag_from_string(js.at("field").get<std::string>());
    if (js.contains("base")) {
      BaseTerm b;
      b.factor = js["base"].at("factor").get<int>();
      b.module = base_module_from_string(js["base"].at("module").get<std::string>());
      sm.base = b;
    }
    if (js.contains("circles")) {
      for (const auto& jc : js["circles"]) {
        CircleTerm c;
        c.factor = jc.at("factor").get<int>();
        c.weights = jc.at("weights").get<std::vector<int>>();
        sm.circles.push_back(c);
      }
    }
    if (js.contains("right_quat"))
      sm.right_quat = js["right_quat"].get<std::vector<int>>();
    spec.summands.push_back(sm);
  }
  spec.validate();
  return spec;
}

}  // namespace sphereq
