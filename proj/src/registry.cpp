#include "sphereq/registry.hpp"

#include <map>

namespace sphereq {

namespace {

Summand base_summand(FieldTag field, int factor, BaseModule module) {
  Summand s;
  s.field = field;
  s.base = BaseTerm{factor, module};
  return s;
}

Summand circle_summand(int torus_factor, std::vector<int> weights) {
  Summand s;
  s.field = FieldTag::complex;
  s.circles.push_back({torus_factor, std::move(weights)});
  return s;
}

Summand with_circle(Summand s, int torus_factor, std::vector<int> weights) {
  s.field = FieldTag::complex;
  s.circles.push_back({torus_factor, std::move(weights)});
  return s;
}

Summand with_right_quat(Summand s, int sp1_factor) {
  s.right_quat.push_back(sp1_factor);
  return s;
}

GroupSpec make_spec(std::string name, std::vector<Factor> factors,
                    std::vector<Summand> summands) {
  GroupSpec spec;
  spec.name = std::move(name);
  spec.factors = std::move(factors);
  spec.summands = std::move(summands);
  spec.validate();
  return spec;
}

std::vector<RegistryEntry> make_registry() {
  std::vector<RegistryEntry> reg;
  auto add = [&](RegistryEntry e) { reg.push_back(std::move(e)); };

  const auto q = FieldTag::quaternionic;
  const auto cx = FieldTag::complex;
  const auto re = FieldTag::real;
  const auto vec = BaseModule::vector;
  const auto sov = BaseModule::so_vector;
  const auto spin = BaseModule::spin;

  // ---- Table 2: good orbifold quotients, minimal parameters ----
  {
    RegistryEntry e;
    e.id = "T2-row1a";
    e.table_row = "1a";
    e.description = "SO(2), rho_2 + rho_2";
    e.spec = make_spec("so2-doubling", {{FactorKind::so, 2}},
                       {base_summand(re, 0, vec), base_summand(re, 0, vec)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row1b";
    e.table_row = "1b";
    e.description = "G2, R^7 + R^7";
    e.spec = make_spec("g2-doubling", {{FactorKind::g2, 2}},
                       {base_summand(re, 0, vec), base_summand(re, 0, vec)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row1c";
    e.table_row = "1c";
    e.description = "Spin(7), Delta_7 + Delta_7";
    e.spec = make_spec("spin7-doubling", {{FactorKind::spin7, 7}},
                       {base_summand(re, 0, spin), base_summand(re, 0, spin)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row2";
    e.table_row = "2";
    e.description = "Spin(9), Delta_9 + Delta_9";
    e.quotient = "S^3_{++}(1/2)";
    e.spec = make_spec("spin9-doubling", {{FactorKind::spin9, 9}},
                       {base_summand(re, 0, spin), base_summand(re, 0, spin)});
    e.cohom = 4;
    e.polar = false;
    e.inf_polar = true;
    e.curvature = 4.0;
    e.boundary = true;
    e.table1 = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row3";
    e.table_row = "3";
    e.description = "SU(2), mu_2 + mu_2";
    e.spec = make_spec("su2-doubling", {{FactorKind::su, 2}},
                       {base_summand(cx, 0, vec), base_summand(cx, 0, vec)});
    e.cohom = 5;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row4a";
    e.table_row = "4a";
    e.description = "SU(3), mu_3 + mu_3";
    e.quotient = "S^3_+(1/2)";
    e.spec = make_spec("su3-doubling", {{FactorKind::su, 3}},
                       {base_summand(cx, 0, vec), base_summand(cx, 0, vec)});
    e.cohom = 4;
    e.polar = false;
    e.inf_polar = true;
    e.curvature = 4.0;
    e.boundary = true;
    e.table1 = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row4b";
    e.table_row = "4b";
    e.description = "U(2), mu_1 x mu_2 + mu_1 x mu_2";
    e.quotient = "S^3_+(1/2)";
    e.spec = make_spec("u2-doubling", {{FactorKind::u, 2}},
                       {base_summand(cx, 0, vec), base_summand(cx, 0, vec)});
    e.cohom = 4;
    e.polar = false;
    e.inf_polar = true;
    e.curvature = 4.0;
    e.boundary = true;
    e.table1 = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row5a";
    e.table_row = "5a";
    e.description = "U(1) x SU(2) x U(1), mu_1 x mu_2 + mu_2 x mu_1";
    e.spec = make_spec(
        "u1-su2-u1",
        {{FactorKind::torus, 2}, {FactorKind::su, 2}},
        {with_circle(base_summand(cx, 1, vec), 0, {1, 0}),
         with_circle(base_summand(cx, 1, vec), 0, {0, 1})});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row5b";
    e.table_row = "5b";
    e.description = "U(1) x SU(3), (mu_1)^1 x mu_3 + (mu_1)^2 x mu_3";
    e.spec = make_spec(
        "u1-su3-weights-1-2",
        {{FactorKind::torus, 1}, {FactorKind::su, 3}},
        {with_circle(base_summand(cx, 1, vec), 0, {1}),
         with_circle(base_summand(cx, 1, vec), 0, {2})});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row6";
    e.table_row = "6";
    e.description = "Sp(2), nu_2 + nu_2";
    e.quotient = "S^5_+(1/2)";
    e.spec = make_spec("sp2-doubling", {{FactorKind::sp, 2}},
                       {base_summand(q, 0, vec), base_summand(q, 0, vec)});
    e.cohom = 6;
    e.polar = false;
    e.inf_polar = true;
    e.curvature = 4.0;
    e.boundary = true;
    e.table1 = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row7";
    e.table_row = "7";
    e.description = "Sp(2) x U(1), nu_2 x mu_1 + nu_2 x mu_1";
    e.quotient = "S^4_{++}(1/2)";
    e.spec = make_spec(
        "sp2-u1-doubling", {{FactorKind::sp, 2}, {FactorKind::torus, 1}},
        {with_circle(base_summand(cx, 0, vec), 1, {1}),
         with_circle(base_summand(cx, 0, vec), 1, {1})});
    e.cohom = 5;
    e.polar = false;
    e.inf_polar = true;
    e.curvature = 4.0;
    e.boundary = true;
    e.table1 = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row8";
    e.table_row = "8";
    e.description = "U(1) x Sp(2) x U(1), mu_1 x nu_2 + nu_2 x mu_1";
    e.quotient = "S^3_{+++}(1/2)";
    e.spec = make_spec(
        "u1-sp2-u1", {{FactorKind::torus, 2}, {FactorKind::sp, 2}},
        {with_circle(base_summand(cx, 1, vec), 0, {1, 0}),
         with_circle(base_summand(cx, 1, vec), 0, {0, 1})});
    e.cohom = 4;
    e.polar = false;
    e.inf_polar = true;
    e.curvature = 4.0;
    e.boundary = true;
    e.table1 = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row9a";
    e.table_row = "9a";
    e.description = "Sp(1) x Sp(2) x Sp(1), nu_1 x nu_2 + nu_2 x nu_1";
    e.spec = make_spec(
        "sp1-sp2-sp1",
        {{FactorKind::sp, 1}, {FactorKind::sp, 2}, {FactorKind::sp, 1}},
        {with_right_quat(base_summand(q, 1, vec), 0),
         with_right_quat(base_summand(q, 1, vec), 2)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row9b";
    e.table_row = "9b";
    e.description = "U(1) x Sp(2) x Sp(1), mu_1 x nu_2 + nu_2 x nu_1";
    e.spec = make_spec(
        "u1-sp2-sp1",
        {{FactorKind::torus, 1}, {FactorKind::sp, 2}, {FactorKind::sp, 1}},
        {with_circle(base_summand(cx, 1, vec), 0, {1}),
         with_right_quat(base_summand(q, 1, vec), 2)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row9c";
    e.table_row = "9c";
    e.description = "Sp(2) x Sp(1), nu_2 x nu_1 + nu_2";
    e.spec = make_spec(
        "sp2-sp1-mixed", {{FactorKind::sp, 2}, {FactorKind::sp, 1}},
        {with_right_quat(base_summand(q, 0, vec), 1),
         base_summand(q, 0, vec)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T2-row10";
    e.table_row = "10";
    e.description = "Sp(2) x Sp(1), nu_2 x nu_1 + nu_2 x nu_1";
    e.quotient = "S^3_{++}(1/2)";
    e.spec = make_spec(
        "sp2-sp1-doubling", {{FactorKind::sp, 2}, {FactorKind::sp, 1}},
        {with_right_quat(base_summand(q, 0, vec), 1),
         with_right_quat(base_summand(q, 0, vec), 1)});
    e.cohom = 4;
    e.polar = false;
    e.inf_polar = true;
    e.curvature = 4.0;
    e.boundary = true;
    e.table1 = true;
    add(e);
  }

  // ---- Table 3: bad orbifold quotients ----
  {
    RegistryEntry e;
    e.id = "T3-row11";
    e.table_row = "11";
    e.description = "U(1), (mu_1)^1 + (mu_1)^2";
    e.spec = make_spec("circle-1-2", {{FactorKind::torus, 1}},
                       {circle_summand(0, {1}), circle_summand(0, {2})});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    e.boundary = false;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T3-row12";
    e.table_row = "12";
    e.description = "SU(2) x U(1), mu_2 x mu_1 + rho_3";
    e.quotient = "half tear-drop";
    e.spec = make_spec(
        "su2-u1-halfteardrop", {{FactorKind::su, 2}, {FactorKind::torus, 1}},
        {with_circle(base_summand(cx, 0, vec), 1, {1}),
         base_summand(re, 0, sov)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    e.boundary = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T3-row13a";
    e.table_row = "13a";
    e.description = "Sp(2) x Sp(1), nu_2 x nu_1 + rho_5";
    e.spec = make_spec(
        "sp2-sp1-rho5", {{FactorKind::sp, 2}, {FactorKind::sp, 1}},
        {with_right_quat(base_summand(q, 0, vec), 1),
         base_summand(re, 0, sov)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T3-row13b";
    e.table_row = "13b";
    e.description = "Sp(2) x U(1), nu_2 x mu_1 + rho_5";
    e.spec = make_spec(
        "sp2-u1-rho5", {{FactorKind::sp, 2}, {FactorKind::torus, 1}},
        {with_circle(base_summand(cx, 0, vec), 1, {1}),
         base_summand(re, 0, sov)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T3-row13c";
    e.table_row = "13c";
    e.description = "Sp(2), nu_2 + rho_5";
    e.spec = make_spec("sp2-rho5", {{FactorKind::sp, 2}},
                       {base_summand(q, 0, vec), base_summand(re, 0, sov)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "T3-row14";
    e.table_row = "14";
    e.description = "Spin(9), Delta_9 + rho_9";
    e.spec = make_spec("spin9-delta-rho", {{FactorKind::spin9, 9}},
                       {base_summand(re, 0, spin), base_summand(re, 0, sov)});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }

  // ---- Controls and named examples ----
  {
    RegistryEntry e;
    e.id = "polar-control-so3-vec";
    e.description = "SO(3), rho_3";
    e.spec = make_spec("so3-vector", {{FactorKind::so, 3}},
                       {base_summand(re, 0, vec)});
    e.cohom = 1;
    e.polar = true;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "polar-control-so4-vec";
    e.description = "SO(4), rho_4";
    e.spec = make_spec("so4-vector", {{FactorKind::so, 4}},
                       {base_summand(re, 0, vec)});
    e.cohom = 1;
    e.polar = true;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "polar-control-torus-split";
    e.description = "T^2 on C^2, weights (1,0), (0,1)";
    e.spec = make_spec("torus-split", {{FactorKind::torus, 2}},
                       {circle_summand(0, {1, 0}), circle_summand(0, {0, 1})});
    e.cohom = 2;
    e.polar = true;
    e.inf_polar = true;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "hopf";
    e.description = "U(1) on C^2, weights (1,1)";
    e.quotient = "S^2(1/2)";
    e.spec = make_spec("hopf", {{FactorKind::torus, 1}},
                       {circle_summand(0, {1}), circle_summand(0, {1})});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    e.curvature = 4.0;
    e.boundary = false;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "wcp-1-2";
    e.description = "U(1) on C^2, weights (1,2)";
    e.quotient = "weighted projective line (1,2)";
    e.spec = make_spec("wcp-1-2", {{FactorKind::torus, 1}},
                       {circle_summand(0, {1}), circle_summand(0, {2})});
    e.cohom = 3;
    e.polar = false;
    e.inf_polar = true;
    e.boundary = false;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "torus-su3-maximal";
    e.description = "T^2 on C^3, weights (1,0), (0,1), (-1,-1)";
    e.spec = make_spec("torus-su3-maximal", {{FactorKind::torus, 2}},
                       {circle_summand(0, {1, 0}), circle_summand(0, {0, 1}),
                        circle_summand(0, {-1, -1})});
    e.cohom = 4;
    e.polar = false;
    e.inf_polar = false;
    add(e);
  }
  {
    RegistryEntry e;
    e.id = "sp1-h2";
    e.description = "Sp(1), H + H (diagonal)";
    e.spec = make_spec("sp1-h2", {{FactorKind::sp, 1}},
                       {base_summand(q, 0, vec), base_summand(q, 0, vec)});
    e.cohom = 5;
    e.polar = false;
    e.inf_polar = true;
    add(e);
  }
  return reg;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> reg = make_registry();
  return reg;
}

const RegistryEntry& registry_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw InvalidParameter("unknown registry id: " + id);
}

std::vector<std::string> registry_ids() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.id);
  return ids;
}

LieGroupRep build_entry(const std::string& id) {
  return build(registry_entry(id).spec);
}

}  // namespace sphereq
