#include "sphereq/liealg.hpp"

#include <array>
#include <cmath>

#include <json.hpp>
#include <unsupported/Eigen/KroneckerProduct>

#include "sphereq/linalg.hpp"

namespace sphereq {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Quaternions and realification
// ---------------------------------------------------------------------------

struct Quat {
  double w = 0, x = 0, y = 0, z = 0;

  Quat operator*(const Quat& o) const {
    return Quat{w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
  }
  Quat conj() const { return Quat{w, -x, -y, -z}; }
  Quat operator-() const { return Quat{-w, -x, -y, -z}; }
};

const Quat kQ1{1, 0, 0, 0};
const Quat kQi{0, 1, 0, 0};
const Quat kQj{0, 0, 1, 0};
const Quat kQk{0, 0, 0, 1};

// 4x4 matrix of left multiplication by q on H = span(1, i, j, k).
Mat left4(const Quat& q) {
  Mat m(4, 4);
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w, -q.z,  q.y,
       q.y,  q.z,  q.w, -q.x,
       q.z, -q.y,  q.x,  q.w;
  return m;
}

// 4x4 matrix of right multiplication by q.
Mat right4(const Quat& q) {
  Mat m(4, 4);
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w,  q.z, -q.y,
       q.y, -q.z,  q.w,  q.x,
       q.z,  q.y, -q.x,  q.w;
  return m;
}

using QuatMat = std::vector<std::vector<Quat>>;

Mat realify_quat(const QuatMat& a) {
  const int r = static_cast<int>(a.size());
  const int c = static_cast<int>(a[0].size());
  Mat m = Mat::Zero(4 * r, 4 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.block(4 * i, 4 * j, 4, 4) = left4(a[i][j]);
  return m;
}

Mat realify_complex(const Eigen::MatrixXcd& a) {
  const int r = static_cast<int>(a.rows());
  const int c = static_cast<int>(a.cols());
  Mat m = Mat::Zero(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      double re = a(i, j).real(), im = a(i, j).imag();
      m(2 * i, 2 * j) = re;
      m(2 * i, 2 * j + 1) = -im;
      m(2 * i + 1, 2 * j) = im;
      m(2 * i + 1, 2 * j + 1) = re;
    }
  return m;
}

// Complex structure of a realified module: block-diagonal copies of a 2x2
// rotation (complex case) or of right multiplication by i (quaternionic case).
Mat block_structure(int blocks, const Mat& cell) {
  const int b = static_cast<int>(cell.rows());
  Mat m = Mat::Zero(blocks * b, blocks * b);
  for (int i = 0; i < blocks; ++i) m.block(b * i, b * i, b, b) = cell;
  return m;
}

Mat j2() {
  Mat m(2, 2);
  m << 0, -1, 1, 0;
  return m;
}

// ---------------------------------------------------------------------------
// Octonions
// ---------------------------------------------------------------------------

struct OctTable {
  // sign[a][b], index[a][b] encode e_a * e_b = sign * e_index, indices 0..7.
  std::array<std::array<int, 8>, 8> sign{};
  std::array<std::array<int, 8>, 8> index{};

  OctTable() {
    for (int a = 0; a < 8; ++a) {
      sign[0][a] = sign[a][0] = 1;
      index[0][a] = index[a][0] = a;
    }
    for (int a = 1; a < 8; ++a) {
      sign[a][a] = -1;
      index[a][a] = 0;
    }
    auto line = [&](int a, int b, int c) {
      set(a, b, c);
      set(b, c, a);
      set(c, a, b);
    };
    // Fano convention e_i e_{i+1} = e_{i+3}, imaginary indices mod 7.
    for (int i = 1; i <= 7; ++i) {
      auto wrap = [](int v) { return (v - 1) % 7 + 1; };
      line(i, wrap(i + 1), wrap(i + 3));
    }
  }

  void set(int a, int b, int c) {
    sign[a][b] = 1;
    index[a][b] = c;
    sign[b][a] = -1;
    index[b][a] = c;
  }
};

const OctTable& oct_table() {
  static const OctTable table;
  return table;
}

// 8x8 matrix of right multiplication by e_u on the octonions.
Mat oct_right(int u) {
  const auto& t = oct_table();
  Mat m = Mat::Zero(8, 8);
  for (int b = 0; b < 8; ++b) m(t.index[b][u], b) = t.sign[b][u];
  return m;
}

// 8x8 matrix of left multiplication by e_u.
Mat oct_left(int u) {
  const auto& t = oct_table();
  Mat m = Mat::Zero(8, 8);
  for (int b = 0; b < 8; ++b) m(t.index[u][b], b) = t.sign[u][b];
  return m;
}

// Octonion cross product e_a x e_b = Im(e_a e_b) on imaginary indices 1..7.
Vec oct_cross(const Vec& x, const Vec& y) {
  const auto& t = oct_table();
  Vec r = Vec::Zero(7);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      int idx = t.index[a + 1][b + 1];
      if (idx == 0) continue;  // real part, dropped
      r[idx - 1] += t.sign[a + 1][b + 1] * x[a] * y[b];
    }
  return r;
}

// ---------------------------------------------------------------------------
// Clifford gamma matrices
// ---------------------------------------------------------------------------

std::vector<Mat> gammas9() {
  std::vector<Mat> g;
  for (int i = 1; i <= 7; ++i) {
    Mat r = oct_right(i);
    Mat m = Mat::Zero(16, 16);
    m.block(0, 8, 8, 8) = r;
    m.block(8, 0, 8, 8) = -r;  // r is skew, so the block form is symmetric
    g.push_back(m);
  }
  Mat g8 = Mat::Zero(16, 16);
  g8.block(0, 8, 8, 8) = Mat::Identity(8, 8);
  g8.block(8, 0, 8, 8) = Mat::Identity(8, 8);
  g.push_back(g8);
  Mat g9 = Mat::Zero(16, 16);
  g9.block(0, 0, 8, 8) = Mat::Identity(8, 8);
  g9.block(8, 8, 8, 8) = -Mat::Identity(8, 8);
  g.push_back(g9);
  return g;
}

// Cl(7,0) is M_8(C), so seven real symmetric anticommuting involutions on R^8
// do not exist. The 8-dimensional half-spin module is realized through the
// even subalgebra Cl0(7,0) = Cl(0,6) instead: octonion left multiplications
// J_1..J_7 are skew, anticommuting and square to -I, and
//   spin(7) = span{ (1/2) J_i J_j : i < j <= 6 } + span{ (1/2) J_i : i <= 6 }.
std::vector<Mat> gammas7() {
  std::vector<Mat> g;
  for (int i = 1; i <= 7; ++i) g.push_back(oct_left(i));
  return g;
}

std::vector<Mat> spin7_generators() {
  auto j = gammas7();
  std::vector<Mat> gens;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) gens.push_back(0.5 * j[a] * j[b]);
  for (int a = 0; a < 6; ++a) gens.push_back(0.5 * j[a]);
  return gens;
}

std::vector<Mat> spin_generators(const std::vector<Mat>& gammas) {
  std::vector<Mat> gens;
  const int n = static_cast<int>(gammas.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gens.push_back(0.5 * gammas[i] * gammas[j]);
  return gens;
}

// ---------------------------------------------------------------------------
// Factor realizations
// ---------------------------------------------------------------------------

std::vector<Mat> so_defining(int n) {
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat m = Mat::Zero(n, n);
      m(i, j) = -1;
      m(j, i) = 1;
      gens.push_back(m);
    }
  return gens;
}

std::vector<Mat> su_defining(int n, bool with_center) {
  using CMat = Eigen::MatrixXcd;
  const std::complex<double> I(0, 1);
  std::vector<Mat> gens;
  for (int a = 0; a + 1 < n; ++a) {
    CMat m = CMat::Zero(n, n);
    m(a, a) = I;
    m(a + 1, a + 1) = -I;
    gens.push_back(realify_complex(m));
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      CMat m = CMat::Zero(n, n);
      m(a, b) = 1;
      m(b, a) = -1;
      gens.push_back(realify_complex(m));
      m(a, b) = I;
      m(b, a) = I;
      gens.push_back(realify_complex(m));
    }
  if (with_center) {
    CMat m = CMat::Zero(n, n);
    for (int a = 0; a < n; ++a) m(a, a) = I;
    gens.push_back(realify_complex(m));
  }
  return gens;
}

std::vector<Mat> sp_defining(int n) {
  std::vector<Mat> gens;
  auto make = [&](int a, int b, const Quat& q) {
    QuatMat m(n, std::vector<Quat>(n));
    if (a == b) {
      m[a][a] = q;
    } else {
      m[a][b] = q;
      m[b][a] = -q.conj();
    }
    gens.push_back(realify_quat(m));
  };
  for (int a = 0; a < n; ++a)
    for (const Quat& q : {kQi, kQj, kQk}) make(a, a, q);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (const Quat& q : {kQ1, kQi, kQj, kQk}) make(a, b, q);
  return gens;
}

std::vector<Mat> g2_defining() {
  auto so7 = so_defining(7);
  const int nb = static_cast<int>(so7.size());
  Mat constraints = Mat::Zero(21 * 7, nb);
  int row = 0;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      Vec ea = Vec::Zero(7), eb = Vec::Zero(7);
      ea[a] = 1;
      eb[b] = 1;
      Vec cross = oct_cross(ea, eb);
      for (int k = 0; k < nb; ++k) {
        Vec resid = so7[k] * cross - oct_cross(so7[k] * ea, eb) -
                    oct_cross(ea, so7[k] * eb);
        constraints.block(row, k, 7, 1) = resid;
      }
      row += 7;
    }
  Mat ker = kernel(constraints, 1e-8);
  std::vector<Mat> raw;
  for (int c = 0; c < ker.cols(); ++c) {
    Mat m = Mat::Zero(7, 7);
    for (int k = 0; k < nb; ++k) m += ker(k, c) * so7[k];
    raw.push_back(m);
  }
  return orthonormalize_span(raw, 7, 7, 1e-10);
}

// Conjugation module: the action of the defining matrices on an invariant
// matrix subspace, expressed in an orthonormal basis of that subspace.
std::vector<Mat> conjugation_module(const std::vector<Mat>& defining,
                                    const std::vector<Mat>& subspace_basis) {
  const int dim = static_cast<int>(subspace_basis.size());
  std::vector<Mat> out;
  out.reserve(defining.size());
  for (const Mat& g : defining) {
    Mat m(dim, dim);
    for (int b = 0; b < dim; ++b) {
      Mat image = g * subspace_basis[b] - subspace_basis[b] * g;
      for (int a = 0; a < dim; ++a) m(a, b) = trace_dot(subspace_basis[a], image);
    }
    out.push_back(m);
  }
  return out;
}

std::vector<Mat> hermitian_traceless_sp2_basis() {
  std::vector<QuatMat> hs;
  hs.push_back({{kQ1, Quat{}}, {Quat{}, -kQ1}});
  hs.push_back({{Quat{}, kQ1}, {kQ1, Quat{}}});
  hs.push_back({{Quat{}, -kQi}, {kQi, Quat{}}});
  hs.push_back({{Quat{}, -kQj}, {kQj, Quat{}}});
  hs.push_back({{Quat{}, -kQk}, {kQk, Quat{}}});
  std::vector<Mat> real;
  for (const auto& h : hs) real.push_back(realify_quat(h));
  return orthonormalize_span(real, 8, 8, 1e-10);
}

struct FactorRealization {
  std::vector<Mat> defining;  // realified matrices of the defining module
  int def_dim = 0;
};

FactorRealization realize_factor(const Factor& f) {
  FactorRealization r;
  switch (f.kind) {
    case FactorKind::torus:
      r.def_dim = 0;  // tori act through per-summand weights only
      break;
    case FactorKind::so:
      r.defining = so_defining(f.param);
      r.def_dim = f.param;
      break;
    case FactorKind::su:
      r.defining = su_defining(f.param, false);
      r.def_dim = 2 * f.param;
      break;
    case FactorKind::u:
      r.defining = su_defining(f.param, true);
      r.def_dim = 2 * f.param;
      break;
    case FactorKind::sp:
      r.defining = sp_defining(f.param);
      r.def_dim = 4 * f.param;
      break;
    case FactorKind::spin7:
      r.defining = spin7_generators();
      r.def_dim = 8;
      break;
    case FactorKind::spin9:
      r.defining = spin_generators(gammas9());
      r.def_dim = 16;
      break;
    case FactorKind::g2:
      r.defining = g2_defining();
      r.def_dim = 7;
      break;
  }
  return r;
}

// so_vector realization for the factors that admit one.
std::vector<Mat> realize_so_vector(const Factor& f,
                                   const FactorRealization& def) {
  switch (f.kind) {
    case FactorKind::spin9: {
      auto gs = gammas9();
      std::vector<Mat> basis;
      for (const Mat& g : gs) basis.push_back(g / g.norm());
      return conjugation_module(def.defining, basis);
    }
    case FactorKind::sp:
      if (f.param == 2)
        return conjugation_module(def.defining, hermitian_traceless_sp2_basis());
      if (f.param == 1) {
        auto basis = orthonormalize_span(def.defining, 4, 4, 1e-10);
        return conjugation_module(def.defining, basis);
      }
      break;
    case FactorKind::su:
      if (f.param == 2) {  // adjoint action on su(2) itself
        auto basis = orthonormalize_span(def.defining, 4, 4, 1e-10);
        return conjugation_module(def.defining, basis);
      }
      break;
    default:
      break;
  }
  throw InvalidParameter("so_vector module unavailable for " +
                         to_string(f.kind) + "(" + std::to_string(f.param) +
                         ")");
}

}  // namespace

// ---------------------------------------------------------------------------
// LieGroupRep
// ---------------------------------------------------------------------------

double LieGroupRep::bracket_closure_residual() const {
  auto basis =
      orthonormalize_span(generators, ambient_dim, ambient_dim, 1e-12);
  double worst = 0.0;
  const int d = algebra_dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Mat c = generators[i] * generators[j] - generators[j] * generators[i];
      worst = std::max(worst, outside_span(c, basis).norm());
    }
  return worst;
}

void LieGroupRep::validate() const {
  for (const Mat& g : generators) {
    if ((g + g.transpose()).cwiseAbs().maxCoeff() > kSkewTol)
      throw StructureError("generator is not skew-symmetric");
  }
  auto basis =
      orthonormalize_span(generators, ambient_dim, ambient_dim, 1e-12);
  if (static_cast<int>(basis.size()) != algebra_dim())
    throw StructureError("generators are linearly dependent");
  if (bracket_closure_residual() > kClosureTol)
    throw StructureError("bracket closure violated");
  if (spec) {
    if (algebra_dim() != spec->algebra_dim())
      throw StructureError("generator count disagrees with dimension formula");
    if (ambient_dim != spec->ambient_dim())
      throw StructureError("ambient dimension disagrees with spec");
  }
}

std::string LieGroupRep::to_json() const {
  json j;
  j["spec"] = spec ? json::parse(spec->to_json()) : json(nullptr);
  j["ambient_dim"] = ambient_dim;
  j["generators"] = json::array();
  for (const Mat& g : generators) {
    std::vector<double> row_major;
    row_major.reserve(ambient_dim * ambient_dim);
    for (int r = 0; r < ambient_dim; ++r)
      for (int c = 0; c < ambient_dim; ++c) row_major.push_back(g(r, c));
    j["generators"].push_back(row_major);
  }
  return j.dump();
}

LieGroupRep LieGroupRep::from_json(const std::string& text) {
  json j = json::parse(text);
  LieGroupRep rep;
  rep.ambient_dim = j.at("ambient_dim").get<int>();
  if (j.contains("spec") && !j["spec"].is_null())
    rep.spec = GroupSpec::from_json(j["spec"].dump());
  for (const auto& jr : j.at("generators")) {
    auto data = jr.get<std::vector<double>>();
    Mat g(rep.ambient_dim, rep.ambient_dim);
    for (int r = 0; r < rep.ambient_dim; ++r)
      for (int c = 0; c < rep.ambient_dim; ++c)
        g(r, c) = data[r * rep.ambient_dim + c];
    rep.generators.push_back(g);
  }
  rep.validate();
  return rep;
}

// ---------------------------------------------------------------------------
// Builder
// ---------------------------------------------------------------------------

LieGroupRep build(const GroupSpec& spec) {
  spec.validate();
  const int nf = static_cast<int>(spec.factors.size());
  const int ns = static_cast<int>(spec.summands.size());
  const int ambient = spec.ambient_dim();

  std::vector<FactorRealization> real(nf);
  for (int f = 0; f < nf; ++f) real[f] = realize_factor(spec.factors[f]);

  std::vector<SummandRange> sranges(ns);
  {
    int off = 0;
    for (int s = 0; s < ns; ++s) {
      sranges[s] = {off, spec.summand_real_dim(s)};
      off += sranges[s].dim;
    }
  }

  // Per-summand complex structures, needed by circle terms.
  auto summand_J = [&](int s) -> Mat {
    const Summand& sm = spec.summands[s];
    if (!sm.base) return j2();
    const Factor& f = spec.factors[sm.base->factor];
    if ((f.kind == FactorKind::su || f.kind == FactorKind::u) &&
        sm.base->module == BaseModule::vector)
      return block_structure(f.param, j2());
    if (f.kind == FactorKind::sp && sm.base->module == BaseModule::vector)
      return block_structure(f.param, right4(kQi));
    throw StructureError("summand has no complex structure");
  };

  LieGroupRep rep;
  rep.ambient_dim = ambient;
  rep.spec = spec;
  rep.summand_ranges = sranges;

  for (int f = 0; f < nf; ++f) {
    const Factor& factor = spec.factors[f];
    const int d = factor.algebra_dim();
    rep.factor_ranges.push_back({rep.algebra_dim(), d});

    // Action matrices of this factor's basis on each summand.
    std::vector<std::vector<Mat>> action(ns);
    for (int s = 0; s < ns; ++s) {
      const Summand& sm = spec.summands[s];
      const int dim = sranges[s].dim;
      std::vector<Mat> mats(d, Mat::Zero(dim, dim));

      if (factor.kind == FactorKind::torus) {
        for (const auto& c : sm.circles) {
          if (c.factor != f) continue;
          Mat J = summand_J(s);
          for (int a = 0; a < factor.param; ++a) mats[a] += c.weights[a] * J;
        }
      } else {
        if (sm.base && sm.base->factor == f) {
          if (sm.base->module == BaseModule::so_vector) {
            mats = realize_so_vector(factor, real[f]);
          } else {
            mats = real[f].defining;
          }
        }
        for (int rq : sm.right_quat) {
          if (rq != f) continue;
          const Factor& base_f = spec.factors[sm.base->factor];
          // sp(1) basis (i, j, k) realized as minus right multiplication,
          // which matches the left-multiplication structure constants.
          std::array<Quat, 3> units{kQi, kQj, kQk};
          for (int a = 0; a < 3; ++a)
            mats[a] -= block_structure(base_f.param, right4(units[a]));
        }
      }
      action[s] = std::move(mats);
    }

    for (int b = 0; b < d; ++b) {
      Mat g = Mat::Zero(ambient, ambient);
      for (int s = 0; s < ns; ++s)
        g.block(sranges[s].offset, sranges[s].offset, sranges[s].dim,
                sranges[s].dim) = action[s][b];
      rep.generators.push_back(g);
    }
  }

  // Global structure matrices when every summand carries them.
  bool all_complex = true, all_quat = true;
  for (int s = 0; s < ns; ++s) {
    const Summand& sm = spec.summands[s];
    bool has_j = !sm.base ||
                 (spec.factors[sm.base->factor].kind != FactorKind::so &&
                  spec.factors[sm.base->factor].kind != FactorKind::g2 &&
                  sm.base->module == BaseModule::vector);
    all_complex = all_complex && has_j;
    bool quat = sm.base && sm.base->module == BaseModule::vector &&
                spec.factors[sm.base->factor].kind == FactorKind::sp &&
                sm.circles.empty() && sm.right_quat.empty();
    all_quat = all_quat && quat;
  }
  if (all_complex) {
    Mat J = Mat::Zero(ambient, ambient);
    for (int s = 0; s < ns; ++s)
      J.block(sranges[s].offset, sranges[s].offset, sranges[s].dim,
              sranges[s].dim) = summand_J(s);
    rep.complex_structure.push_back(J);
  }
  if (all_quat) {
    for (const Quat& q : {kQi, kQj, kQk}) {
      Mat R = Mat::Zero(ambient, ambient);
      for (int s = 0; s < ns; ++s) {
        const Summand& sm = spec.summands[s];
        const Factor& f = spec.factors[sm.base->factor];
        R.block(sranges[s].offset, sranges[s].offset, sranges[s].dim,
                sranges[s].dim) = block_structure(f.param, right4(q));
      }
      rep.quaternionic_structure.push_back(R);
    }
  }

  rep.validate();
  return rep;
}

LieGroupRep build_classical(FactorKind kind, int n) {
  if (n < 1) throw InvalidParameter("build_classical requires n >= 1");
  if (kind != FactorKind::so && kind != FactorKind::su &&
      kind != FactorKind::u && kind != FactorKind::sp)
    throw InvalidParameter("build_classical: kind must be so/su/u/sp");
  GroupSpec spec;
  spec.name = to_string(kind) + std::to_string(n);
  spec.factors.push_back({kind, n});
  Summand sm;
  sm.base = BaseTerm{0, BaseModule::vector};
  sm.field = kind == FactorKind::so  ? FieldTag::real
             : kind == FactorKind::sp ? FieldTag::quaternionic
                                      : FieldTag::complex;
  spec.summands.push_back(sm);
  return build(spec);
}

LieGroupRep build_spin(int n) {
  if (n != 7 && n != 9) throw InvalidParameter("build_spin: n must be 7 or 9");
  GroupSpec spec;
  spec.name = "spin" + std::to_string(n);
  spec.factors.push_back({n == 7 ? FactorKind::spin7 : FactorKind::spin9, n});
  Summand sm;
  sm.base = BaseTerm{0, BaseModule::spin};
  sm.field = FieldTag::real;
  spec.summands.push_back(sm);
  return build(spec);
}

LieGroupRep build_g2() {
  GroupSpec spec;
  spec.name = "g2";
  spec.factors.push_back({FactorKind::g2, 2});
  Summand sm;
  sm.base = BaseTerm{0, BaseModule::vector};
  sm.field = FieldTag::real;
  spec.summands.push_back(sm);
  return build(spec);
}

LieGroupRep build_circle_weights(const std::vector<int>& weights) {
  std::vector<std::vector<int>> w;
  for (int x : weights) w.push_back({x});
  return build_torus(1, w);
}

LieGroupRep build_torus(int rank, const std::vector<std::vector<int>>& weights) {
  if (weights.empty()) throw InvalidParameter("torus needs at least one summand");
  GroupSpec spec;
  spec.name = "torus" + std::to_string(rank);
  spec.factors.push_back({FactorKind::torus, rank});
  for (const auto& w : weights) {
    Summand sm;
    sm.field = FieldTag::complex;
    sm.circles.push_back({0, w});
    spec.summands.push_back(sm);
  }
  return build(spec);
}

LieGroupRep doubling(const LieGroupRep& rep) { return direct_sum(rep, rep); }

LieGroupRep direct_sum(const LieGroupRep& a, const LieGroupRep& b) {
  if (a.algebra_dim() != b.algebra_dim())
    throw StructureError("direct_sum requires identical algebras");
  if (a.spec && b.spec) {
    if (a.spec->factors.size() != b.spec->factors.size())
      throw StructureError("direct_sum requires identical factor structure");
    for (size_t i = 0; i < a.spec->factors.size(); ++i)
      if (a.spec->factors[i].kind != b.spec->factors[i].kind ||
          a.spec->factors[i].param != b.spec->factors[i].param)
        throw StructureError("direct_sum requires identical factor structure");
    GroupSpec spec = *a.spec;
    spec.name = a.spec->name + "+" + b.spec->name;
    for (const auto& sm : b.spec->summands) spec.summands.push_back(sm);
    return build(spec);
  }
  const int n = a.ambient_dim + b.ambient_dim;
  LieGroupRep rep;
  rep.ambient_dim = n;
  for (int i = 0; i < a.algebra_dim(); ++i) {
    Mat g = Mat::Zero(n, n);
    g.topLeftCorner(a.ambient_dim, a.ambient_dim) = a.generators[i];
    g.bottomRightCorner(b.ambient_dim, b.ambient_dim) = b.generators[i];
    rep.generators.push_back(g);
  }
  rep.summand_ranges = {{0, a.ambient_dim}, {a.ambient_dim, b.ambient_dim}};
  rep.validate();
  return rep;
}

namespace {

Eigen::MatrixXcd complexify(const Mat& m) {
  const int n = static_cast<int>(m.rows()) / 2;
  Eigen::MatrixXcd c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c(i, j) = std::complex<double>(m(2 * i, 2 * j), m(2 * i + 1, 2 * j));
  return c;
}

}  // namespace

LieGroupRep tensor_combine(FieldTag field, const LieGroupRep& a,
                           const LieGroupRep& b) {
  if (field == FieldTag::complex) {
    if (a.complex_structure.empty() || b.complex_structure.empty())
      throw StructureError("complex tensor requires complex structures");
    // complexify() assumes coordinates are realified as (1, i) pairs, which
    // corresponds to the block-diagonal standard J.
    auto standard_j = [](const LieGroupRep& r) {
      Mat expect = Mat::Zero(r.ambient_dim, r.ambient_dim);
      for (int i = 0; i + 1 < r.ambient_dim; i += 2) {
        expect(i, i + 1) = -1;
        expect(i + 1, i) = 1;
      }
      return (r.complex_structure[0] - expect).cwiseAbs().maxCoeff() < 1e-12;
    };
    if (!standard_j(a) || !standard_j(b))
      throw StructureError("complex tensor requires the standard (1, i) layout");
    const Mat Ja = a.complex_structure[0];
    for (const Mat& g : a.generators)
      if ((g * Ja - Ja * g).cwiseAbs().maxCoeff() > 1e-10)
        throw StructureError("left factor is not complex-linear");
    const int ma = a.ambient_dim / 2, mb = b.ambient_dim / 2;
    LieGroupRep rep;
    rep.ambient_dim = 2 * ma * mb;
    Eigen::MatrixXcd idA = Eigen::MatrixXcd::Identity(ma, ma);
    Eigen::MatrixXcd idB = Eigen::MatrixXcd::Identity(mb, mb);
    for (const Mat& g : a.generators) {
      Eigen::MatrixXcd c = complexify(g);
      rep.generators.push_back(realify_complex(
          Eigen::kroneckerProduct(c, idB).eval()));
    }
    for (const Mat& g : b.generators) {
      Eigen::MatrixXcd c = complexify(g);
      rep.generators.push_back(realify_complex(
          Eigen::kroneckerProduct(idA, c).eval()));
    }
    rep.complex_structure.push_back(
        realify_complex((std::complex<double>(0, 1) *
                         Eigen::MatrixXcd::Identity(ma * mb, ma * mb))
                            .eval()));
    rep.validate();
    return rep;
  }
  if (field == FieldTag::quaternionic) {
    if (a.quaternionic_structure.size() != 3)
      throw StructureError("quaternionic tensor requires a quaternionic left factor");
    if (b.ambient_dim != 4)
      throw StructureError("quaternionic tensor implemented for a scalar right factor H");
    LieGroupRep rep;
    rep.ambient_dim = a.ambient_dim;
    rep.generators = a.generators;
    // Each right generator is left multiplication by an imaginary quaternion
    // xi on H; it acts on the tensor product by right multiplication by -xi.
    for (const Mat& g : b.generators) {
      Vec xi = g.col(0);  // action on 1 recovers the quaternion
      if (std::abs(xi[0]) > 1e-10)
        throw StructureError("right factor is not an imaginary quaternion action");
      Mat r = -(xi[1] * a.quaternionic_structure[0] +
                xi[2] * a.quaternionic_structure[1] +
                xi[3] * a.quaternionic_structure[2]);
      rep.generators.push_back(r);
    }
    rep.validate();
    return rep;
  }
  throw InvalidParameter("tensor field must be complex or quaternionic");
}

LieGroupRep conjugate(const LieGroupRep& rep, const Mat& q) {
  LieGroupRep out;
  out.ambient_dim = rep.ambient_dim;
  for (const Mat& g : rep.generators)
    out.generators.push_back(q * g * q.transpose());
  for (const Mat& s : rep.complex_structure)
    out.complex_structure.push_back(q * s * q.transpose());
  for (const Mat& s : rep.quaternionic_structure)
    out.quaternionic_structure.push_back(q * s * q.transpose());
  out.factor_ranges = rep.factor_ranges;
  return out;
}

std::vector<Mat> clifford_gammas9() { return gammas9(); }
std::vector<Mat> clifford_gammas7() { return gammas7(); }

std::pair<int, int> octonion_mult(int a, int b) {
  const auto& t = oct_table();
  return {t.sign[a][b], t.index[a][b]};
}

}  // namespace sphereq
