#include "wmcorr/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "wmcorr/entanglement.hpp"

namespace wmcorr {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

// ---- parsing helpers; every failure names its JSON path ----

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void allow_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw ConfigError(child(path, it.key()), "unknown key");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(child(path, key), "missing required key");
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path, "not finite");
  return x;
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  return v.get<std::string>();
}

cplx as_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {as_number(v, path), 0.0};
  if (v.is_array() && v.size() == 2) {
    return {as_number(v[0], child(path, 0)), as_number(v[1], child(path, 1))};
  }
  throw ConfigError(path, "expected a number or [re, im]");
}

std::vector<double> as_real_vector(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_number(v[i], child(path, i)));
  return out;
}

CVector as_complex_vector(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ConfigError(path, "expected a non-empty array");
  CVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = as_complex(v[i], child(path, i));
  return out;
}

Eigen::MatrixXd as_real_matrix(const json& v, const std::string& path, int n) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) {
    throw ConfigError(path, "expected " + std::to_string(n) + " rows");
  }
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r) {
    const auto row = as_real_vector(v[r], child(path, r));
    if (static_cast<int>(row.size()) != n) {
      throw ConfigError(child(path, r), "expected " + std::to_string(n) + " columns");
    }
    for (int c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

Eigen::VectorXd as_fixed_vector(const json& v, const std::string& path, int n) {
  const auto x = as_real_vector(v, path);
  if (static_cast<int>(x.size()) != n) {
    throw ConfigError(path, "expected " + std::to_string(n) + " entries");
  }
  return Eigen::Map<const Eigen::VectorXd>(x.data(), n);
}

CMatrix builtin_observable(const std::string& name, int d, const std::string& path) {
  auto need_qubit = [&] {
    if (d != 2) throw ConfigError(path, name + " needs a 2-dimensional system");
  };
  if (name == "pauli_x") return need_qubit(), Observable::pauli_x().matrix();
  if (name == "pauli_y") return need_qubit(), Observable::pauli_y().matrix();
  if (name == "pauli_z") return need_qubit(), Observable::pauli_z().matrix();
  if (name == "identity") return Observable::identity(d).matrix();
  const std::string prefix = "projector_";
  if (name.rfind(prefix, 0) == 0) {
    const std::string idx = name.substr(prefix.size());
    if (!idx.empty() && std::all_of(idx.begin(), idx.end(), ::isdigit)) {
      const int k = std::stoi(idx);
      if (k < d) return Observable::basis_projector(d, k).matrix();
    }
  }
  throw ConfigError(path, "unknown observable '" + name + "'");
}

CMatrix parse_observable(const json& v, int d, const std::string& path) {
  CMatrix m;
  if (v.is_string()) {
    m = builtin_observable(v.get<std::string>(), d, path);
  } else {
    if (!v.is_array() || static_cast<int>(v.size()) != d) {
      throw ConfigError(path, "expected a builtin name or a " + std::to_string(d) + "x" +
                                  std::to_string(d) + " matrix");
    }
    m.resize(d, d);
    for (int r = 0; r < d; ++r) {
      const auto rp = child(path, r);
      if (!v[r].is_array() || static_cast<int>(v[r].size()) != d) {
        throw ConfigError(rp, "expected " + std::to_string(d) + " entries");
      }
      for (int c = 0; c < d; ++c) m(r, c) = as_complex(v[r][c], child(rp, c));
    }
  }
  try {
    Observable check(m);
  } catch (const InvalidObservable& e) {
    throw ConfigError(path, e.what());
  }
  return m;
}

Quadrature parse_quadrature(const json& v, const std::string& path) {
  const auto s = as_string(v, path);
  if (s == "q") return Quadrature::q;
  if (s == "p") return Quadrature::p;
  throw ConfigError(path, "quadrature must be \"q\" or \"p\"");
}

void parse_grid(const json& g, const std::string& path, PointerConfig& pc) {
  allow_keys(g, path, {"points", "extent"});
  const auto& pts = require(g, path, "points");
  const auto& ext = require(g, path, "extent");
  const std::string pp = child(path, "points"), ep = child(path, "extent");
  if (pts.is_number_integer()) {
    pc.points.assign(pc.dims, static_cast<std::size_t>(std::max(0, as_int(pts, pp))));
  } else if (pts.is_array() && static_cast<int>(pts.size()) == pc.dims) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      pc.points.push_back(static_cast<std::size_t>(std::max(0, as_int(pts[i], child(pp, i)))));
    }
  } else {
    throw ConfigError(pp, "expected an integer or one integer per axis");
  }
  if (ext.is_number()) {
    pc.extent.assign(pc.dims, as_number(ext, ep));
  } else if (ext.is_array() && static_cast<int>(ext.size()) == pc.dims) {
    pc.extent = as_real_vector(ext, ep);
  } else {
    throw ConfigError(ep, "expected a number or one number per axis");
  }
  try {
    Grid check(pc.points, pc.extent);
  } catch (const Error& e) {
    throw ConfigError(path, e.what());
  }
  for (double L : pc.extent) {
    if (!(L > 0)) throw ConfigError(ep, "extent must be positive");
  }
}

PointerConfig parse_pointer(const json& v, const std::string& path) {
  PointerConfig pc;
  const auto kind = as_string(require(v, path, "kind"), child(path, "kind"));
  if (kind == "gaussian") {
    allow_keys(v, path, {"kind", "grid", "sigma", "mean_q", "mean_p", "theta"});
    pc.kind = PointerKind::gaussian;
    const auto& s = require(v, path, "sigma");
    if (!s.is_array() || s.empty() || static_cast<int>(s.size()) > kMaxAxes) {
      throw ConfigError(child(path, "sigma"), "expected a 1x1 to 3x3 matrix");
    }
    pc.dims = static_cast<int>(s.size());
    pc.sigma = as_real_matrix(s, child(path, "sigma"), pc.dims);
    if (!pc.sigma.isApprox(pc.sigma.transpose(), 1e-14)) {
      throw ConfigError(child(path, "sigma"), "not symmetric");
    }
    if (pc.sigma.llt().info() != Eigen::Success) {
      throw ConfigError(child(path, "sigma"), "not positive definite");
    }
    pc.mean_q = v.contains("mean_q") ? as_fixed_vector(v["mean_q"], child(path, "mean_q"), pc.dims)
                                     : Eigen::VectorXd::Zero(pc.dims);
    pc.mean_p = v.contains("mean_p") ? as_fixed_vector(v["mean_p"], child(path, "mean_p"), pc.dims)
                                     : Eigen::VectorXd::Zero(pc.dims);
    pc.theta = v.contains("theta") ? as_real_matrix(v["theta"], child(path, "theta"), pc.dims)
                                   : Eigen::MatrixXd::Zero(pc.dims, pc.dims);
    if (!pc.theta.isApprox(pc.theta.transpose(), 1e-14) && !pc.theta.isZero()) {
      throw ConfigError(child(path, "theta"), "not symmetric");
    }
  } else if (kind == "lg") {
    allow_keys(v, path, {"kind", "grid", "l", "sigma"});
    pc.kind = PointerKind::lg;
    pc.dims = 2;
    pc.l = as_int(require(v, path, "l"), child(path, "l"));
    pc.lg_sigma = v.contains("sigma") ? as_number(v["sigma"], child(path, "sigma")) : 1.0;
    if (!(pc.lg_sigma > 0)) throw ConfigError(child(path, "sigma"), "must be positive");
  } else if (kind == "two_mode_gaussian") {
    allow_keys(v, path, {"kind", "grid", "alpha", "beta", "gamma"});
    pc.kind = PointerKind::two_mode_gaussian;
    pc.dims = 2;
    pc.two_mode.alpha = as_number(require(v, path, "alpha"), child(path, "alpha"));
    pc.two_mode.beta = as_number(require(v, path, "beta"), child(path, "beta"));
    pc.two_mode.gamma = as_number(require(v, path, "gamma"), child(path, "gamma"));
    const auto& t = pc.two_mode;
    if (!(t.alpha > 0 && t.beta > 0 && t.alpha * t.beta > t.gamma * t.gamma)) {
      throw ConfigError(path, "need alpha, beta > 0 and alpha*beta > gamma^2");
    }
  } else {
    throw ConfigError(child(path, "kind"), "unknown pointer kind '" + kind + "'");
  }
  if (v.contains("grid")) parse_grid(v["grid"], child(path, "grid"), pc);
  return pc;
}

const char* kind_name(PointerKind k) {
  switch (k) {
    case PointerKind::gaussian: return "gaussian";
    case PointerKind::lg: return "lg";
    case PointerKind::two_mode_gaussian: return "two_mode_gaussian";
  }
  return "?";
}

ojson complex_json(cplx z) {
  if (z.imag() == 0.0) return z.real();
  return ojson::array({z.real(), z.imag()});
}

ojson matrix_json(const CMatrix& m) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

ojson real_matrix_json(const Eigen::MatrixXd& m) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

ojson vector_json(const Eigen::VectorXd& v) {
  ojson out = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

ScenarioConfig parse_config(const json& doc) {
  const std::string root;
  allow_keys(doc, "", {"schema_version", "id", "description", "system", "pointer", "couplings",
                       "readout", "sweep"});
  ScenarioConfig c;
  c.schema_version = as_int(require(doc, root, "schema_version"), "/schema_version");
  if (c.schema_version != kSchemaVersion) {
    throw ConfigError("/schema_version", "unsupported version " + std::to_string(c.schema_version));
  }
  c.id = as_string(require(doc, root, "id"), "/id");
  if (c.id.empty() || c.id.find_first_of(",\"\n/\\ ") != std::string::npos) {
    throw ConfigError("/id", "must be non-empty without separators or whitespace");
  }
  if (doc.contains("description")) c.description = as_string(doc["description"], "/description");

  const auto& sys = require(doc, root, "system");
  allow_keys(sys, "/system", {"dimension", "pre", "post"});
  c.dimension = as_int(require(sys, "/system", "dimension"), "/system/dimension");
  if (c.dimension < 2 || c.dimension > kMaxSystemDimension) {
    throw ConfigError("/system/dimension", "must lie in [2, " + std::to_string(kMaxSystemDimension) + "]");
  }
  c.pre = as_complex_vector(require(sys, "/system", "pre"), "/system/pre");
  if (c.pre.size() != c.dimension) throw ConfigError("/system/pre", "length differs from dimension");
  if (c.pre.norm() == 0.0) throw ConfigError("/system/pre", "zero vector");
  if (sys.contains("post")) {
    c.post = as_complex_vector(sys["post"], "/system/post");
    if (c.post->size() != c.dimension) throw ConfigError("/system/post", "length differs from dimension");
    if (c.post->norm() == 0.0) throw ConfigError("/system/post", "zero vector");
  }

  c.pointer = parse_pointer(require(doc, root, "pointer"), "/pointer");
  const int axes = c.pointer.dims;

  const auto& cps = require(doc, root, "couplings");
  if (!cps.is_array()) throw ConfigError("/couplings", "expected an array");
  std::map<int, Quadrature> group_quad;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const auto p = child("/couplings", i);
    allow_keys(cps[i], p, {"observable", "axis", "quadrature", "strength", "group"});
    CouplingConfig cc;
    cc.observable = parse_observable(require(cps[i], p, "observable"), c.dimension, child(p, "observable"));
    cc.axis = as_int(require(cps[i], p, "axis"), child(p, "axis"));
    if (cc.axis < 0 || cc.axis >= axes) throw ConfigError(child(p, "axis"), "out of range");
    cc.quadrature = parse_quadrature(require(cps[i], p, "quadrature"), child(p, "quadrature"));
    cc.strength = as_number(require(cps[i], p, "strength"), child(p, "strength"));
    cc.group = cps[i].contains("group") ? as_int(cps[i]["group"], child(p, "group"))
                                        : static_cast<int>(i);
    auto [it, fresh] = group_quad.emplace(cc.group, cc.quadrature);
    if (!fresh && it->second != cc.quadrature) {
      throw ConfigError(child(p, "quadrature"), "couplings in one group must share a quadrature");
    }
    c.couplings.push_back(std::move(cc));
  }

  if (doc.contains("readout")) {
    const auto& r = doc["readout"];
    allow_keys(r, "/readout", {"axis", "observable", "outcome"});
    ReadoutConfig rc;
    rc.axis = as_int(require(r, "/readout", "axis"), "/readout/axis");
    if (rc.axis < 0 || rc.axis >= axes) throw ConfigError("/readout/axis", "out of range");
    rc.observable = parse_observable(require(r, "/readout", "observable"), c.dimension, "/readout/observable");
    rc.outcome = as_int(require(r, "/readout", "outcome"), "/readout/outcome");
    if (rc.outcome < 0 || rc.outcome >= c.dimension) throw ConfigError("/readout/outcome", "out of range");
    c.readout = std::move(rc);
  }
  if (c.readout.has_value() == c.post.has_value()) {
    throw ConfigError("/system/post", "give exactly one of system.post (direct projection) and readout");
  }

  if (doc.contains("sweep")) {
    c.sweep = as_real_vector(doc["sweep"], "/sweep");
    if (!c.sweep.empty() && c.sweep.size() < 3) throw ConfigError("/sweep", "needs at least 3 multipliers");
  }
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file.string(), "cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(file.string(), e.what());
  }
  return parse_config(doc);
}

ojson to_json(const ScenarioConfig& c) {
  ojson doc;
  doc["schema_version"] = c.schema_version;
  doc["id"] = c.id;
  if (!c.description.empty()) doc["description"] = c.description;
  ojson sys;
  sys["dimension"] = c.dimension;
  ojson pre = ojson::array();
  for (Eigen::Index i = 0; i < c.pre.size(); ++i) pre.push_back(complex_json(c.pre[i]));
  sys["pre"] = pre;
  if (c.post) {
    ojson post = ojson::array();
    for (Eigen::Index i = 0; i < c.post->size(); ++i) post.push_back(complex_json((*c.post)[i]));
    sys["post"] = post;
  }
  doc["system"] = sys;

  const auto& pc = c.pointer;
  ojson ptr;
  ptr["kind"] = kind_name(pc.kind);
  switch (pc.kind) {
    case PointerKind::gaussian:
      ptr["sigma"] = real_matrix_json(pc.sigma);
      ptr["mean_q"] = vector_json(pc.mean_q);
      ptr["mean_p"] = vector_json(pc.mean_p);
      ptr["theta"] = real_matrix_json(pc.theta);
      break;
    case PointerKind::lg:
      ptr["l"] = pc.l;
      ptr["sigma"] = pc.lg_sigma;
      break;
    case PointerKind::two_mode_gaussian:
      ptr["alpha"] = pc.two_mode.alpha;
      ptr["beta"] = pc.two_mode.beta;
      ptr["gamma"] = pc.two_mode.gamma;
      break;
  }
  if (!pc.points.empty()) ptr["grid"] = {{"points", pc.points}, {"extent", pc.extent}};
  doc["pointer"] = ptr;

  ojson cps = ojson::array();
  for (const auto& cc : c.couplings) {
    ojson j;
    j["observable"] = matrix_json(cc.observable);
    j["axis"] = cc.axis;
    j["quadrature"] = to_string(cc.quadrature);
    j["strength"] = cc.strength;
    j["group"] = cc.group;
    cps.push_back(j);
  }
  doc["couplings"] = cps;
  if (c.readout) {
    doc["readout"] = {{"axis", c.readout->axis},
                      {"observable", matrix_json(c.readout->observable)},
                      {"outcome", c.readout->outcome}};
  }
  if (!c.sweep.empty()) doc["sweep"] = c.sweep;
  return doc;
}

Grid scenario_grid(const PointerConfig& pc) {
  if (!pc.points.empty()) return Grid(pc.points, pc.extent);
  switch (pc.kind) {
    case PointerKind::gaussian: {
      const std::size_t n = pc.dims == 1 ? 256 : pc.dims == 2 ? 128 : 64;
      std::vector<double> ext;
      for (int a = 0; a < pc.dims; ++a) {
        ext.push_back(std::max(6.0, 8.0 * std::sqrt(pc.sigma(a, a)) + std::abs(pc.mean_q[a])));
      }
      return Grid(std::vector<std::size_t>(pc.dims, n), ext);
    }
    case PointerKind::lg:
      return Grid::uniform(2, 256, lg_default_extent(pc.l, pc.lg_sigma));
    case PointerKind::two_mode_gaussian: {
      const Eigen::Matrix2d cov = two_mode_position_covariance(pc.two_mode);
      const double widest = std::sqrt(std::max(cov(0, 0), cov(1, 1)));
      return Grid::uniform(2, 128, std::max(6.0, 8.0 * widest));
    }
  }
  throw InvalidParams("unknown pointer kind");
}

PointerWavefunction build_pointer(const PointerConfig& pc) {
  const Grid grid = scenario_grid(pc);
  switch (pc.kind) {
    case PointerKind::gaussian:
      return gaussian_pointer(grid, pc.sigma, pc.mean_q, pc.mean_p, pc.theta);
    case PointerKind::lg:
      return lg_mode(grid, pc.l, pc.lg_sigma);
    case PointerKind::two_mode_gaussian:
      return two_mode_gaussian(grid, pc.two_mode);
  }
  throw InvalidParams("unknown pointer kind");
}

double ShiftReport::max_residual() const {
  double r = 0.0;
  for (const auto& row : rows) r = std::max(r, row.residual);
  return r;
}

const ShiftRow& ShiftReport::row(int axis, Quadrature q) const {
  for (const auto& r : rows) {
    if (r.axis == axis && r.quadrature == q) return r;
  }
  throw DimensionError("no report row for axis " + std::to_string(axis));
}

ShiftReport run_scenario(const ScenarioConfig& config, const RunOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  ShiftReport rep;
  rep.scenario_id = config.id;
  rep.multiplier = options.multiplier;
  rep.convention = options.convention;

  const PointerWavefunction phi = build_pointer(config.pointer);
  const Grid& grid = phi.grid();
  rep.grid_points = grid.points();
  rep.grid_extent = grid.half_extents();
  const MomentSet m0 = moments(phi);

  const SystemState pre = make_state(config.pre);
  std::optional<SystemState> post;
  std::optional<Observable> readout_obs;
  if (config.readout) {
    readout_obs.emplace(config.readout->observable);
    const Spectrum sp = eigendecompose(*readout_obs);
    post.emplace(sp.eigenstate(config.readout->outcome));
    rep.readout = ReadoutShift{config.readout->axis, sp.eigenvalues[config.readout->outcome]};
  } else {
    post.emplace(make_state(*config.post));
  }

  std::vector<CouplingSpec> all;
  std::map<int, std::vector<CouplingSpec>> groups;
  std::vector<WeakTerm> terms;
  for (std::size_t k = 0; k < config.couplings.size(); ++k) {
    const auto& cc = config.couplings[k];
    CouplingSpec s{Observable(cc.observable), cc.axis, cc.quadrature,
                   cc.strength * options.multiplier, CouplingMode::exact};
    const cplx aw = weak_value(s.observable, pre, *post);
    rep.weak_values.push_back(aw);
    terms.push_back({s.axis, s.quadrature, s.strength, aw});
    rep.total_strength += std::abs(s.strength);
    if (k == 0) rep.lambda1 = s.strength;
    if (k == 1) rep.lambda2 = s.strength;
    groups[cc.group].push_back(s);
    all.push_back(std::move(s));
  }

  JointState joint = make_joint(pre, phi);
  for (const auto& [g, specs] : groups) joint = apply_couplings(joint, specs);
  if (readout_obs) joint = strong_readout(joint, *readout_obs, config.readout->axis);
  std::optional<Postselected> ps;
  try {
    ps.emplace(postselect(joint, *post));
  } catch (const PostselectionFailed& e) {
    throw PostselectionFailed(config.id + ": " + e.what());
  }
  rep.probability = ps->probability;
  const MomentSet m1 = moments(ps->pointer);

  const ShiftPrediction pred = predict_general(m0, terms, rep.readout, options.convention);
  const MomentSet mf = moments(first_order_pointer(pre, *post, all, phi, rep.readout));

  for (int a = 0; a < grid.dims(); ++a) {
    for (Quadrature q : {Quadrature::q, Quadrature::p}) {
      const bool isq = q == Quadrature::q;
      ShiftRow r;
      r.axis = a;
      r.quadrature = q;
      r.initial = isq ? m0.mean_q[a] : m0.mean_p[a];
      r.final_value = isq ? m1.mean_q[a] : m1.mean_p[a];
      r.shift = r.final_value - r.initial;
      r.predicted = isq ? pred.delta_q[a] : pred.delta_p[a];
      r.residual = std::abs(r.shift - r.predicted);
      rep.rows.push_back(r);
      const double fo = isq ? mf.mean_q[a] : mf.mean_p[a];
      rep.first_order_means.push_back(fo);
      rep.first_order_gap = std::max(rep.first_order_gap, std::abs(fo - r.final_value));
    }
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidParams("slope fit needs >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) return std::numeric_limits<double>::quiet_NaN();
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / den;
}

SweepResult run_sweep(const ScenarioConfig& config, const std::vector<double>& multipliers,
                      const SignConvention& convention) {
  if (multipliers.size() < 3) throw InvalidParams("a sweep needs at least 3 multipliers");
  SweepResult out;
  for (double mlt : multipliers) {
    out.reports.push_back(run_scenario(config, RunOptions{mlt, convention}));
    out.strengths.push_back(out.reports.back().total_strength);
    out.residuals.push_back(out.reports.back().max_residual());
  }
  out.slope = loglog_slope(out.strengths, out.residuals);
  return out;
}

}  // namespace wmcorr
