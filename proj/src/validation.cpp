#include "wmcorr/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "wmcorr/entanglement.hpp"
#include "wmcorr/fourier_corr.hpp"
#include "wmcorr/kernels.hpp"

#ifndef WMCORR_SCENARIO_DIR
#define WMCORR_SCENARIO_DIR "scenarios"
#endif

namespace wmcorr {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

// Tolerances and budgets of the acceptance criteria.
constexpr double kLgTolerance = 1e-3;
constexpr double kLgBudget = 5.0;
constexpr double kResidualFactor = 3.0;  // |residual| <= 3 lambda^2
constexpr double kSlopeTarget = 2.0;
constexpr double kSlopeWindow = 0.3;
constexpr double kSingleBudget = 10.0;
constexpr double kSequentialBudget = 60.0;
constexpr double kExactOffsetTolerance = 1e-9;
constexpr double kNullFloor = 1e-6;
constexpr double kInvarianceTolerance = 1e-9;
constexpr double kEntanglementRelative = 0.05;
constexpr double kEntanglementFloor = 1e-3;
constexpr double kEntanglementBudget = 20.0;
constexpr double kEntanglementLambda = 0.05;
constexpr double kAppendixTolerance = 1e-6;
constexpr double kOracleFloor = 1e-9;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

ScenarioConfig load_bundled(const fs::path& dir, const std::string& id) {
  return load_config(dir / (id + ".json"));
}

void finish(CriterionResult& r, const Stopwatch& sw, bool ok) {
  r.runtime_s = sw.seconds();
  const bool in_budget = r.runtime_limit_s <= 0.0 || r.runtime_s < r.runtime_limit_s;
  if (!in_budget) r.detail += "; over the " + fmt(r.runtime_limit_s) + " s budget";
  r.passed = ok && in_budget;
}

CriterionResult start(std::string id, std::string title) {
  CriterionResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

double shift_of(const ShiftReport& rep, int axis, Quadrature q) { return rep.row(axis, q).shift; }

}  // namespace

bool ValidationSummary::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

fs::path bundled_scenario_dir() { return fs::path(WMCORR_SCENARIO_DIR); }

std::vector<fs::path> scenario_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw ConfigError(dir.string(), "scenario directory not found");
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CriterionResult criterion_calibration(const SignConvention& conv) {
  Stopwatch sw;
  CriterionResult r = start("C0", "sign convention matches oracle calibration");
  const SignConvention cal = calibrate_convention();
  auto js = [](const SignConvention& c) {
    return ojson{{"im_q", c.im_q}, {"im_p", c.im_p}, {"re", c.re}, {"readout", c.readout}};
  };
  r.data = {{"calibrated", js(cal)}, {"in_use", js(conv)}};
  r.detail = "calibrated (s, s', r, readout) = (" + std::to_string(cal.im_q) + ", " +
             std::to_string(cal.im_p) + ", " + std::to_string(cal.re) + ", " +
             std::to_string(cal.readout) + ")";
  finish(r, sw, cal == conv);
  return r;
}

CriterionResult criterion_lg_law() {
  Stopwatch sw;
  CriterionResult r = start("C1", "LG correlation law, l in {0,1,2}");
  r.runtime_limit_s = kLgBudget;
  double worst = 0.0, worst_equal_sign = 0.0;
  ojson rows = ojson::array();
  for (int l : {0, 1, 2}) {
    const Grid grid = Grid::uniform(2, 256, lg_default_extent(l, 1.0));
    const MomentSet m = moments(lg_mode(grid, l, 1.0));
    const double res = lg_compatibility(m, l);
    const double eq = lg_equal_sign_residual(m, l);
    worst = std::max(worst, res);
    worst_equal_sign = std::max(worst_equal_sign, eq);
    rows.push_back({{"l", l},
                    {"corr_px_y", m.corr_qp(1, 0)},
                    {"corr_py_x", m.corr_qp(0, 1)},
                    {"corr_x_y", m.corr_qq(0, 1)},
                    {"residual", res},
                    {"equal_sign_residual", eq}});
  }
  r.data = {{"cases", rows}, {"tolerance", kLgTolerance}};
  r.detail = "max residual " + fmt(worst) + " (tol " + fmt(kLgTolerance) +
             "); equal-sign reading residual " + fmt(worst_equal_sign) + " (diagnostic)";
  finish(r, sw, worst <= kLgTolerance);
  return r;
}

CriterionResult criterion_single_wm(const fs::path& dir, const SignConvention& conv) {
  Stopwatch sw;
  CriterionResult r = start("C2", "single-WM shifts and O(lambda^2) convergence");
  r.runtime_limit_s = kSingleBudget;
  const ScenarioConfig cfg = load_bundled(dir, "single_corr");
  const ShiftReport rep = run_scenario(cfg, {1.0, conv});
  const double lambda = rep.total_strength;
  const double tol = kResidualFactor * lambda * lambda;
  const SweepResult sw2 = run_sweep(cfg, {2.0, 1.0, 0.5}, conv);
  const bool slope_ok = std::abs(sw2.slope - kSlopeTarget) <= kSlopeWindow;
  r.data = {{"lambda", lambda},
            {"max_residual", rep.max_residual()},
            {"tolerance", tol},
            {"sweep_strengths", sw2.strengths},
            {"sweep_residuals", sw2.residuals},
            {"slope", std::isfinite(sw2.slope) ? ojson(sw2.slope) : ojson(nullptr)}};
  r.detail = "max residual " + fmt(rep.max_residual()) + " (tol " + fmt(tol) + "), slope " +
             fmt(sw2.slope);
  finish(r, sw, rep.max_residual() <= tol && slope_ok);
  return r;
}

CriterionResult criterion_sequential_wm(const fs::path& dir, const SignConvention& conv) {
  Stopwatch sw;
  CriterionResult r = start("C3", "sequential-WM shifts, readout offset at lambda=0");
  r.runtime_limit_s = kSequentialBudget;
  const ScenarioConfig cfg = load_bundled(dir, "sequential_full");
  const ShiftReport rep = run_scenario(cfg, {1.0, conv});
  const double lsum = std::abs(rep.lambda1) + std::abs(rep.lambda2);
  const double tol = kResidualFactor * lsum * lsum;

  const ShiftReport zero = run_scenario(cfg, {0.0, conv});
  if (!zero.readout) throw ConfigError("sequential_full", "needs a strong readout");
  const int ax = zero.readout->axis;
  const double offset_err =
      std::abs(shift_of(zero, ax, Quadrature::p) - conv.readout * zero.readout->eigenvalue);
  // With every lambda zero the probability is |<a3l|psi_i>|^2.
  const Observable a3(cfg.readout->observable);
  const SystemState target = eigendecompose(a3).eigenstate(cfg.readout->outcome);
  const double expect_prob = std::norm(target.amplitudes().dot(make_state(cfg.pre).amplitudes()));
  const double prob_err = std::abs(zero.probability - expect_prob);

  r.data = {{"max_residual", rep.max_residual()},
            {"tolerance", tol},
            {"zero_coupling_offset_error", offset_err},
            {"zero_coupling_probability_error", prob_err}};
  r.detail = "max residual " + fmt(rep.max_residual()) + " (tol " + fmt(tol) +
             "), lambda=0 offset error " + fmt(offset_err) + ", probability error " + fmt(prob_err);
  finish(r, sw,
         rep.max_residual() <= tol && offset_err <= kExactOffsetTolerance &&
             prob_err <= kExactOffsetTolerance);
  return r;
}

CriterionResult criterion_jozsa_reduction(const fs::path& dir, const SignConvention& conv) {
  Stopwatch sw;
  CriterionResult r = start("C4", "Jozsa reduction with zero cross-correlations");
  const ScenarioConfig cfg = load_bundled(dir, "jozsa_reduction_3d");
  const ShiftReport rep = run_scenario(cfg, {1.0, conv});
  if (!rep.readout || rep.readout->axis != 2) {
    throw ConfigError("jozsa_reduction_3d", "needs a strong readout on axis 2");
  }
  const double lambda = rep.total_strength;
  const double tol = std::max(kNullFloor, kResidualFactor * lambda * lambda);
  const double dq2 = std::abs(shift_of(rep, 1, Quadrature::q));
  const double dq3 = std::abs(shift_of(rep, 2, Quadrature::q));
  const double dp3 = std::abs(shift_of(rep, 2, Quadrature::p) - conv.readout * rep.readout->eigenvalue);
  r.data = {{"dq2", dq2}, {"dq3", dq3}, {"dp3_minus_offset", dp3}, {"tolerance", tol}};
  r.detail = "|dq2| " + fmt(dq2) + ", |dq3| " + fmt(dq3) + ", |dp3 - a3l| " + fmt(dp3) +
             " (tol " + fmt(tol) + ")";
  finish(r, sw, dq2 <= tol && dq3 <= tol && dp3 <= tol);
  return r;
}

CriterionResult criterion_real_weak_value(const fs::path& dir, const SignConvention& conv) {
  Stopwatch sw;
  CriterionResult r = start("C5", "real weak values give no correlation-driven shift");
  bool ok = true;
  ojson cases = ojson::array();
  for (const char* id : {"real_weak_value", "real_weak_value_seq"}) {
    const ShiftReport rep = run_scenario(load_bundled(dir, id), {1.0, conv});
    for (auto w : rep.weak_values) {
      if (std::abs(w.imag()) > 1e-12) throw ConfigError(id, "weak values must be real");
    }
    const double lambda = rep.total_strength;
    const double tol = std::max(kNullFloor, kResidualFactor * lambda * lambda);
    // With Im(A)_w = 0 the predictions hold only the Re(A)_w and readout
    // terms, so each residual is the correlation-driven part of a shift.
    const double worst = rep.max_residual();
    ok = ok && worst <= tol;
    cases.push_back({{"scenario", id}, {"max_correlation_shift", worst}, {"tolerance", tol}});
    r.detail += std::string(r.detail.empty() ? "" : ", ") + id + " " + fmt(worst) + " (tol " +
                fmt(tol) + ")";
  }
  r.data = {{"cases", cases}};
  finish(r, sw, ok);
  return r;
}

CriterionResult criterion_displacement_invariance() {
  Stopwatch sw;
  CriterionResult r = start("C6", "covariances invariant under momentum displacement");
  Eigen::MatrixXd sigma(2, 2), theta(2, 2);
  sigma << 1.0, 0.5, 0.5, 1.0;
  theta << -0.2, 0.4, 0.4, -0.2;
  const Grid g = Grid::uniform(2, 128, 8.0);
  const PointerWavefunction gauss =
      gaussian_pointer(g, sigma, Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(2), theta);
  const PointerWavefunction lg = lg_mode(Grid::uniform(2, 256, lg_default_extent(1, 1.0)), 1, 1.0);

  double worst_cov = 0.0, worst_mean = 0.0;
  for (const auto* phi : {&gauss, &lg}) {
    const MomentSet m0 = moments(*phi);
    const double dp0 = phi->grid().dp(0), dp1 = phi->grid().dp(1);
    for (auto [k0, k1] : {std::pair{1, 0}, {0, -2}, {3, 1}}) {
      const std::vector<double> shift{k0 * dp0, k1 * dp1};
      const MomentSet m = moments(displace_momentum(*phi, shift));
      worst_cov = std::max({worst_cov, (m.cov_qq - m0.cov_qq).cwiseAbs().maxCoeff(),
                            (m.cov_qp - m0.cov_qp).cwiseAbs().maxCoeff(),
                            (m.cov_pp - m0.cov_pp).cwiseAbs().maxCoeff()});
      for (int a = 0; a < 2; ++a) {
        worst_mean = std::max(worst_mean, std::abs(m.mean_p[a] - m0.mean_p[a] - shift[a]));
      }
    }
  }
  r.data = {{"max_covariance_change", worst_cov},
            {"max_mean_p_error", worst_mean},
            {"tolerance", kInvarianceTolerance}};
  r.detail = "max covariance change " + fmt(worst_cov) + ", mean_p error " + fmt(worst_mean) +
             " (tol " + fmt(kInvarianceTolerance) + ")";
  finish(r, sw, worst_cov <= kInvarianceTolerance && worst_mean <= kInvarianceTolerance);
  return r;
}

CriterionResult criterion_entanglement(const SignConvention& conv) {
  Stopwatch sw;
  CriterionResult r = start("C7", "entanglement protocol from pointer shifts");
  r.runtime_limit_s = kEntanglementBudget;
  WeakProbeConfig probe = default_probe(kEntanglementLambda);
  probe.convention = conv;
  const Grid grid = Grid::uniform(2, 128, 10.0);
  bool ok = true;
  double worst_rel = 0.0;
  ojson cases = ojson::array();
  for (double gamma : {0.0, 0.05, -0.05, 0.1, -0.1}) {
    const PointerWavefunction phi = two_mode_gaussian(grid, {0.25, 0.25, gamma});
    const CrossCovariance direct = c_matrix_direct(phi);
    const CrossCovariance shifted = c_matrix_from_shifts(phi, probe);
    double rel = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const double d = direct.entries(i, j);
        if (std::abs(d) > kEntanglementFloor) {
          rel = std::max(rel, std::abs(shifted.entries(i, j) - d) / std::abs(d));
        }
      }
    }
    const bool sign_ok = is_entangled(direct) == is_entangled(shifted);
    const bool zero_ok = gamma != 0.0 || (std::abs(direct.det()) <= kDetTolerance &&
                                          std::abs(shifted.det()) <= kDetTolerance);
    ok = ok && rel <= kEntanglementRelative && sign_ok && zero_ok;
    worst_rel = std::max(worst_rel, rel);
    cases.push_back({{"gamma", gamma},
                     {"det_direct", direct.det()},
                     {"det_shifts", shifted.det()},
                     {"max_relative_error", rel},
                     {"entangled", is_entangled(shifted)}});
  }
  r.data = {{"cases", cases}, {"lambda", kEntanglementLambda}};
  r.detail = "max relative entry error " + fmt(worst_rel) + " (tol " + fmt(kEntanglementRelative) + ")";
  finish(r, sw, ok);
  return r;
}

CriterionResult criterion_appendix_a() {
  Stopwatch sw;
  CriterionResult r = start("C8", "partial-Fourier p1-q2 correlation identity");
  double worst = 0.0, worst_corrected = 0.0;
  ojson cases = ojson::array();
  for (double s1 : {0.8, 1.0, 1.25}) {
    for (double c12 : {0.1, 0.2, 0.3}) {
      const AppendixACheck chk = appendix_a_check(s1, 1.0, c12);
      worst = std::max(worst, chk.residual);
      worst_corrected = std::max(worst_corrected, chk.corrected_residual);
      cases.push_back({{"sigma1", s1},
                       {"c12", c12},
                       {"numeric", {chk.numeric.real(), chk.numeric.imag()}},
                       {"residual", chk.residual},
                       {"corrected_residual", chk.corrected_residual}});
    }
  }
  r.data = {{"cases", cases}, {"tolerance", kAppendixTolerance}};
  r.detail = "max residual vs i c12/sigma1^2 " + fmt(worst) + " (tol " + fmt(kAppendixTolerance) +
             "); vs i c12/sigma2^2 " + fmt(worst_corrected) + " (diagnostic)";
  finish(r, sw, worst <= kAppendixTolerance);
  return r;
}

CriterionResult criterion_oracle_cross_check(const std::vector<ShiftReport>& reports) {
  Stopwatch sw;
  CriterionResult r = start("C9", "first-order pointer vs exact pipeline on every scenario");
  bool ok = !reports.empty();
  double worst_ratio = 0.0;
  ojson cases = ojson::array();
  for (const auto& rep : reports) {
    const double lambda = rep.total_strength;
    const double tol = std::max(kOracleFloor, kResidualFactor * lambda * lambda);
    ok = ok && rep.first_order_gap <= tol;
    worst_ratio = std::max(worst_ratio, rep.first_order_gap / tol);
    cases.push_back({{"scenario", rep.scenario_id}, {"gap", rep.first_order_gap}, {"tolerance", tol}});
  }
  r.data = {{"cases", cases}};
  r.detail = std::to_string(reports.size()) + " scenarios, worst gap/tolerance " + fmt(worst_ratio);
  finish(r, sw, ok);
  return r;
}

CriterionResult criterion_determinism(const fs::path& dir, const SignConvention& conv) {
  Stopwatch sw;
  CriterionResult r = start("C10", "byte-identical reports across runs and thread counts");
  const int threads = kernels::max_threads();
  bool ok = true;
  for (const char* id : {"single_corr", "lg_probe"}) {
    const ScenarioConfig cfg = load_bundled(dir, id);
    std::vector<std::string> outputs;
    for (int t : {threads, threads, 1, std::max(2, threads)}) {
      kernels::set_threads(t);
      const ShiftReport rep = run_scenario(cfg, {1.0, conv});
      outputs.push_back(to_csv({rep}) + to_json(rep).dump(2));
    }
    kernels::set_threads(threads);
    ok = ok && std::all_of(outputs.begin(), outputs.end(),
                           [&](const std::string& s) { return s == outputs.front(); });
  }
  r.detail = ok ? "identical" : "outputs differ";
  r.data = {{"identical", ok}};
  finish(r, sw, ok);
  return r;
}

ValidationSummary validate_all(const ValidationOptions& options) {
  const fs::path dir = options.scenario_dir.empty() ? bundled_scenario_dir() : options.scenario_dir;
  const SignConvention& conv = options.convention;
  ValidationSummary s;
  std::vector<ScenarioConfig> configs;
  for (const auto& f : scenario_files(dir)) configs.push_back(load_config(f));

  s.criteria.push_back(criterion_calibration(conv));
  s.criteria.push_back(criterion_lg_law());
  s.criteria.push_back(criterion_single_wm(dir, conv));
  s.criteria.push_back(criterion_sequential_wm(dir, conv));
  s.criteria.push_back(criterion_jozsa_reduction(dir, conv));
  s.criteria.push_back(criterion_real_weak_value(dir, conv));
  s.criteria.push_back(criterion_displacement_invariance());
  s.criteria.push_back(criterion_entanglement(conv));
  s.criteria.push_back(criterion_appendix_a());
  for (const auto& c : configs) s.scenario_reports.push_back(run_scenario(c, {1.0, conv}));
  s.criteria.push_back(criterion_oracle_cross_check(s.scenario_reports));
  s.criteria.push_back(criterion_determinism(dir, conv));
  return s;
}

void write_validation(const ValidationSummary& s, const fs::path& out_dir) {
  ojson crit = ojson::array();
  std::string csv = "id,passed,title\n";
  for (const auto& c : s.criteria) {
    crit.push_back({{"id", c.id},
                    {"title", c.title},
                    {"passed", c.passed},
                    {"detail", c.detail},
                    {"data", c.data}});
    csv += c.id + ',' + (c.passed ? "true" : "false") + ",\"" + c.title + "\"\n";
  }
  ojson doc;
  doc["all_passed"] = s.all_passed();
  doc["criteria"] = crit;
  write_text(out_dir / "validation.json", doc.dump(2) + "\n");
  write_text(out_dir / "validation.csv", csv);
  write_text(out_dir / "scenarios.csv", to_csv(s.scenario_reports));
  ojson reps = ojson::array();
  for (const auto& r : s.scenario_reports) reps.push_back(to_json(r));
  write_text(out_dir / "scenarios.json", reps.dump(2) + "\n");
}

}  // namespace wmcorr
