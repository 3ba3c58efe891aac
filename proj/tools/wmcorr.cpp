// Command-line front end: run / sweep scenarios, stand-alone checks and the
// acceptance suite. Exit codes: 0 success, 1 failure, 2 config error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "wmcorr/entanglement.hpp"
#include "wmcorr/fourier_corr.hpp"
#include "wmcorr/scenario.hpp"
#include "wmcorr/validation.hpp"

namespace fs = std::filesystem;
using namespace wmcorr;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

void print_report(const ShiftReport& rep) {
  std::printf("%s  multiplier %.6g  P(post) %.6g  wall %.3f s\n", rep.scenario_id.c_str(),
              rep.multiplier, rep.probability, rep.wall_time_s);
  std::printf("  %-4s %-2s %14s %14s %14s %12s\n", "axis", "", "shift", "predicted", "residual",
              "1st-order");
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    std::printf("  %-4d %-2s %14.6e %14.6e %12.3e %12.3e\n", r.axis, to_string(r.quadrature),
                r.shift, r.predicted, r.residual, rep.first_order_means[i] - r.final_value);
  }
}

void emit(const std::optional<fs::path>& out, const std::string& name, const std::string& text) {
  if (out) write_text(*out / name, text);
}

ojson cmat(const Eigen::Matrix2d& m) {
  return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak-measurement pointer correlations: scenarios and checks"};
  app.require_subcommand(1);
  std::optional<fs::path> out;
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Directory for CSV/JSON output");
  };

  std::string file;
  auto* run = app.add_subcommand("run", "Run one scenario file");
  run->add_option("file", file, "Scenario JSON")->required();
  add_out(run);

  std::vector<double> multipliers;
  auto* sweep = app.add_subcommand("sweep", "Run a scenario over strength multipliers");
  sweep->add_option("file", file, "Scenario JSON")->required();
  sweep->add_option("--multipliers", multipliers, "Strength multipliers (default: config sweep)");
  add_out(sweep);

  int l = 1;
  double sigma = 1.0;
  std::size_t points = 256;
  auto* lg = app.add_subcommand("lg-check", "Cross-correlations of an LG pointer");
  lg->add_option("--l", l, "Topological charge")->required();
  lg->add_option("--sigma", sigma, "Waist parameter");
  lg->add_option("--points", points, "Grid points per axis");
  add_out(lg);

  double alpha = 0.25, beta = 0.25, gamma = 0.0, lambda = 0.05;
  auto* ent = app.add_subcommand("entangle", "det(C) test on a two-mode Gaussian");
  ent->add_option("--alpha", alpha)->required();
  ent->add_option("--beta", beta)->required();
  ent->add_option("--gamma", gamma)->required();
  ent->add_option("--lambda", lambda, "Probe strength");
  add_out(ent);

  double s1 = 1.0, s2 = 1.0, c12 = 0.2;
  auto* app_a = app.add_subcommand("appendix-a", "Partial-Fourier p1-q2 correlation check");
  app_a->add_option("--sigma1", s1)->required();
  app_a->add_option("--sigma2", s2)->required();
  app_a->add_option("--c12", c12)->required();
  add_out(app_a);

  fs::path scenario_dir;
  bool flip = false;
  auto* val = app.add_subcommand("validate", "Run every acceptance criterion");
  val->add_option("--scenarios", scenario_dir, "Scenario directory (default: bundled corpus)");
  val->add_flag("--flip-convention", flip, "Negate every sign of the frozen convention");
  add_out(val);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) {
      const ShiftReport rep = run_scenario(load_config(file));
      print_report(rep);
      emit(out, rep.scenario_id + ".csv", to_csv({rep}));
      emit(out, rep.scenario_id + ".json", to_json(rep).dump(2) + "\n");
    } else if (*sweep) {
      const ScenarioConfig cfg = load_config(file);
      if (multipliers.empty()) multipliers = cfg.sweep;
      if (multipliers.size() < 3) throw ConfigError("--multipliers", "need at least 3 values");
      const SweepResult res = run_sweep(cfg, multipliers);
      for (const auto& r : res.reports) print_report(r);
      std::printf("log-log residual slope: %.4f\n", res.slope);
      emit(out, cfg.id + "_sweep.csv", to_csv(res.reports));
      emit(out, cfg.id + "_sweep.json", to_json(res).dump(2) + "\n");
    } else if (*lg) {
      const Grid grid = Grid::uniform(2, points, lg_default_extent(l, sigma));
      const MomentSet m = moments(lg_mode(grid, l, sigma));
      const double res = lg_compatibility(m, l);
      std::printf("l = %d  corr(x,p_y) %.8f  corr(y,p_x) %.8f  corr(x,y) %.2e\n", l,
                  m.corr_qp(0, 1), m.corr_qp(1, 0), m.corr_qq(0, 1));
      std::printf("var(x) %.8f  residual vs (+l/2, -l/2, 0): %.3e  equal-sign residual %.3e\n",
                  m.var_q(0), res, lg_equal_sign_residual(m, l));
      ojson j{{"l", l},
              {"sigma", sigma},
              {"points", points},
              {"corr_x_py", m.corr_qp(0, 1)},
              {"corr_y_px", m.corr_qp(1, 0)},
              {"corr_x_y", m.corr_qq(0, 1)},
              {"var_x", m.var_q(0)},
              {"residual", res}};
      emit(out, "lg_check.json", j.dump(2) + "\n");
      return res <= 1e-3 ? kExitOk : kExitFailure;
    } else if (*ent) {
      const TwoModeGaussianParams p{alpha, beta, gamma};
      const Eigen::Matrix2d cov = two_mode_position_covariance(p);
      const double widest = std::sqrt(std::max(cov(0, 0), cov(1, 1)));
      const Grid grid = Grid::uniform(2, 128, std::max(10.0, 8.0 * widest));
      const PointerWavefunction phi = two_mode_gaussian(grid, p);
      const CrossCovariance direct = c_matrix_direct(phi);
      const CrossCovariance shifted = c_matrix_from_shifts(phi, default_probe(lambda));
      std::cout << "C (direct):\n" << direct.entries << "\ndet " << direct.det()
                << (is_entangled(direct) ? "  entangled\n" : "  not flagged\n");
      std::cout << "C (from shifts):\n" << shifted.entries << "\ndet " << shifted.det()
                << (is_entangled(shifted) ? "  entangled\n" : "  not flagged\n");
      ojson j{{"alpha", alpha},
              {"beta", beta},
              {"gamma", gamma},
              {"lambda", lambda},
              {"c_direct", cmat(direct.entries)},
              {"det_direct", direct.det()},
              {"c_shifts", cmat(shifted.entries)},
              {"det_shifts", shifted.det()},
              {"entangled", is_entangled(shifted)}};
      emit(out, "entangle.json", j.dump(2) + "\n");
    } else if (*app_a) {
      const AppendixACheck chk = appendix_a_check(s1, s2, c12);
      std::printf("numeric   %.10f %+.10fi\n", chk.numeric.real(), chk.numeric.imag());
      std::printf("i c/s1^2  %.10f %+.10fi  residual %.3e\n", chk.analytic.real(),
                  chk.analytic.imag(), chk.residual);
      std::printf("i c/s2^2  %.10f %+.10fi  residual %.3e\n", chk.corrected.real(),
                  chk.corrected.imag(), chk.corrected_residual);
      ojson j{{"sigma1", s1},
              {"sigma2", s2},
              {"c12", c12},
              {"numeric", {chk.numeric.real(), chk.numeric.imag()}},
              {"residual", chk.residual},
              {"corrected_residual", chk.corrected_residual}};
      emit(out, "appendix_a.json", j.dump(2) + "\n");
      return chk.residual <= 1e-6 ? kExitOk : kExitFailure;
    } else if (*val) {
      ValidationOptions opt;
      opt.scenario_dir = scenario_dir;
      if (flip) {
        auto& c = opt.convention;
        c = {-c.im_q, -c.im_p, -c.re, -c.readout};
      }
      const ValidationSummary s = validate_all(opt);
      for (const auto& c : s.criteria) {
        std::printf("%-4s %s  %s: %s  [%.2f s]\n", c.id.c_str(), c.passed ? "PASS" : "FAIL",
                    c.title.c_str(), c.detail.c_str(), c.runtime_s);
      }
      if (out) write_validation(s, *out);
      return s.all_passed() ? kExitOk : kExitFailure;
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
