#pragma once

// Scenario configuration, orchestration of the exact pipeline next to the
// first-order and analytic paths, and λ-sweeps.

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmcorr/analytic_shifts.hpp"
#include "wmcorr/dynamics.hpp"
#include "wmcorr/entanglement.hpp"
#include "wmcorr/quantum_core.hpp"

namespace wmcorr {

inline constexpr int kSchemaVersion = 1;

enum class PointerKind { gaussian, lg, two_mode_gaussian };

struct PointerConfig {
  PointerKind kind = PointerKind::gaussian;
  int dims = 2;
  /// Empty means the per-kind default grid.
  std::vector<std::size_t> points;
  std::vector<double> extent;
  // gaussian
  Eigen::MatrixXd sigma;
  Eigen::VectorXd mean_q;
  Eigen::VectorXd mean_p;
  Eigen::MatrixXd theta;
  // lg
  int l = 0;
  double lg_sigma = 1.0;
  // two_mode_gaussian
  TwoModeGaussianParams two_mode{0.25, 0.25, 0.0};
};

struct CouplingConfig {
  CMatrix observable;
  int axis = 0;
  Quadrature quadrature = Quadrature::q;
  double strength = 0.0;
  /// Couplings sharing a group are applied as one exponential; groups run
  /// in ascending order.
  int group = 0;
};

struct ReadoutConfig {
  int axis = 0;
  CMatrix observable;
  /// Index into the ascending eigenvalues of `observable`.
  int outcome = 0;
};

struct ScenarioConfig {
  int schema_version = kSchemaVersion;
  std::string id;
  std::string description;
  int dimension = 2;
  CVector pre;
  /// Direct-projection target; absent when `readout` is set.
  std::optional<CVector> post;
  PointerConfig pointer;
  std::vector<CouplingConfig> couplings;
  std::optional<ReadoutConfig> readout;
  std::vector<double> sweep;
};

/// Validates and converts; throws ConfigError naming the offending path.
ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config(const std::filesystem::path& file);
nlohmann::ordered_json to_json(const ScenarioConfig& config);

/// Grid the scenario runs on (explicit or default).
Grid scenario_grid(const PointerConfig& pointer);
PointerWavefunction build_pointer(const PointerConfig& pointer);

struct ShiftRow {
  int axis;
  Quadrature quadrature;
  double initial;
  double final_value;
  double shift;
  double predicted;
  double residual;
};

struct ShiftReport {
  std::string scenario_id;
  double multiplier = 1.0;
  double probability = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  /// Sum of |lambda_k|.
  double total_strength = 0.0;
  std::vector<std::complex<double>> weak_values;
  std::optional<ReadoutShift> readout;
  SignConvention convention;
  std::vector<std::size_t> grid_points;
  std::vector<double> grid_extent;
  std::vector<ShiftRow> rows;
  /// Means of the pointer built by first_order_pointer (q then p per axis).
  std::vector<double> first_order_means;
  /// max |exact mean - first-order mean| over every axis and quadrature.
  double first_order_gap = 0.0;
  /// Not serialized.
  double wall_time_s = 0.0;

  double max_residual() const;
  const ShiftRow& row(int axis, Quadrature q) const;
};

struct RunOptions {
  double multiplier = 1.0;
  SignConvention convention = SignConvention::frozen();
};

ShiftReport run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

struct SweepResult {
  std::vector<ShiftReport> reports;
  std::vector<double> strengths;  // total strength per report
  std::vector<double> residuals;  // max residual per report
  /// Least-squares slope of log(residual) vs log(strength); NaN when any
  /// strength or residual is zero.
  double slope;
};

/// Needs at least 3 multipliers; reports keep input order.
SweepResult run_sweep(const ScenarioConfig& config, const std::vector<double>& multipliers,
                      const SignConvention& convention = SignConvention::frozen());

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Serialization (report.cpp). CSV columns:
// scenario_id,axis,quadrature,initial_mean,final_mean,shift,predicted,residual,lambda1,lambda2,prob
std::string csv_header();
std::string to_csv_rows(const ShiftReport& report);
std::string to_csv(const std::vector<ShiftReport>& reports);
nlohmann::ordered_json to_json(const ShiftReport& report);
nlohmann::ordered_json to_json(const SweepResult& sweep);
/// %.17g
std::string format_number(double v);
void write_text(const std::filesystem::path& file, const std::string& text);

}  // namespace wmcorr
