#pragma once

// Acceptance suite behind `wmcorr validate`. Every tolerance lives here.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmcorr/analytic_shifts.hpp"
#include "wmcorr/scenario.hpp"

namespace wmcorr {

struct CriterionResult {
  std::string id;     // "C0" .. "C10"
  std::string title;
  bool passed = false;
  std::string detail;
  nlohmann::ordered_json data;
  /// Console only; never serialized.
  double runtime_s = 0.0;
  /// 0 when the criterion has no time budget.
  double runtime_limit_s = 0.0;
};

struct ValidationOptions {
  std::filesystem::path scenario_dir;  // empty: the bundled corpus
  /// Convention the predictions are compared under; C0 checks it against
  /// the oracle calibration.
  SignConvention convention = SignConvention::frozen();
};

struct ValidationSummary {
  std::vector<CriterionResult> criteria;
  /// Every bundled scenario at multiplier 1, filename order.
  std::vector<ShiftReport> scenario_reports;
  bool all_passed() const;
};

std::filesystem::path bundled_scenario_dir();
/// *.json files of `dir` in filename order.
std::vector<std::filesystem::path> scenario_files(const std::filesystem::path& dir);

CriterionResult criterion_calibration(const SignConvention& conv);
CriterionResult criterion_lg_law();
CriterionResult criterion_single_wm(const std::filesystem::path& dir, const SignConvention& conv);
CriterionResult criterion_sequential_wm(const std::filesystem::path& dir, const SignConvention& conv);
CriterionResult criterion_jozsa_reduction(const std::filesystem::path& dir, const SignConvention& conv);
CriterionResult criterion_real_weak_value(const std::filesystem::path& dir, const SignConvention& conv);
CriterionResult criterion_displacement_invariance();
CriterionResult criterion_entanglement(const SignConvention& conv);
CriterionResult criterion_appendix_a();
CriterionResult criterion_oracle_cross_check(const std::vector<ShiftReport>& reports);
CriterionResult criterion_determinism(const std::filesystem::path& dir, const SignConvention& conv);

/// Runs C0..C10. Throws ConfigError for unreadable scenarios.
ValidationSummary validate_all(const ValidationOptions& options = {});

/// validation.json, validation.csv, scenarios.csv, scenarios.json.
void write_validation(const ValidationSummary& summary, const std::filesystem::path& out_dir);

}  // namespace wmcorr
