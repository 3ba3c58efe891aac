#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "wmcorr/scenario.hpp"

namespace wmcorr {

using ojson = nlohmann::ordered_json;

namespace {

// Recomputes the residual and insists on bit equality with the stored one.
double checked_residual(const ShiftReport& rep, const ShiftRow& r) {
  const double again = std::abs(r.shift - r.predicted);
  if (std::memcmp(&again, &r.residual, sizeof(double)) != 0) {
    throw InvalidParams(rep.scenario_id + ": stored residual does not match |shift - predicted|");
  }
  return again;
}

ojson number_or_null(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_header() {
  return "scenario_id,axis,quadrature,initial_mean,final_mean,shift,predicted,residual,"
         "lambda1,lambda2,prob\n";
}

std::string to_csv_rows(const ShiftReport& rep) {
  std::string out;
  for (const auto& r : rep.rows) {
    const double res = checked_residual(rep, r);
    out += rep.scenario_id + ',' + std::to_string(r.axis) + ',' + to_string(r.quadrature) + ',' +
           format_number(r.initial) + ',' + format_number(r.final_value) + ',' +
           format_number(r.shift) + ',' + format_number(r.predicted) + ',' + format_number(res) +
           ',' + format_number(rep.lambda1) + ',' + format_number(rep.lambda2) + ',' +
           format_number(rep.probability) + '\n';
  }
  return out;
}

std::string to_csv(const std::vector<ShiftReport>& reports) {
  std::string out = csv_header();
  for (const auto& r : reports) out += to_csv_rows(r);
  return out;
}

ojson to_json(const ShiftReport& rep) {
  ojson j;
  j["scenario_id"] = rep.scenario_id;
  j["multiplier"] = rep.multiplier;
  j["probability"] = rep.probability;
  j["lambda1"] = rep.lambda1;
  j["lambda2"] = rep.lambda2;
  j["total_strength"] = rep.total_strength;
  ojson wv = ojson::array();
  for (auto z : rep.weak_values) wv.push_back({z.real(), z.imag()});
  j["weak_values"] = wv;
  if (rep.readout) {
    j["readout"] = {{"axis", rep.readout->axis}, {"eigenvalue", rep.readout->eigenvalue}};
  } else {
    j["readout"] = nullptr;
  }
  j["convention"] = {{"im_q", rep.convention.im_q},
                     {"im_p", rep.convention.im_p},
                     {"re", rep.convention.re},
                     {"readout", rep.convention.readout}};
  j["grid"] = {{"points", rep.grid_points}, {"extent", rep.grid_extent}};
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    rows.push_back({{"axis", r.axis},
                    {"quadrature", to_string(r.quadrature)},
                    {"initial_mean", r.initial},
                    {"final_mean", r.final_value},
                    {"shift", r.shift},
                    {"predicted", r.predicted},
                    {"residual", checked_residual(rep, r)},
                    {"first_order_mean", rep.first_order_means.at(i)}});
  }
  j["rows"] = rows;
  j["max_residual"] = rep.max_residual();
  j["first_order_gap"] = rep.first_order_gap;
  return j;
}

ojson to_json(const SweepResult& sweep) {
  ojson j;
  ojson reps = ojson::array();
  for (const auto& r : sweep.reports) reps.push_back(to_json(r));
  j["reports"] = reps;
  j["strengths"] = sweep.strengths;
  j["max_residuals"] = sweep.residuals;
  j["slope"] = number_or_null(sweep.slope);
  return j;
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError(file.string(), "cannot write file");
  out << text;
  if (!out) throw ConfigError(file.string(), "write failed");
}

}  // namespace wmcorr
