#include <cmath>

#include <gtest/gtest.h>

#include "wmcorr/scenario.hpp"
#include "wmcorr/validation.hpp"

using namespace wmcorr;
using json = nlohmann::json;

namespace {

const std::filesystem::path kDir = WMCORR_TEST_SCENARIOS;

json minimal() {
  return json::parse(R"({
    "schema_version": 1,
    "id": "t",
    "system": {"dimension": 2, "pre": [1, 1], "post": [0, 1]},
    "pointer": {"kind": "gaussian", "sigma": [[1, 0], [0, 1]], "grid": {"points": 64, "extent": 8}},
    "couplings": [{"observable": "pauli_y", "axis": 0, "quadrature": "q", "strength": 0.05}]
  })");
}

std::string error_path(const json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(Config, BundledCorpusParsesAndRoundTrips) {
  const auto files = scenario_files(kDir);
  ASSERT_GE(files.size(), 10u);
  for (const auto& f : files) {
    const ScenarioConfig c = load_config(f);
    EXPECT_EQ(f.stem().string(), c.id);
    const auto once = to_json(c);
    const auto twice = to_json(parse_config(json::parse(once.dump())));
    EXPECT_EQ(once.dump(), twice.dump()) << f;
  }
}

TEST(Config, RejectsUnknownKeysWithPath) {
  json d = minimal();
  d["extra"] = 1;
  EXPECT_EQ(error_path(d), "/extra");
  d = minimal();
  d["couplings"][0]["strenght"] = 0.1;
  EXPECT_EQ(error_path(d), "/couplings/0/strenght");
  d = minimal();
  d["pointer"]["grid"]["spacing"] = 0.1;
  EXPECT_EQ(error_path(d), "/pointer/grid/spacing");
}

TEST(Config, SchemaViolations) {
  json d = minimal();
  d["schema_version"] = 2;
  EXPECT_EQ(error_path(d), "/schema_version");
  d = minimal();
  d["system"]["pre"] = json::array({1, 1, 1});
  EXPECT_EQ(error_path(d), "/system/pre");
  d = minimal();
  d["couplings"][0]["observable"] = json::parse("[[0, 1], [0, 0]]");
  EXPECT_EQ(error_path(d), "/couplings/0/observable");
  d = minimal();
  d["couplings"][0]["observable"] = "projector_7";
  EXPECT_EQ(error_path(d), "/couplings/0/observable");
  d = minimal();
  d["couplings"][0]["axis"] = 2;
  EXPECT_EQ(error_path(d), "/couplings/0/axis");
  d = minimal();
  d["couplings"][0]["quadrature"] = "x";
  EXPECT_EQ(error_path(d), "/couplings/0/quadrature");
  d = minimal();
  d["pointer"]["grid"]["points"] = 48;
  EXPECT_EQ(error_path(d), "/pointer/grid");
  d = minimal();
  d["pointer"]["sigma"] = json::parse("[[1, 2], [2, 1]]");
  EXPECT_EQ(error_path(d), "/pointer/sigma");
  d = minimal();
  d["pointer"]["kind"] = "hermite";
  EXPECT_EQ(error_path(d), "/pointer/kind");
  d = minimal();
  d["readout"] = {{"axis", 1}, {"observable", "projector_1"}, {"outcome", 1}};
  EXPECT_EQ(error_path(d), "/system/post");  // both post and readout
  d = minimal();
  d["couplings"].push_back({{"observable", "pauli_x"}, {"axis", 1}, {"quadrature", "p"},
                            {"strength", 0.1}, {"group", 0}});
  EXPECT_EQ(error_path(d), "/couplings/1/quadrature");
  EXPECT_THROW(load_config(kDir / "missing.json"), ConfigError);
}

TEST(Config, ComplexEntriesAndBuiltins) {
  json d = minimal();
  d["system"]["pre"] = json::parse("[1, [0.5, -0.5]]");
  d["couplings"][0]["observable"] = json::parse("[[0, [1, -1]], [[1, 1], 0]]");
  const ScenarioConfig c = parse_config(d);
  EXPECT_EQ(c.pre[1], cplx(0.5, -0.5));
  EXPECT_EQ(c.couplings[0].observable(0, 1), cplx(1, -1));
  EXPECT_EQ(c.couplings[0].group, 0);
}

TEST(RunScenario, JozsaBaselineMagnitude) {
  // |dq1| = 2 lambda Im(A)_w var(q1) = 0.1 for Aw = i, lambda = 0.05.
  const ShiftReport r = run_scenario(load_config(kDir / "jozsa_baseline.json"));
  EXPECT_NEAR(std::abs(r.row(0, Quadrature::q).shift), 0.1, 3 * 0.05 * 0.05);
}

TEST(RunScenario, SeqCorrQ3Magnitude) {
  // |dq3| = 2 lambda1 Im(A1)_w corr(q1, q3) = 0.03.
  const ShiftReport r = run_scenario(load_config(kDir / "seq_corr_q3.json"));
  EXPECT_NEAR(std::abs(r.row(2, Quadrature::q).shift), 0.03, 3 * 0.05 * 0.05);
  EXPECT_EQ(r.lambda2, 0.0);
}

TEST(RunScenario, DeterministicSerialization) {
  const ScenarioConfig c = load_config(kDir / "single_corr.json");
  const ShiftReport a = run_scenario(c), b = run_scenario(c);
  EXPECT_EQ(to_csv({a}), to_csv({b}));
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(RunScenario, CsvShapeAndPrecision) {
  const ShiftReport r = run_scenario(load_config(kDir / "zero_coupling.json"));
  const std::string csv = to_csv({r});
  EXPECT_EQ(csv.rfind(csv_header(), 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 4);
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_number(r.probability)), r.probability);
  // wall time never reaches the files
  EXPECT_EQ(to_json(r).dump().find("wall"), std::string::npos);
}

TEST(RunScenario, TamperedResidualRejected) {
  ShiftReport r = run_scenario(load_config(kDir / "calibration_single.json"));
  r.rows[0].residual = std::nextafter(r.rows[0].residual, 1.0);
  EXPECT_THROW(to_csv({r}), InvalidParams);
  EXPECT_THROW(to_json(r), InvalidParams);
}

TEST(RunScenario, OrthogonalPairRefused) {
  json d = minimal();
  d["system"]["pre"] = json::array({1, 0});
  EXPECT_THROW(run_scenario(parse_config(d)), NearOrthogonalPostselection);
}

TEST(RunScenario, PostselectionFailureNamesScenario) {
  // Overlap 1e-7 passes the weak-value floor but leaves P(post) ~ 1e-14.
  json d = minimal();
  d["system"]["pre"] = json::array({1, 1e-7});
  d["couplings"][0]["strength"] = 0.0;
  try {
    run_scenario(parse_config(d));
    FAIL() << "expected PostselectionFailed";
  } catch (const PostselectionFailed& e) {
    EXPECT_NE(std::string(e.what()).find("t: "), std::string::npos) << e.what();
  }
}

TEST(Sweep, ZeroCouplingResidualsVanish) {
  const SweepResult s = run_sweep(load_config(kDir / "zero_coupling.json"), {2, 1, 0.5});
  for (double r : s.residuals) EXPECT_LE(r, 1e-9);
  EXPECT_TRUE(std::isnan(s.slope));
  EXPECT_EQ(to_json(s)["slope"], nullptr);
}

TEST(Sweep, JozsaBaselineSlope) {
  const SweepResult s = run_sweep(load_config(kDir / "jozsa_baseline.json"), {2, 1, 0.5});
  EXPECT_NEAR(s.slope, 2.0, 0.3);
  ASSERT_EQ(s.reports.size(), 3u);
  EXPECT_DOUBLE_EQ(s.reports[0].multiplier, 2.0);  // input order kept
  EXPECT_THROW(run_sweep(load_config(kDir / "jozsa_baseline.json"), {1, 2}), InvalidParams);
}

TEST(Validation, FlippedConventionFailsCalibration) {
  SignConvention flipped = SignConvention::frozen();
  flipped.re = -flipped.re;
  EXPECT_FALSE(criterion_calibration(flipped).passed);
  EXPECT_TRUE(criterion_calibration(SignConvention::frozen()).passed);
}
