#pragma once

#include <string>
#include <vector>

#include "evoform/report.hpp"

namespace evoform {

// A declared analysis: chart, optional connection, balance system,
// tolerances, sample plan, and cascade configuration.
struct Scenario {
  std::string name;
  std::string description;
  ChartPtr chart;
  BalanceSystem system;
  double closure_tol = 1e-9;
  SamplePlan plan = SamplePlan::grid();
  CascadeConfig cascade;
};

// Validates against the published schema; SchemaError carries the
// JSON-pointer path of the offending field.
Scenario parse_scenario(const nlohmann::json& j, const std::string& base_dir = ".");
Scenario load_scenario(const std::string& path);

// build_relation -> nonidentity_verdict -> cascade_integrate -> classify.
AnalysisReport run_analysis(const Scenario& scenario);

struct ScenarioInfo {
  std::string name;
  std::string description;
  std::string path;
};

// Bundled scenario directory compiled in at build time.
std::string bundled_scenario_dir();

// Bundled scenarios plus any extra directories, sorted by name.
std::vector<ScenarioInfo> list_scenarios(const std::vector<std::string>& extra_dirs = {});

}  // namespace evoform
