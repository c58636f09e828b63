#include "evoform/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace evoform {

namespace fs = std::filesystem;

namespace {

void require(bool cond, const std::string& what, const std::string& pointer) {
  if (!cond) throw SchemaError(what, pointer);
}

Point point_from_json(const nlohmann::json& j, int n, const std::string& ptr) {
  require(j.is_array() && static_cast<int>(j.size()) == n,
          "point must list one coordinate per axis", ptr);
  Point p;
  for (const auto& v : j) p.push_back(v.get<double>());
  return p;
}

ScalarField expr_field(const nlohmann::json& j, const ChartPtr& chart,
                       const std::string& ptr) {
  require(j.is_string() || j.is_number(), "expected an expression string", ptr);
  if (j.is_number()) return ScalarField::constant(chart, j.get<double>());
  try {
    return ScalarField::parse(chart, j.get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError(e.what(), ptr);
  }
}

}  // namespace

Scenario parse_scenario(const nlohmann::json& j, const std::string& base_dir) {
  require(j.is_object(), "scenario must be an object", "");
  Scenario sc;
  sc.name = j.value("name", std::string("unnamed"));
  sc.description = j.value("description", std::string());

  require(j.contains("chart"), "scenario requires a chart", "/chart");
  sc.chart = chart_from_json(j["chart"]);
  const int n = sc.chart->dimension();

  require(j.contains("system") && j["system"].is_object(),
          "scenario requires a system object", "/system");
  const auto& sys = j["system"];
  require(sys.contains("p") && sys["p"].is_number_integer(),
          "system requires integer p", "/system/p");
  int p = sys["p"].get<int>();
  require(p >= 0 && p <= 3, "p must be in 0..3", "/system/p");
  require(p <= n, "p must not exceed the chart dimension", "/system/p");

  sc.system.chart = sc.chart;
  sc.system.degree = p;
  if (p == 1) {
    require(sys.contains("coefficients") && sys["coefficients"].is_array() &&
                static_cast<int>(sys["coefficients"].size()) == n,
            "p = 1 requires one coefficient per axis", "/system/coefficients");
    int i = 0;
    for (const auto& c : sys["coefficients"])
      sc.system.coefficients.push_back(
          expr_field(c, sc.chart, "/system/coefficients/" + std::to_string(i++)));
    require(!sys.contains("omega"), "p = 1 uses coefficients, not an omega table",
            "/system/omega");
  } else {
    require(sys.contains("omega"), "p != 1 requires an omega form", "/system/omega");
    try {
      sc.system.omega_table = form_from_json(sys["omega"], sc.chart, base_dir);
    } catch (const SchemaError& e) {
      throw SchemaError(e.what(), "/system/omega" + e.pointer);
    }
    require(sc.system.omega_table->degree() == p,
            "omega degree must equal the declared p", "/system/omega/degree");
  }

  if (sys.contains("psi")) {
    if (sys["psi"].is_object()) {
      sc.system.psi = form_from_json(sys["psi"], sc.chart, base_dir);
    } else {
      DifferentialForm psi(sc.chart, 0);
      psi.set_coefficient({}, expr_field(sys["psi"], sc.chart, "/system/psi"));
      sc.system.psi = std::move(psi);
    }
    require(sc.system.psi->degree() == std::max(p - 1, 0),
            "psi degree must be p - 1", "/system/psi");
  }
  sc.system.psi_label = sys.value("psi_label", std::string());

  if (j.contains("connection") && !j["connection"].is_null())
    sc.system.connection = connection_from_json(j["connection"], sc.chart);

  if (j.contains("tolerance")) {
    require(j["tolerance"].is_object(), "tolerance must be an object", "/tolerance");
    sc.closure_tol = j["tolerance"].value("closure", sc.closure_tol);
  }

  if (j.contains("samples")) {
    const auto& s = j["samples"];
    require(s.is_object() && s.contains("type"), "samples requires a type",
            "/samples/type");
    std::string type = s["type"].get<std::string>();
    if (type == "grid") {
      sc.plan = SamplePlan::grid();
    } else if (type == "random") {
      int count = s.value("count", 100);
      require(count >= 1, "sample count must be positive", "/samples/count");
      sc.plan = SamplePlan::random(count, s.value("seed", std::uint64_t{1}));
    } else {
      throw SchemaError("sample type must be grid or random", "/samples/type");
    }
  }

  sc.cascade.plan = sc.plan;
  sc.cascade.tol = sc.closure_tol;
  if (j.contains("cascade")) {
    const auto& c = j["cascade"];
    require(c.is_object(), "cascade must be an object", "/cascade");
    sc.cascade.trace_step = c.value("step", sc.cascade.trace_step);
    sc.cascade.max_length = c.value("max_length", sc.cascade.max_length);
    require(sc.cascade.trace_step > 0.0, "cascade step must be positive",
            "/cascade/step");
    require(sc.cascade.max_length > 0.0, "cascade max_length must be positive",
            "/cascade/max_length");
    if (c.contains("seeds")) {
      require(c["seeds"].is_array(), "seeds must be an array of points",
              "/cascade/seeds");
      int i = 0;
      for (const auto& s : c["seeds"])
        sc.cascade.seeds.push_back(
            point_from_json(s, n, "/cascade/seeds/" + std::to_string(i++)));
    }
    if (c.contains("base"))
      sc.cascade.base_point = point_from_json(c["base"], n, "/cascade/base");
    if (c.contains("tol")) sc.cascade.tol = c["tol"].get<double>();
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open scenario file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), "");
  }
  return parse_scenario(j, fs::path(path).parent_path().string());
}

AnalysisReport run_analysis(const Scenario& scenario) {
  AnalysisReport report;
  report.scenario_name = scenario.name;
  report.seed = scenario.plan.seed;
  report.tol = scenario.closure_tol;

  EvolutionaryRelation rel = build_relation(scenario.system);
  report.verdict = nonidentity_verdict(rel, scenario.closure_tol, scenario.plan);

  if (rel.degree() >= 1) {
    report.cascade = cascade_integrate(rel, scenario.cascade);
    const int n = scenario.chart->dimension();
    const int p = rel.degree();
    if (report.cascade->outcome != CascadeOutcome::NoRealization && p <= 3) {
      for (const CascadeStep& s : report.cascade->steps) {
        if (s.k > p || s.k > n || n > 3) continue;
        report.classifications.push_back(
            ClassificationTable::builtin().classify(p, s.k, n));
      }
    }
  }
  return report;
}

std::string bundled_scenario_dir() {
#ifdef EVOFORM_BUNDLED_SCENARIO_DIR
  return EVOFORM_BUNDLED_SCENARIO_DIR;
#else
  return "data/scenarios";
#endif
}

std::vector<ScenarioInfo> list_scenarios(const std::vector<std::string>& extra_dirs) {
  std::vector<std::string> dirs = {bundled_scenario_dir()};
  dirs.insert(dirs.end(), extra_dirs.begin(), extra_dirs.end());
  std::vector<ScenarioInfo> out;
  for (const std::string& dir : dirs) {
    if (!fs::is_directory(dir)) continue;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() != ".json") continue;
      try {
        std::ifstream in(entry.path());
        nlohmann::json j;
        in >> j;
        out.push_back({j.value("name", entry.path().stem().string()),
                       j.value("description", std::string()),
                       entry.path().string()});
      } catch (...) {
        out.push_back({entry.path().stem().string(), "(unreadable)",
                       entry.path().string()});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ScenarioInfo& a, const ScenarioInfo& b) { return a.name < b.name; });
  return out;
}

}  // namespace evoform
