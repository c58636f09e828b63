// evoform: analyze balance-law scenarios, check form closure, classify
// realized structures, list bundled scenarios.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "evoform/scenario.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFileNotFound = 2;
constexpr int kExitSchema = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitRange = 5;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw evoform::DomainError("cannot write output file: " + out_path);
  out << text;
}

std::string resolve_scenario_path(const std::string& arg,
                                  const std::vector<std::string>& dirs) {
  if (fs::is_regular_file(arg)) return arg;
  std::vector<std::string> all = {evoform::bundled_scenario_dir()};
  all.insert(all.end(), dirs.begin(), dirs.end());
  for (const std::string& dir : all) {
    fs::path candidate = fs::path(dir) / (arg + ".json");
    if (fs::is_regular_file(candidate)) return candidate.string();
  }
  return {};
}

int cmd_analyze(const std::string& scenario_arg, const std::string& out_path,
                double tol_override, std::uint64_t seed_override,
                const std::string& format, const std::vector<std::string>& dirs) {
  std::string path = resolve_scenario_path(scenario_arg, dirs);
  if (path.empty()) {
    std::cerr << "error: scenario not found: " << scenario_arg << "\n";
    return kExitFileNotFound;
  }
  try {
    evoform::Scenario sc = evoform::load_scenario(path);
    if (tol_override > 0.0) {
      sc.closure_tol = tol_override;
      sc.cascade.tol = tol_override;
    }
    if (seed_override != 0) {
      sc.plan.seed = seed_override;
      sc.cascade.plan.seed = seed_override;
    }
    evoform::AnalysisReport report = evoform::run_analysis(sc);
    write_output(evoform::emit_report(report, format), out_path);
    return kExitOk;
  } catch (const evoform::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const evoform::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

int cmd_check_closure(const std::string& file, double tol, const std::string& format,
                      const std::string& out_path) {
  if (!fs::is_regular_file(file)) {
    std::cerr << "error: form file not found: " << file << "\n";
    return kExitFileNotFound;
  }
  try {
    std::ifstream in(file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw evoform::SchemaError(std::string("invalid JSON: ") + e.what(), "");
    }
    if (!j.contains("chart"))
      throw evoform::SchemaError("form file requires a chart", "/chart");
    evoform::ChartPtr chart = evoform::chart_from_json(j["chart"]);
    if (!j.contains("form"))
      throw evoform::SchemaError("form file requires a form", "/form");
    evoform::DifferentialForm w = evoform::form_from_json(
        j["form"], chart, fs::path(file).parent_path().string());

    evoform::SamplePlan plan = evoform::SamplePlan::grid();
    evoform::ClosureReport rep = evoform::is_closed(w, tol, plan);

    evoform::Json out;
    out["schema_version"] = evoform::kReportSchemaVersion;
    out["closed"] = rep.closed;
    out["max_residual"] = rep.max_residual;
    out["samples"] = rep.samples;
    out["tol"] = rep.tol;
    if (!rep.argmax_point.empty()) {
      evoform::Json pt = evoform::Json::array();
      for (double v : rep.argmax_point) pt.push_back(v);
      out["argmax_point"] = std::move(pt);
    }
    if (chart->dimension() == 4 && w.degree() == 2) {
      // Divergence-type companion: d of the complementary arrangement,
      // labelled as the dual-form check (last axis timelike).
      evoform::ClosureReport dual =
          evoform::is_closed(evoform::lorentz_dual_two_form(w), tol, plan);
      out["dual_check"] = {{"convention", "eta=diag(1,1,1,-1), axis 4 timelike"},
                           {"closed", dual.closed},
                           {"max_residual", dual.max_residual}};
    }
    std::string text;
    if (format == "json") {
      text = out.dump(2) + "\n";
    } else if (format == "text") {
      text = std::string(rep.closed ? "CLOSED" : "NOT CLOSED") +
             "  max_residual=" + std::to_string(rep.max_residual) + "\n";
      if (out.contains("dual_check"))
        text += std::string("dual:  ") +
                (out["dual_check"]["closed"].get<bool>() ? "CLOSED" : "NOT CLOSED") +
                "\n";
    } else {
      throw evoform::DomainError("unknown report format: " + format);
    }
    write_output(text, out_path);
    return kExitOk;
  } catch (const evoform::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const evoform::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

int cmd_classify(int p, int k, int n, const std::string& format) {
  try {
    evoform::ClassificationRecord rec =
        evoform::ClassificationTable::builtin().classify(p, k, n);
    if (format == "json") {
      std::cout << evoform::classification_to_json(rec).dump(2) << "\n";
    } else {
      std::cout << rec.interaction << "  ";
      if (rec.no_structure)
        std::cout << "NO-STRUCTURE";
      else
        std::cout << rec.structure.name << (rec.structure.uncertain ? "?" : "");
      std::cout << "  pseudostructure_dim=" << rec.pseudostructure_dim;
      if (!rec.sources.empty()) {
        std::cout << "  sources:";
        for (const auto& s : rec.sources)
          std::cout << " " << s.name << (s.uncertain ? "?" : "");
      }
      std::cout << "\n";
    }
    return kExitOk;
  } catch (const evoform::DomainError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return kExitRange;
  }
}

int cmd_scenarios(const std::vector<std::string>& dirs) {
  for (const auto& info : evoform::list_scenarios(dirs))
    std::cout << info.name << "  -  " << info.description << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evoform: evolutionary relations, commutators, pseudostructures"};
  app.require_subcommand(1);

  std::string scenario_arg, out_path, format = "json", form_file;
  double tol = 0.0, closure_tol = 1e-9;
  std::uint64_t seed = 0;
  std::vector<std::string> scenario_dirs;
  int p = 0, k = 0, n = 0;

  auto* analyze = app.add_subcommand("analyze", "Run a scenario analysis");
  analyze->add_option("scenario", scenario_arg, "Scenario file or bundled name")
      ->required();
  analyze->add_option("--out", out_path, "Write the report to a file");
  analyze->add_option("--tol", tol, "Override the closure tolerance");
  analyze->add_option("--seed", seed, "Override the random-sample seed");
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--scenario-dir", scenario_dirs, "Extra scenario directories");

  auto* check = app.add_subcommand("check-closure", "Closure check for a form file");
  check->add_option("form", form_file, "Form file (chart + form JSON)")->required();
  check->add_option("--tol", closure_tol, "Closure tolerance");
  check->add_option("--out", out_path, "Write the report to a file");
  check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* classify = app.add_subcommand("classify", "Look up the (p, k, n) table");
  classify->add_option("--p", p)->required();
  classify->add_option("--k", k)->required();
  classify->add_option("--n", n)->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* scenarios = app.add_subcommand("scenarios", "List available scenarios");
  scenarios->add_option("--scenario-dir", scenario_dirs, "Extra scenario directories");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed())
    return cmd_analyze(scenario_arg, out_path, tol, seed, format, scenario_dirs);
  if (check->parsed()) return cmd_check_closure(form_file, closure_tol, format, out_path);
  if (classify->parsed()) return cmd_classify(p, k, n, format);
  return cmd_scenarios(scenario_dirs);
}
