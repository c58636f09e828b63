#include "evoform/report.hpp"

#include <sstream>

namespace evoform {

namespace {

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (double v : p) out.push_back(v);
  return out;
}

Json tagged_to_json(const TaggedName& t) {
  Json j;
  j["name"] = t.name;
  j["uncertain"] = t.uncertain;
  return j;
}

const char* outcome_name(CascadeOutcome o) {
  switch (o) {
    case CascadeOutcome::GlobalIdentity: return "GLOBAL-IDENTITY";
    case CascadeOutcome::Realized: return "REALIZED";
    case CascadeOutcome::NoRealization: return "NO-REALIZATION";
  }
  return "?";
}

// Reports stay diffable: long sample lists are thinned evenly.
std::vector<RecoveryResult::Sample> thin_samples(
    const std::vector<RecoveryResult::Sample>& samples, std::size_t cap = 25) {
  if (samples.size() <= cap) return samples;
  std::vector<RecoveryResult::Sample> out;
  std::size_t stride = samples.size() / cap;
  for (std::size_t i = 0; i < samples.size(); i += stride) out.push_back(samples[i]);
  return out;
}

}  // namespace

Json verdict_to_json(const VerdictRecord& rec) {
  Json j;
  j["verdict"] = rec.verdict == Verdict::Identical ? "IDENTICAL" : "NONIDENTICAL";
  j["max_residual"] = rec.max_residual;
  j["mean_residual"] = rec.mean_residual;
  j["argmax_point"] = point_to_json(rec.argmax_point);
  j["samples"] = rec.samples;
  j["tol"] = rec.tol;
  j["used_torsion"] = rec.used_torsion;
  if (rec.psi_checked) j["psi_residual"] = rec.psi_residual;
  return j;
}

Json cascade_to_json(const CascadeReport& rep) {
  Json j;
  j["outcome"] = outcome_name(rep.outcome);
  Json steps = Json::array();
  for (const CascadeStep& s : rep.steps) {
    Json step;
    step["k"] = s.k;
    step["locus_size"] = s.locus_size;
    step["pseudostructure_dim"] = s.pseudostructure_dim;
    step["max_residual"] = s.max_residual;
    if (!s.note.empty()) step["note"] = s.note;
    if (!s.state_function_samples.empty()) {
      Json samples = Json::array();
      for (const auto& sample : thin_samples(s.state_function_samples)) {
        Json e;
        e["point"] = point_to_json(sample.point);
        e["value"] = sample.value;
        samples.push_back(std::move(e));
      }
      step["state_function_samples"] = std::move(samples);
    }
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["interpretation_notes"] = rep.interpretation_notes;
  return j;
}

Json classification_to_json(const ClassificationRecord& rec) {
  Json j;
  j["p"] = rec.p;
  j["k"] = rec.k;
  j["n"] = rec.n;
  j["interaction"] = rec.interaction;
  if (rec.no_structure) {
    j["structure"] = nullptr;
  } else {
    j["structure"] = tagged_to_json(rec.structure);
    Json sources = Json::array();
    for (const auto& s : rec.sources) sources.push_back(tagged_to_json(s));
    j["sources"] = std::move(sources);
  }
  j["pseudostructure_dim"] = rec.pseudostructure_dim;
  j["material_particle"] = tagged_to_json(rec.material_particle);
  j["metric_dimension"] = rec.metric_dimension;
  j["metric_built_from"] = rec.metric_built_from;
  return j;
}

std::string emit_report(const AnalysisReport& report, const std::string& format) {
  if (format != "json" && format != "text")
    throw DomainError("unknown report format: " + format);

  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["scenario"] = report.scenario_name;
  j["seed"] = report.seed;
  j["tol"] = report.tol;
  j["verdict"] = verdict_to_json(report.verdict);
  if (report.cascade)
    j["cascade"] = cascade_to_json(*report.cascade);
  else
    j["cascade"] = {{"outcome", "SKIPPED"}, {"steps", Json::array()}};
  Json cls = Json::array();
  for (const auto& rec : report.classifications)
    cls.push_back(classification_to_json(rec));
  j["classifications"] = std::move(cls);

  if (format == "json") return j.dump(2) + "\n";

  std::ostringstream out;
  out << "scenario: " << report.scenario_name << "\n";
  out << "verdict:  " << j["verdict"]["verdict"].get<std::string>()
      << "  (max residual " << report.verdict.max_residual << " over "
      << report.verdict.samples << " samples, tol " << report.verdict.tol << ")\n";
  if (report.cascade) {
    out << "cascade:  " << outcome_name(report.cascade->outcome) << "\n";
    for (const CascadeStep& s : report.cascade->steps) {
      out << "  k=" << s.k << "  locus=" << s.locus_size
          << "  pseudostructure_dim=" << s.pseudostructure_dim
          << "  max_residual=" << s.max_residual;
      if (!s.note.empty()) out << "  (" << s.note << ")";
      out << "\n";
    }
  }
  for (const auto& rec : report.classifications) {
    out << "class:    p=" << rec.p << " k=" << rec.k << " n=" << rec.n << "  "
        << rec.interaction << "  ";
    if (rec.no_structure)
      out << "NO-STRUCTURE";
    else
      out << rec.structure.name << (rec.structure.uncertain ? "?" : "");
    out << "  dim=" << rec.pseudostructure_dim << "\n";
  }
  return out.str();
}

}  // namespace evoform
