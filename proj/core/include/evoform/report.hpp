#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evoform/classify.hpp"
#include "evoform/degeneracy.hpp"
#include "evoform/serialization.hpp"

namespace evoform {

inline constexpr int kReportSchemaVersion = 1;

struct AnalysisReport {
  std::string scenario_name;
  std::uint64_t seed = 0;
  double tol = 0.0;
  VerdictRecord verdict;
  std::optional<CascadeReport> cascade;
  std::vector<ClassificationRecord> classifications;
};

Json verdict_to_json(const VerdictRecord& rec);
Json cascade_to_json(const CascadeReport& rep);
Json classification_to_json(const ClassificationRecord& rec);

// Stable key order; format "json" or "text". Unknown formats are an error.
std::string emit_report(const AnalysisReport& report, const std::string& format);

}  // namespace evoform
