#include <doctest.h>

#include <fstream>
#include <sstream>

#include "evoform/classify.hpp"
#include "evoform/report.hpp"

using namespace evoform;

namespace {

// Independent transcription of the lookup table, cell = (k, column).
struct GoldenCell {
  int k;
  int column;
  const char* structure;
  std::vector<const char*> sources;
};
const std::vector<GoldenCell> kGolden = {
    {3, 3, "graviton", {"electron", "proton", "neutron", "photon"}},
    {2, 2, "photon2", {"electron", "proton", "neutrino"}},
    {2, 3, "photon3", {}},
    {1, 1, "neutrino1", {"electron", "quanta"}},
    {1, 2, "neutrino2", {}},
    {1, 3, "neutrino3", {}},
    {0, 0, "quanta0", {"quarks?"}},
    {0, 1, "quanta1", {}},
    {0, 2, "quanta2", {}},
    {0, 3, "quanta3", {}},
};

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("interaction names by degree") {
  const auto& t = ClassificationTable::builtin();
  CHECK(t.interaction_for(0) == "strong");
  CHECK(t.interaction_for(1) == "weak");
  CHECK(t.interaction_for(2) == "electromagnetic");
  CHECK(t.interaction_for(3) == "gravitation");
}

TEST_CASE("golden table, cell for cell") {
  const auto& t = ClassificationTable::builtin();
  for (const GoldenCell& cell : kGolden) {
    // the cell depends on (k, n) only; p = k is always a valid probe
    ClassificationRecord r = t.classify(cell.k, cell.k, cell.column);
    CHECK_FALSE(r.no_structure);
    std::string expect_name = cell.structure;
    bool expect_uncertain = false;
    if (!expect_name.empty() && expect_name.back() == '?') {
      expect_uncertain = true;
      expect_name.pop_back();
    }
    CHECK(r.structure.name == expect_name);
    CHECK(r.structure.uncertain == expect_uncertain);
    REQUIRE(r.sources.size() == cell.sources.size());
    for (std::size_t i = 0; i < cell.sources.size(); ++i) {
      std::string src = cell.sources[i];
      bool unc = !src.empty() && src.back() == '?';
      if (unc) src.pop_back();
      CHECK(r.sources[i].name == src);
      CHECK(r.sources[i].uncertain == unc);
    }
  }
}

TEST_CASE("empty cells are explicit no-structure records") {
  // the lookup reports blanks instead of erroring; probe a sparse table
  ClassificationTable t = ClassificationTable::from_json_text(R"({
    "interactions": { "0": "strong", "1": "weak",
                      "2": "electromagnetic", "3": "gravitation" },
    "cells": [ { "k": 1, "column": 1, "structure": "neutrino1", "sources": [] } ],
    "material_particles": { "1": "proton" },
    "metric_structure": { "1": { "N": 2, "built_from": "time + 1 coordinate" } }
  })");
  ClassificationRecord hit = t.classify(1, 1, 1);
  CHECK_FALSE(hit.no_structure);
  ClassificationRecord miss = t.classify(2, 1, 2);
  CHECK(miss.no_structure);
  CHECK(miss.structure.name.empty());
  CHECK(miss.interaction == "weak");
  CHECK(miss.pseudostructure_dim == 2);
}

TEST_CASE("material particles and metric rows") {
  const auto& t = ClassificationTable::builtin();
  ClassificationRecord r0 = t.classify(0, 0, 0);
  CHECK(r0.material_particle.name == "electron");
  CHECK_FALSE(r0.material_particle.uncertain);
  CHECK(r0.metric_dimension == 1);
  CHECK(r0.metric_built_from == "time");

  ClassificationRecord r3 = t.classify(3, 3, 3);
  CHECK(r3.material_particle.name == "deuteron");
  CHECK(r3.material_particle.uncertain);
  CHECK(r3.metric_dimension == 4);
  CHECK(r3.metric_built_from == "time + 3 coordinates");
}

TEST_CASE("spot checks from the table") {
  const auto& t = ClassificationTable::builtin();
  ClassificationRecord g = t.classify(3, 3, 3);
  CHECK(g.interaction == "gravitation");
  CHECK(g.structure.name == "graviton");
  CHECK(g.pseudostructure_dim == 1);

  ClassificationRecord ph = t.classify(2, 2, 2);
  CHECK(ph.interaction == "electromagnetic");
  CHECK(ph.structure.name == "photon2");
  CHECK(ph.pseudostructure_dim == 1);

  ClassificationRecord w = t.classify(2, 1, 2);
  CHECK(w.interaction == "weak");
  CHECK(w.structure.name == "neutrino2");

  ClassificationRecord q = t.classify(1, 0, 0);
  CHECK(q.interaction == "strong");
  CHECK(q.structure.name == "quanta0");
  CHECK(q.pseudostructure_dim == 1);  // n + 1 - k = 0 + 1 - 0
}

TEST_CASE("dimension law holds on every valid record") {
  const auto& t = ClassificationTable::builtin();
  for (int p = 0; p <= 3; ++p)
    for (int k = 0; k <= p; ++k)
      for (int n = k; n <= 3; ++n)
        CHECK(t.classify(p, k, n).pseudostructure_dim == n + 1 - k);
}

TEST_CASE("range violations are reported") {
  const auto& t = ClassificationTable::builtin();
  CHECK_THROWS_AS(t.classify(1, 2, 2), DomainError);  // k > p
  CHECK_THROWS_AS(t.classify(4, 0, 0), DomainError);
  CHECK_THROWS_AS(t.classify(2, -1, 0), DomainError);
  CHECK_THROWS_AS(t.classify(2, 2, 1), DomainError);  // n < k
  CHECK_THROWS_AS(t.classify(2, 2, 4), DomainError);
}

TEST_CASE("builtin table equals the shipped data file") {
  std::ifstream in(std::string(EVOFORM_DATA_DIR) + "/classification_table.json");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  ClassificationTable file_table = ClassificationTable::from_json_text(buf.str());
  const auto& builtin = ClassificationTable::builtin();
  for (int p = 0; p <= 3; ++p)
    for (int k = 0; k <= p; ++k)
      for (int n = k; n <= 3; ++n) {
        Json a = classification_to_json(builtin.classify(p, k, n));
        Json b = classification_to_json(file_table.classify(p, k, n));
        CHECK(a == b);
      }
}

TEST_CASE("report emission") {
  AnalysisReport rep;
  rep.scenario_name = "unit";
  rep.tol = 1e-9;
  rep.verdict.verdict = Verdict::Identical;
  std::string json_text = emit_report(rep, "json");
  Json parsed = Json::parse(json_text);
  CHECK(parsed["schema_version"] == kReportSchemaVersion);
  CHECK(parsed["scenario"] == "unit");
  CHECK(parsed["verdict"]["verdict"] == "IDENTICAL");
  CHECK(parsed["cascade"]["outcome"] == "SKIPPED");

  std::string text = emit_report(rep, "text");
  CHECK(text.find("IDENTICAL") != std::string::npos);

  CHECK_THROWS_AS(emit_report(rep, "xml"), DomainError);
}

}  // TEST_SUITE
