#include "evoform/classify.hpp"

#include <json.hpp>

#include "evoform/table_data.hpp"

namespace evoform {

namespace {

TaggedName tag(const std::string& raw) {
  if (!raw.empty() && raw.back() == '?')
    return {raw.substr(0, raw.size() - 1), true};
  return {raw, false};
}

}  // namespace

ClassificationTable ClassificationTable::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ClassificationTable t;
  for (const auto& [key, value] : j.at("interactions").items())
    t.interactions_[std::stoi(key)] = value.get<std::string>();
  for (const auto& cell : j.at("cells")) {
    Cell c;
    c.structure = tag(cell.at("structure").get<std::string>());
    for (const auto& s : cell.at("sources"))
      c.sources.push_back(tag(s.get<std::string>()));
    t.cells_[{cell.at("k").get<int>(), cell.at("column").get<int>()}] = std::move(c);
  }
  for (const auto& [key, value] : j.at("material_particles").items())
    t.material_particles_[std::stoi(key)] = tag(value.get<std::string>());
  for (const auto& [key, value] : j.at("metric_structure").items())
    t.metric_[std::stoi(key)] = {value.at("N").get<int>(),
                                 value.at("built_from").get<std::string>()};
  return t;
}

const ClassificationTable& ClassificationTable::builtin() {
  static const ClassificationTable table =
      from_json_text(kClassificationTableJson);
  return table;
}

const std::string& ClassificationTable::interaction_for(int k) const {
  auto it = interactions_.find(k);
  if (it == interactions_.end())
    throw DomainError("no interaction for k = " + std::to_string(k));
  return it->second;
}

ClassificationRecord ClassificationTable::classify(int p, int k, int n) const {
  if (k < 0 || p > 3 || k > p)
    throw DomainError("classification requires 0 <= k <= p <= 3, got k = " +
                      std::to_string(k) + ", p = " + std::to_string(p));
  if (n < k || n > 3)
    throw DomainError("classification requires k <= n <= 3, got n = " +
                      std::to_string(n) + " for k = " + std::to_string(k));
  ClassificationRecord rec;
  rec.p = p;
  rec.k = k;
  rec.n = n;
  rec.interaction = interaction_for(k);
  rec.pseudostructure_dim = n + 1 - k;
  auto cell = cells_.find({k, n});
  if (cell == cells_.end()) {
    rec.no_structure = true;
  } else {
    rec.structure = cell->second.structure;
    rec.sources = cell->second.sources;
  }
  if (auto it = material_particles_.find(n); it != material_particles_.end())
    rec.material_particle = it->second;
  if (auto it = metric_.find(n); it != metric_.end()) {
    rec.metric_dimension = it->second.first;
    rec.metric_built_from = it->second.second;
  }
  return rec;
}

}  // namespace evoform
