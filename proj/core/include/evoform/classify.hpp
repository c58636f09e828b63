#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evoform/error.hpp"

namespace evoform {

// A name whose table cell carries the paper-style trailing "?".
struct TaggedName {
  std::string name;
  bool uncertain = false;
};

struct ClassificationRecord {
  int p = 0;
  int k = 0;
  int n = 0;
  std::string interaction;
  // Empty cells are meaningful: no_structure is set and `structure` empty.
  bool no_structure = false;
  TaggedName structure;
  std::vector<TaggedName> sources;
  int pseudostructure_dim = 0;  // n + 1 - k
  TaggedName material_particle;
  int metric_dimension = 0;     // the table's N row
  std::string metric_built_from;
};

// The (p, k, n) lookup table, shipped as data/classification_table.json
// and compiled in as the default.
class ClassificationTable {
 public:
  static const ClassificationTable& builtin();
  static ClassificationTable from_json_text(const std::string& text);

  // Bounds: 0 <= k <= p <= 3, k <= n <= 3. Column index is read as
  // simultaneously p and n; the cell lookup uses n.
  ClassificationRecord classify(int p, int k, int n) const;

  const std::string& interaction_for(int k) const;

 private:
  struct Cell {
    TaggedName structure;
    std::vector<TaggedName> sources;
  };
  std::map<int, std::string> interactions_;        // k -> name
  std::map<std::pair<int, int>, Cell> cells_;      // (k, column)
  std::map<int, TaggedName> material_particles_;   // column
  std::map<int, std::pair<int, std::string>> metric_;  // column -> (N, built_from)
};

}  // namespace evoform
