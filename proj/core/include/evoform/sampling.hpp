#pragma once

#include <cstdint>
#include <vector>

#include "evoform/chart.hpp"

namespace evoform {

// Where residuals get evaluated. Grid plans sweep the chart's own nodes;
// random plans draw seeded uniform points. `margin_cells` shrinks the box
// by that many cell widths per side so finite differences stay interior.
struct SamplePlan {
  enum class Kind { Grid, Random };
  Kind kind = Kind::Grid;
  int count = 100;          // random only
  std::uint64_t seed = 1;   // random only
  int margin_cells = 0;

  static SamplePlan grid(int margin_cells = 0) {
    SamplePlan p;
    p.kind = Kind::Grid;
    p.margin_cells = margin_cells;
    return p;
  }
  static SamplePlan random(int count, std::uint64_t seed, int margin_cells = 0) {
    SamplePlan p;
    p.kind = Kind::Random;
    p.count = count;
    p.seed = seed;
    p.margin_cells = margin_cells;
    return p;
  }

  std::vector<Point> points(const Chart& chart) const;
};

}  // namespace evoform
