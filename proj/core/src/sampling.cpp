#include "evoform/sampling.hpp"

#include <random>

namespace evoform {

std::vector<Point> SamplePlan::points(const Chart& chart) const {
  const int n = chart.dimension();
  std::vector<Point> out;
  if (kind == Kind::Grid) {
    std::vector<int> idx(n, 0);
    std::vector<int> lo(n), hi(n);
    for (int a = 0; a < n; ++a) {
      lo[a] = margin_cells;
      hi[a] = chart.resolution(a) - 1 - margin_cells;
      if (hi[a] < lo[a]) throw DomainError("margin exhausts the grid");
      idx[a] = lo[a];
    }
    for (;;) {
      Point p(n);
      for (int a = 0; a < n; ++a)
        p[a] = chart.interval(a).lo + idx[a] * chart.cell_width(a);
      out.push_back(std::move(p));
      int a = n - 1;
      while (a >= 0) {
        if (++idx[a] <= hi[a]) break;
        idx[a] = lo[a];
        --a;
      }
      if (a < 0) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      Point p(n);
      for (int a = 0; a < n; ++a) {
        double m = margin_cells * chart.cell_width(a);
        const Interval& iv = chart.interval(a);
        p[a] = iv.lo + m + unit(rng) * (iv.length() - 2.0 * m);
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace evoform
