#include "evoform/chart.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace evoform {

Chart::Chart(int dimension, std::vector<Interval> box, std::vector<int> resolution,
             std::vector<std::string> names)
    : dim_(dimension),
      box_(std::move(box)),
      resolution_(std::move(resolution)),
      names_(std::move(names)) {
  if (dim_ < 1 || dim_ > kMaxDimension)
    throw DomainError("chart dimension must be in 1.." + std::to_string(kMaxDimension));
  if (static_cast<int>(box_.size()) != dim_)
    throw DomainError("domain box size does not match dimension");
  if (static_cast<int>(resolution_.size()) != dim_)
    throw DomainError("resolution size does not match dimension");
  for (int a = 0; a < dim_; ++a) {
    if (!(box_[a].length() > 0.0))
      throw DomainError("interval on axis " + std::to_string(a + 1) +
                        " must have positive length");
    if (resolution_[a] < 2)
      throw DomainError("resolution on axis " + std::to_string(a + 1) +
                        " must be >= 2");
  }
  if (names_.empty()) {
    for (int a = 1; a <= dim_; ++a) names_.push_back("x" + std::to_string(a));
  }
  if (static_cast<int>(names_.size()) != dim_)
    throw DomainError("coordinate name count does not match dimension");
  std::set<std::string> unique(names_.begin(), names_.end());
  if (static_cast<int>(unique.size()) != dim_)
    throw DomainError("coordinate names must be unique");
}

std::shared_ptr<const Chart> Chart::make(int dimension, std::vector<Interval> box,
                                         std::vector<int> resolution,
                                         std::vector<std::string> names) {
  return std::make_shared<const Chart>(dimension, std::move(box),
                                       std::move(resolution), std::move(names));
}

std::shared_ptr<const Chart> Chart::unit_box(int dimension, int resolution) {
  std::vector<Interval> box(dimension, Interval{0.0, 1.0});
  std::vector<int> res(dimension, resolution);
  return make(dimension, std::move(box), std::move(res));
}

int Chart::axis_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return -1;
  return static_cast<int>(it - names_.begin());
}

bool Chart::contains(const Point& p, double margin) const {
  if (static_cast<int>(p.size()) != dim_) return false;
  for (int a = 0; a < dim_; ++a) {
    if (!std::isfinite(p[a])) return false;
    if (p[a] < box_[a].lo + margin || p[a] > box_[a].hi - margin) return false;
  }
  return true;
}

void Chart::require_point(const Point& p, double margin) const {
  if (static_cast<int>(p.size()) != dim_)
    throw DomainError("point dimension does not match chart");
  if (!contains(p, margin)) throw DomainError("point outside domain box");
}

}  // namespace evoform
