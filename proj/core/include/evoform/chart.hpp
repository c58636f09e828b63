#pragma once

#include <memory>
#include <string>
#include <vector>

#include "evoform/error.hpp"

namespace evoform {

using Point = std::vector<double>;

constexpr int kMaxDimension = 8;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
};

// Coordinate chart: a box [lo,hi]^n with named axes and a per-axis sample
// count used by grid-backed fields and grid sample plans.
class Chart {
 public:
  Chart(int dimension, std::vector<Interval> box, std::vector<int> resolution,
        std::vector<std::string> names = {});

  static std::shared_ptr<const Chart> make(int dimension,
                                           std::vector<Interval> box,
                                           std::vector<int> resolution,
                                           std::vector<std::string> names = {});

  // Unit box [0,1]^n, resolution r per axis, default names x1..xn.
  static std::shared_ptr<const Chart> unit_box(int dimension, int resolution = 11);

  int dimension() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int axis) const { return names_.at(axis); }
  const Interval& interval(int axis) const { return box_.at(axis); }
  int resolution(int axis) const { return resolution_.at(axis); }

  // Axis index of a coordinate name, or -1.
  int axis_of(const std::string& name) const;

  double cell_width(int axis) const {
    return box_.at(axis).length() / (resolution_.at(axis) - 1);
  }

  bool contains(const Point& p, double margin = 0.0) const;
  void require_point(const Point& p, double margin = 0.0) const;

 private:
  int dim_;
  std::vector<Interval> box_;
  std::vector<int> resolution_;
  std::vector<std::string> names_;
};

using ChartPtr = std::shared_ptr<const Chart>;

inline void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a.get() != b.get()) throw DomainError("chart mismatch");
}

}  // namespace evoform
