#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evoform/chart.hpp"
#include "evoform/expression.hpp"

namespace evoform {

// Row-major sample grid over the chart's domain box (last axis fastest).
struct GridData {
  std::vector<int> shape;
  std::vector<double> values;

  // CSV: first line comma-separated axis sizes, then values row-major.
  static GridData load_csv(std::istream& in);
  static GridData load_csv_file(const std::string& path);
};

// Scalar field on a chart. Three backings:
//   expression — analytic evaluation and symbolic differentiation;
//   grid       — multilinear interpolation, central-difference derivatives
//                with step = cell width;
//   callable   — derived fields (sums, finite-difference derivatives).
class ScalarField {
 public:
  using Fn = std::function<double(const Point&)>;

  ScalarField() = default;

  static ScalarField from_expression(ChartPtr chart, Expression expr);
  static ScalarField parse(ChartPtr chart, const std::string& text);
  static ScalarField constant(ChartPtr chart, double value);
  static ScalarField from_grid(ChartPtr chart, GridData grid);
  static ScalarField from_callable(ChartPtr chart, Fn fn, double fd_step);

  const ChartPtr& chart() const { return chart_; }
  bool valid() const { return chart_ != nullptr; }

  // Pure; throws DomainError outside the box.
  double evaluate(const Point& p) const;

  // Analytic for expressions, central difference otherwise.
  // Grid mode requires the point at least one step from the boundary.
  double partial(int axis, const Point& p) const;

  // Forced second-order central difference with explicit step, any backing.
  double fd_partial(int axis, const Point& p, double h) const;

  // The partial derivative as a field (symbolic for expressions,
  // finite-difference callable otherwise).
  ScalarField derivative(int axis) const;

  ScalarField operator+(const ScalarField& other) const;
  ScalarField operator*(const ScalarField& other) const;
  ScalarField scaled(double factor) const;

  bool is_expression() const { return expr_.has_value(); }
  const Expression& expression() const;

  // Structural zero (constant-0 expression); drives sparse form storage.
  bool is_structurally_zero() const;

  // Finite-difference step associated with this field (grid cell width or
  // callable step); 0 for expressions.
  double fd_step(int axis) const;

 private:
  ChartPtr chart_;
  std::optional<Expression> expr_;
  std::shared_ptr<const GridData> grid_;
  Fn fn_;
  double callable_step_ = 0.0;

  double grid_interpolate(const Point& p) const;
};

}  // namespace evoform
