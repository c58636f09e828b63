#include "evoform/scalar_field.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace evoform {

GridData GridData::load_csv(std::istream& in) {
  GridData g;
  std::string line;
  if (!std::getline(in, line)) throw DomainError("empty grid CSV");
  {
    std::istringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) {
      int size = std::stoi(cell);
      if (size < 2) throw DomainError("grid axis size must be >= 2");
      g.shape.push_back(size);
    }
  }
  std::size_t expected = 1;
  for (int s : g.shape) expected *= static_cast<std::size_t>(s);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      if (cell.find_first_not_of(" \t\r") == std::string::npos) continue;
      g.values.push_back(std::stod(cell));
    }
  }
  if (g.values.size() != expected)
    throw DomainError("grid CSV has " + std::to_string(g.values.size()) +
                      " values, expected " + std::to_string(expected));
  return g;
}

GridData GridData::load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open grid CSV: " + path);
  return load_csv(in);
}

ScalarField ScalarField::from_expression(ChartPtr chart, Expression expr) {
  ScalarField f;
  f.chart_ = std::move(chart);
  f.expr_ = std::move(expr);
  return f;
}

ScalarField ScalarField::parse(ChartPtr chart, const std::string& text) {
  Expression e = Expression::parse(text, *chart);
  return from_expression(std::move(chart), std::move(e));
}

ScalarField ScalarField::constant(ChartPtr chart, double value) {
  return from_expression(std::move(chart), Expression::constant(value));
}

ScalarField ScalarField::from_grid(ChartPtr chart, GridData grid) {
  if (static_cast<int>(grid.shape.size()) != chart->dimension())
    throw DomainError("grid rank does not match chart dimension");
  ScalarField f;
  f.chart_ = std::move(chart);
  f.grid_ = std::make_shared<const GridData>(std::move(grid));
  return f;
}

ScalarField ScalarField::from_callable(ChartPtr chart, Fn fn, double fd_step) {
  ScalarField f;
  f.chart_ = std::move(chart);
  f.fn_ = std::move(fn);
  f.callable_step_ = fd_step;
  return f;
}

double ScalarField::grid_interpolate(const Point& p) const {
  const GridData& g = *grid_;
  const int n = chart_->dimension();
  // Per-axis cell index and weight.
  std::vector<int> idx(n);
  std::vector<double> w(n);
  for (int a = 0; a < n; ++a) {
    const Interval& iv = chart_->interval(a);
    double t = (p[a] - iv.lo) / iv.length() * (g.shape[a] - 1);
    int i = static_cast<int>(std::floor(t));
    if (i < 0) i = 0;
    if (i > g.shape[a] - 2) i = g.shape[a] - 2;
    idx[a] = i;
    w[a] = t - i;
  }
  // Multilinear blend over the 2^n cell corners.
  double sum = 0.0;
  const int corners = 1 << n;
  for (int c = 0; c < corners; ++c) {
    double weight = 1.0;
    std::size_t flat = 0;
    for (int a = 0; a < n; ++a) {
      int bit = (c >> a) & 1;
      weight *= bit ? w[a] : (1.0 - w[a]);
      flat = flat * static_cast<std::size_t>(g.shape[a]) +
             static_cast<std::size_t>(idx[a] + bit);
    }
    sum += weight * g.values[flat];
  }
  return sum;
}

double ScalarField::evaluate(const Point& p) const {
  chart_->require_point(p);
  if (expr_) return expr_->evaluate(p);
  if (grid_) return grid_interpolate(p);
  return fn_(p);
}

double ScalarField::fd_step(int axis) const {
  if (expr_) return 0.0;
  if (grid_) return chart_->interval(axis).length() / (grid_->shape[axis] - 1);
  return callable_step_;
}

double ScalarField::fd_partial(int axis, const Point& p, double h) const {
  Point lo = p, hi = p;
  lo[axis] -= h;
  hi[axis] += h;
  return (evaluate(hi) - evaluate(lo)) / (2.0 * h);
}

double ScalarField::partial(int axis, const Point& p) const {
  if (axis < 0 || axis >= chart_->dimension())
    throw DomainError("axis out of range");
  if (expr_) return expr_->derivative(axis).evaluate(p);
  double h = fd_step(axis);
  if (h <= 0.0) h = chart_->cell_width(axis);
  chart_->require_point(p);
  const Interval& iv = chart_->interval(axis);
  if (p[axis] - h < iv.lo || p[axis] + h > iv.hi)
    throw DomainError("point too close to the boundary for a finite-difference derivative");
  return fd_partial(axis, p, h);
}

ScalarField ScalarField::derivative(int axis) const {
  if (axis < 0 || axis >= chart_->dimension())
    throw DomainError("axis out of range");
  if (expr_)
    return from_expression(chart_, expr_->derivative(axis));
  ScalarField self = *this;
  double h = fd_step(axis);
  if (h <= 0.0) h = chart_->cell_width(axis);
  return from_callable(
      chart_, [self, axis, h](const Point& p) { return self.fd_partial(axis, p, h); },
      h);
}

ScalarField ScalarField::operator+(const ScalarField& other) const {
  require_same_chart(chart_, other.chart_);
  if (expr_ && other.expr_)
    return from_expression(chart_, *expr_ + *other.expr_);
  ScalarField a = *this, b = other;
  double h = std::max(callable_step_, other.callable_step_);
  return from_callable(
      chart_, [a, b](const Point& p) { return a.evaluate(p) + b.evaluate(p); }, h);
}

ScalarField ScalarField::operator*(const ScalarField& other) const {
  require_same_chart(chart_, other.chart_);
  if (expr_ && other.expr_)
    return from_expression(chart_, *expr_ * *other.expr_);
  ScalarField a = *this, b = other;
  double h = std::max(callable_step_, other.callable_step_);
  return from_callable(
      chart_, [a, b](const Point& p) { return a.evaluate(p) * b.evaluate(p); }, h);
}

ScalarField ScalarField::scaled(double factor) const {
  if (expr_)
    return from_expression(chart_, Expression::constant(factor) * *expr_);
  ScalarField a = *this;
  return from_callable(
      chart_, [a, factor](const Point& p) { return factor * a.evaluate(p); },
      callable_step_);
}

const Expression& ScalarField::expression() const {
  if (!expr_) throw DomainError("field has no expression backing");
  return *expr_;
}

bool ScalarField::is_structurally_zero() const {
  return expr_ && expr_->is_zero();
}

}  // namespace evoform
