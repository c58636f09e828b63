#pragma once

#include <map>
#include <optional>
#include <vector>

#include "evoform/sampling.hpp"
#include "evoform/scalar_field.hpp"

namespace evoform {

enum class DerivativeMode { Auto, FiniteDifference };

// Degree-k skew-symmetric form in canonical sparse storage: strictly
// increasing multi-indices -> scalar fields, absent entries are zero.
class DifferentialForm {
 public:
  using Table = std::map<std::vector<int>, ScalarField>;

  DifferentialForm(ChartPtr chart, int degree);

  static DifferentialForm zero(ChartPtr chart, int degree) {
    return DifferentialForm(std::move(chart), degree);
  }
  // The coordinate 1-form dx_axis.
  static DifferentialForm basis_one_form(ChartPtr chart, int axis);

  const ChartPtr& chart() const { return chart_; }
  int degree() const { return degree_; }
  const Table& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Adds `field` to the coefficient at `indices` (any order; signed).
  // Structural zeros are dropped.
  void add_term(std::vector<int> indices, ScalarField field);
  void set_coefficient(std::vector<int> indices, ScalarField field);

  // Signed coefficient value for an arbitrary-order multi-index.
  double coefficient_at(std::vector<int> indices, const Point& p) const;

  // Value on a tuple of vectors: sum of coeff_I * det(minor of directions).
  double apply(const std::vector<Point>& vectors, const Point& p) const;

  DifferentialForm operator+(const DifferentialForm& other) const;
  DifferentialForm scaled(double factor) const;

  // Interior product with a constant vector: degree k-1 form.
  DifferentialForm contract(const std::vector<double>& v) const;

 private:
  ChartPtr chart_;
  int degree_;
  Table entries_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

// d(w). FiniteDifference mode differentiates coefficients by central
// differences with step `fd_step` regardless of backing.
DifferentialForm exterior_derivative(const DifferentialForm& w,
                                     DerivativeMode mode = DerivativeMode::Auto,
                                     double fd_step = 0.0);

struct ClosureReport {
  bool closed = false;
  double max_residual = 0.0;
  Point argmax_point;
  std::vector<int> argmax_indices;
  int samples = 0;
  double tol = 0.0;
};

// Max |coefficient of dw| over the sample plan.
ClosureReport is_closed(const DifferentialForm& w, double tol,
                        const SamplePlan& plan);

// Sup of |dw| evaluated over a fully swept sample set of a precomputed
// derivative; shared by is_closed and the commutator sweeps.
ClosureReport sweep_max(const DifferentialForm& dw, double tol,
                        const SamplePlan& plan);

struct RestrictedClosureReport {
  bool closed = false;
  double max_residual = 0.0;
};

// Evaluates dw on every (deg+1)-tuple of the given directions at `point`.
// Directions must be linearly independent (rank tolerance 1e-10).
RestrictedClosureReport restricted_closure(const DifferentialForm& w,
                                           const std::vector<Point>& directions,
                                           const Point& point, double tol);

// Complementary coefficient arrangement of a 2-form on a 4-D chart, with
// the last axis timelike: (*F)_{cd} = eps_{cdab} eta^{aa} eta^{bb} F_{ab},
// eta = diag(1, 1, 1, -1). This is the convention under which the
// plane-wave field strength passes the divergence-type companion check.
DifferentialForm lorentz_dual_two_form(const DifferentialForm& w);

}  // namespace evoform
