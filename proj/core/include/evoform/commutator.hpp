#pragma once

#include <Eigen/Dense>

#include "evoform/form.hpp"

namespace evoform {

// Skew coefficient field of degree p+1 obtained from a degree-p form.
// For p = 1 this is the matrix K_ab = d_a A_b - d_b A_a (plus the torsion
// contraction when built through a connection).
class CommutatorField {
 public:
  CommutatorField(int source_degree, DifferentialForm coefficients);

  const ChartPtr& chart() const { return coefficients_.chart(); }
  int source_degree() const { return source_degree_; }
  const DifferentialForm& coefficients() const { return coefficients_; }

  // p = 1 only: the skew n x n matrix K(point).
  Eigen::MatrixXd matrix_at(const Point& p) const;

  // General contraction map M with (iota_v K)_J = sum_a M(J, a) v_a,
  // rows indexed by increasing p-subsets. Null vectors of M are the
  // degeneracy directions.
  Eigen::MatrixXd contraction_matrix_at(const Point& p) const;

  // Max |entry| over the sample plan.
  ClosureReport residual_sweep(double tol, const SamplePlan& plan) const;

 private:
  int source_degree_;
  DifferentialForm coefficients_;
};

// Eq.-style flat commutator of a 1-form: K_ab from coefficient derivatives
// only. Coefficients coincide with exterior_derivative(w) entry-for-entry
// under the (a < b) ordering convention.
CommutatorField flat_commutator(const DifferentialForm& w);

// Commutator of a degree-p form through d; the degree-(p+1) coefficients.
CommutatorField form_commutator(const DifferentialForm& w);

}  // namespace evoform
