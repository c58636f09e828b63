#include "evoform/commutator.hpp"

#include "evoform/multi_index.hpp"

namespace evoform {

CommutatorField::CommutatorField(int source_degree, DifferentialForm coefficients)
    : source_degree_(source_degree), coefficients_(std::move(coefficients)) {
  if (coefficients_.degree() != source_degree_ + 1)
    throw DomainError("commutator coefficients must have degree p+1");
}

Eigen::MatrixXd CommutatorField::matrix_at(const Point& p) const {
  if (source_degree_ != 1)
    throw DomainError("matrix_at is defined for source degree 1");
  const int n = chart()->dimension();
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [idx, field] : coefficients_.entries()) {
    double v = field.evaluate(p);
    K(idx[0], idx[1]) = v;
    K(idx[1], idx[0]) = -v;
  }
  return K;
}

Eigen::MatrixXd CommutatorField::contraction_matrix_at(const Point& p) const {
  const int n = chart()->dimension();
  const int pdeg = source_degree_;
  auto rows = increasing_subsets(n, pdeg);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<int>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int a = 0; a < n; ++a) {
      std::vector<int> idx;
      idx.reserve(pdeg + 1);
      idx.push_back(a);
      idx.insert(idx.end(), rows[r].begin(), rows[r].end());
      int sign = canonicalize(idx);
      if (sign == 0) continue;
      auto it = coefficients_.entries().find(idx);
      if (it == coefficients_.entries().end()) continue;
      M(static_cast<int>(r), a) = sign * it->second.evaluate(p);
    }
  }
  return M;
}

ClosureReport CommutatorField::residual_sweep(double tol, const SamplePlan& plan) const {
  return sweep_max(coefficients_, tol, plan);
}

CommutatorField flat_commutator(const DifferentialForm& w) {
  if (w.degree() != 1) throw DomainError("flat commutator requires a 1-form");
  // K_ab = d_a A_b - d_b A_a, built directly from the coefficient fields.
  const ChartPtr& chart = w.chart();
  const int n = chart->dimension();
  DifferentialForm K(chart, 2);
  for (const auto& [idx, field] : w.entries()) {
    const int b = idx[0];
    for (int a = 0; a < n; ++a) {
      if (a == b) continue;
      K.add_term({a, b}, field.derivative(a));
    }
  }
  return CommutatorField(1, std::move(K));
}

CommutatorField form_commutator(const DifferentialForm& w) {
  if (w.degree() < 1) throw DomainError("commutator requires degree >= 1");
  return CommutatorField(w.degree(), exterior_derivative(w));
}

}  // namespace evoform
