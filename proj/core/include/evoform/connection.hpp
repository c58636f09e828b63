#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "evoform/commutator.hpp"
#include "evoform/scalar_field.hpp"

namespace evoform {

// Torsionful connection: user-declared coefficients G^sigma_{beta alpha}
// with zero default. The antisymmetric part in (beta, alpha) is the
// torsion that enters the covariant commutator.
class Connection {
 public:
  explicit Connection(ChartPtr chart) : chart_(std::move(chart)) {}

  const ChartPtr& chart() const { return chart_; }

  void set(int sigma, int beta, int alpha, ScalarField field);
  // Zero field when absent.
  const ScalarField* find(int sigma, int beta, int alpha) const;
  double gamma(int sigma, int beta, int alpha, const Point& p) const;

  // T^sigma_{beta alpha} = G^s_{ba} - G^s_{ab}, antisymmetric in (b, a).
  double torsion(int sigma, int beta, int alpha, const Point& p) const;
  // Full array at a point, index order [sigma][beta][alpha].
  std::vector<std::vector<std::vector<double>>> torsion_components(const Point& p) const;

  bool empty() const { return entries_.empty(); }

  const std::map<std::tuple<int, int, int>, ScalarField>& entries() const {
    return entries_;
  }

 private:
  ChartPtr chart_;
  std::map<std::tuple<int, int, int>, ScalarField> entries_;

  void check_index(int i) const;
};

// Eq.-(11)-style commutator of a 1-form on a deforming manifold:
// K_ab = (d_a A_b - d_b A_a) + (G^s_{ba} - G^s_{ab}) A_s.
// Reduces to flat_commutator when the connection is symmetric.
CommutatorField covariant_commutator(const DifferentialForm& w, const Connection& c);

}  // namespace evoform
