#pragma once

#include <memory>
#include <optional>
#include <string>

#include "evoform/connection.hpp"
#include "evoform/form.hpp"

namespace evoform {

// Balance-law coefficients in the accompanying frame: axis 1 is the
// trajectory coordinate, the rest are normal to it. For p = 1 the energy
// coefficient A_1 and the momentum coefficients A_nu assemble into
// omega = A_mu dxi^mu; for p >= 2 the omega coefficient table is given
// directly; p = 0 carries a single 0-form coefficient.
struct BalanceSystem {
  ChartPtr chart;
  int degree = 1;  // p in 0..3
  std::vector<ScalarField> coefficients;        // p == 1: A_1..A_n
  std::optional<DifferentialForm> omega_table;  // p == 0 or p >= 2
  std::shared_ptr<const Connection> connection;
  std::optional<DifferentialForm> psi;  // degree p-1, optional
  std::string psi_label;                // "action" | "entropy" | "wave function" | ...
};

// The pair (psi, omega) with its chart and optional connection.
struct EvolutionaryRelation {
  DifferentialForm omega;
  std::optional<DifferentialForm> psi;
  std::shared_ptr<const Connection> connection;
  std::string psi_label;

  const ChartPtr& chart() const { return omega.chart(); }
  int degree() const { return omega.degree(); }
};

EvolutionaryRelation build_relation(const BalanceSystem& sys);

enum class Verdict { Identical, Nonidentical };

struct VerdictRecord {
  Verdict verdict = Verdict::Nonidentical;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  Point argmax_point;
  int samples = 0;
  double tol = 0.0;
  bool used_torsion = false;
  bool psi_checked = false;
  double psi_residual = 0.0;
};

// Commutator-based identity check: covariant when a connection with
// entries is present, flat for p = 1 otherwise, d(omega) for p >= 2.
// The p = 0 relation has no commutator; the verdict reduces to the
// state residual when psi is present.
VerdictRecord nonidentity_verdict(const EvolutionaryRelation& rel, double tol,
                                  const SamplePlan& plan);

struct ResidualSummary {
  double max_residual = 0.0;
  double mean_residual = 0.0;
  Point argmax_point;
  std::vector<int> argmax_indices;
  int samples = 0;
};

// Pointwise coefficients of d(psi) - omega over the plan.
ResidualSummary state_residual(const EvolutionaryRelation& rel,
                               const DifferentialForm& candidate_psi,
                               const SamplePlan& plan);

// The commutator field the verdict is based on.
CommutatorField relation_commutator(const EvolutionaryRelation& rel);

}  // namespace evoform
