#include "evoform/evolution.hpp"

#include <cmath>

namespace evoform {

EvolutionaryRelation build_relation(const BalanceSystem& sys) {
  if (sys.degree < 0 || sys.degree > 3)
    throw DomainError("degree p must be in 0..3");
  if (sys.degree > sys.chart->dimension())
    throw DomainError("degree p exceeds chart dimension");

  DifferentialForm omega(sys.chart, sys.degree);
  if (sys.degree == 1) {
    if (sys.omega_table)
      throw DomainError("p = 1 systems declare coefficients, not a table");
    if (static_cast<int>(sys.coefficients.size()) != sys.chart->dimension())
      throw DomainError("p = 1 requires one coefficient per axis");
    for (int a = 0; a < sys.chart->dimension(); ++a)
      omega.add_term({a}, sys.coefficients[a]);
  } else {
    if (!sys.omega_table)
      throw DomainError("p != 1 systems require the omega coefficient table");
    if (sys.omega_table->degree() != sys.degree)
      throw DomainError("omega table degree does not match declared p");
    omega = *sys.omega_table;
  }

  EvolutionaryRelation rel{std::move(omega), sys.psi, sys.connection, sys.psi_label};
  // p = 0 keeps a 0-form psi; the relation degenerates to psi = omega.
  const int psi_degree = sys.degree == 0 ? 0 : sys.degree - 1;
  if (rel.psi && rel.psi->degree() != psi_degree)
    throw DomainError("psi degree must be p - 1");
  return rel;
}

CommutatorField relation_commutator(const EvolutionaryRelation& rel) {
  if (rel.degree() < 1)
    throw DomainError("the p = 0 relation has no commutator");
  if (rel.degree() == 1) {
    if (rel.connection && !rel.connection->empty())
      return covariant_commutator(rel.omega, *rel.connection);
    return flat_commutator(rel.omega);
  }
  return form_commutator(rel.omega);
}

namespace {

ResidualSummary sweep_form(const DifferentialForm& f, const SamplePlan& plan) {
  ResidualSummary s;
  SamplePlan effective = plan;
  for (const auto& [idx, field] : f.entries())
    if (!field.is_expression() && effective.margin_cells < 1)
      effective.margin_cells = 1;
  std::vector<Point> pts = effective.points(*f.chart());
  s.samples = static_cast<int>(pts.size());
  double sum = 0.0;
  for (const Point& p : pts) {
    double local = 0.0;
    for (const auto& [idx, field] : f.entries()) {
      double v = std::abs(field.evaluate(p));
      if (v > local) local = v;
      if (v > s.max_residual) {
        s.max_residual = v;
        s.argmax_point = p;
        s.argmax_indices = idx;
      }
    }
    sum += local;
  }
  if (s.samples > 0) s.mean_residual = sum / s.samples;
  return s;
}

}  // namespace

ResidualSummary state_residual(const EvolutionaryRelation& rel,
                               const DifferentialForm& candidate_psi,
                               const SamplePlan& plan) {
  if (rel.degree() == 0) {
    // d psi is read as psi itself: the relation degenerates to psi = omega.
    if (candidate_psi.degree() != 0)
      throw DomainError("p = 0 expects a 0-form candidate");
    return sweep_form(candidate_psi + rel.omega.scaled(-1.0), plan);
  }
  if (candidate_psi.degree() != rel.degree() - 1)
    throw DomainError("candidate psi degree must be deg(omega) - 1");
  DifferentialForm diff = exterior_derivative(candidate_psi) + rel.omega.scaled(-1.0);
  return sweep_form(diff, plan);
}

VerdictRecord nonidentity_verdict(const EvolutionaryRelation& rel, double tol,
                                  const SamplePlan& plan) {
  VerdictRecord rec;
  rec.tol = tol;
  rec.used_torsion = rel.connection && !rel.connection->empty();

  if (rel.degree() == 0) {
    rec.verdict = Verdict::Identical;
    if (rel.psi) {
      ResidualSummary s = state_residual(rel, *rel.psi, plan);
      rec.psi_checked = true;
      rec.psi_residual = s.max_residual;
      rec.max_residual = s.max_residual;
      rec.mean_residual = s.mean_residual;
      rec.argmax_point = s.argmax_point;
      rec.samples = s.samples;
      if (s.max_residual >= tol) rec.verdict = Verdict::Nonidentical;
    }
    return rec;
  }

  CommutatorField K = relation_commutator(rel);
  ResidualSummary s = sweep_form(K.coefficients(), plan);
  rec.max_residual = s.max_residual;
  rec.mean_residual = s.mean_residual;
  rec.argmax_point = s.argmax_point;
  rec.samples = s.samples;
  rec.verdict = s.max_residual < tol ? Verdict::Identical : Verdict::Nonidentical;

  if (rel.psi) {
    ResidualSummary ps = state_residual(rel, *rel.psi, plan);
    rec.psi_checked = true;
    rec.psi_residual = ps.max_residual;
    if (ps.max_residual >= tol) rec.verdict = Verdict::Nonidentical;
  }
  return rec;
}

}  // namespace evoform
