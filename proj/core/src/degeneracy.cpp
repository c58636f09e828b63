#include "evoform/degeneracy.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace evoform {

namespace {

constexpr double kAngleCosLimit = 0.86602540378443864676;  // cos 30 deg

std::vector<Eigen::VectorXd> null_basis(const Eigen::MatrixXd& M, double tol) {
  const int n = static_cast<int>(M.cols());
  std::vector<Eigen::VectorXd> basis;
  if (M.cwiseAbs().maxCoeff() == 0.0) {
    for (int a = 0; a < n; ++a) basis.push_back(Eigen::VectorXd::Unit(n, a));
    return basis;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  for (int i = 0; i < n; ++i) {
    double s = i < sv.size() ? sv(i) : 0.0;
    if (s < tol * smax) basis.push_back(svd.matrixV().col(i));
  }
  return basis;
}

Eigen::VectorXd to_eigen(const Point& p) {
  Eigen::VectorXd v(static_cast<int>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) v(static_cast<int>(i)) = p[i];
  return v;
}

Point to_point(const Eigen::VectorXd& v) {
  Point p(static_cast<std::size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) p[static_cast<std::size_t>(i)] = v(i);
  return p;
}

// Null direction continuously re-oriented against `prev` (empty at the seed:
// lexicographic tie-break, which for a vanishing commutator is axis 1).
std::optional<Eigen::VectorXd> direction_at(const CommutatorField& K, const Point& x,
                                            const Eigen::VectorXd* prev, double tol) {
  Eigen::MatrixXd M = K.contraction_matrix_at(x);
  auto basis = null_basis(M, tol);
  if (basis.empty()) return std::nullopt;
  Eigen::VectorXd d;
  if (prev == nullptr) {
    d = basis[0];
  } else {
    d = Eigen::VectorXd::Zero(basis[0].size());
    for (const auto& b : basis) d += b.dot(*prev) * b;
    if (d.norm() < 1e-8) d = basis[0];
  }
  d.normalize();
  if (prev != nullptr && d.dot(*prev) < 0.0) d = -d;
  return d;
}

// Cumulative integral of samples at uniform spacing h; 3-point segment
// rule, so the quadrature error matches the tracer's order budget.
std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
  const std::size_t m = f.size();
  std::vector<double> I(m, 0.0);
  for (std::size_t k = 1; k < m; ++k) {
    double seg;
    if (k + 1 < m)
      seg = h / 12.0 * (5.0 * f[k - 1] + 8.0 * f[k] - f[k + 1]);
    else if (k >= 2)
      seg = h / 12.0 * (-f[k - 2] + 8.0 * f[k - 1] + 5.0 * f[k]);
    else
      seg = h / 2.0 * (f[k - 1] + f[k]);
    I[k] = I[k - 1] + seg;
  }
  return I;
}

double contraction_residual(const CommutatorField& K, const Point& x,
                            const Eigen::VectorXd& d) {
  return (K.contraction_matrix_at(x) * d).cwiseAbs().maxCoeff();
}

double sq_dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

double eval_zero_form(const DifferentialForm& f, const Point& p) {
  auto it = f.entries().find(std::vector<int>{});
  return it == f.entries().end() ? 0.0 : it->second.evaluate(p);
}

// Second-order increment of the psi candidate over a short straight hop,
// used when chaining values across near-coincident (not identical) points.
double one_form_increment(const DifferentialForm& omega, const Point& from,
                          const Point& to) {
  Point mid(from.size());
  Point delta(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    mid[i] = 0.5 * (from[i] + to[i]);
    delta[i] = to[i] - from[i];
  }
  return omega.apply({delta}, mid);
}

// omega . tangent samples along a trace.
std::vector<double> tangential_samples(const DifferentialForm& omega, const Trace& tr) {
  std::vector<double> f(tr.points.size());
  for (std::size_t i = 0; i < tr.points.size(); ++i)
    f[i] = omega.apply({tr.directions[i]}, tr.points[i]);
  return f;
}

}  // namespace

std::vector<Point> degeneracy_directions(const CommutatorField& K, const Point& point,
                                         double tol) {
  K.chart()->require_point(point);
  auto basis = null_basis(K.contraction_matrix_at(point), tol);
  std::vector<Point> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(to_point(b));
  return out;
}

LocusReport degeneracy_locus(const CommutatorField& K, const SamplePlan& plan,
                             double tol) {
  LocusReport rep;
  rep.tol = tol;
  const int n = K.chart()->dimension();
  std::vector<Point> pts = plan.points(*K.chart());
  rep.sampled = static_cast<int>(pts.size());
  std::vector<int> dims(pts.size());
  int min_dim = n;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    dims[i] = static_cast<int>(null_basis(K.contraction_matrix_at(pts[i]), tol).size());
    min_dim = std::min(min_dim, dims[i]);
  }
  if (K.source_degree() == 1)
    rep.generic_null_dim = (n % 2 == 1) ? 1 : 0;
  else
    rep.generic_null_dim = min_dim;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (dims[i] > rep.generic_null_dim)
      rep.points.push_back({pts[i], dims[i]});
  return rep;
}

Pseudostructure trace_pseudostructure(const CommutatorField& K, const Point& seed,
                                      double h, double max_length, double tol) {
  if (h <= 0.0 || max_length <= 0.0)
    throw DomainError("trace step and length must be positive");
  const ChartPtr& chart = K.chart();
  chart->require_point(seed);

  auto seed_basis = null_basis(K.contraction_matrix_at(seed), tol);
  if (seed_basis.empty())
    throw NumericError("seed point has no null direction");

  Trace tr;
  tr.seed = seed;
  tr.step = h;

  Eigen::VectorXd x = to_eigen(seed);
  Eigen::VectorXd d = *direction_at(K, seed, nullptr, tol);
  tr.points.push_back(seed);
  tr.params.push_back(0.0);
  tr.directions.push_back(to_point(d));
  tr.max_residual = contraction_residual(K, seed, d);

  const long steps = static_cast<long>(std::floor(max_length / h + 0.5));
  tr.stop = TraceStop::MaxLength;
  for (long i = 1; i <= steps; ++i) {
    // Classic fourth-order stages over the re-oriented direction field.
    auto stage = [&](const Eigen::VectorXd& xs,
                     const Eigen::VectorXd& ref) -> std::optional<Eigen::VectorXd> {
      Point ps = to_point(xs);
      if (!chart->contains(ps)) return std::nullopt;
      return direction_at(K, ps, &ref, tol);
    };
    auto d1 = stage(x, d);
    if (!d1) { tr.stop = TraceStop::Boundary; break; }
    auto d2 = stage(x + 0.5 * h * *d1, *d1);
    auto d3 = d2 ? stage(x + 0.5 * h * *d2, *d2) : std::nullopt;
    auto d4 = d3 ? stage(x + h * *d3, *d3) : std::nullopt;
    if (!d2 || !d3 || !d4) { tr.stop = TraceStop::Boundary; break; }
    Eigen::VectorXd xn = x + h / 6.0 * (*d1 + 2.0 * *d2 + 2.0 * *d3 + *d4);
    Point pn = to_point(xn);
    if (!chart->contains(pn)) { tr.stop = TraceStop::Boundary; break; }
    auto dn = direction_at(K, pn, &d, tol);
    if (!dn) { tr.stop = TraceStop::NullLost; break; }
    Eigen::MatrixXd M = K.contraction_matrix_at(pn);
    double residual = (M * *dn).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    if (residual > tol * scale) {
      tr.stop = TraceStop::NullLost;
      break;
    }
    if (dn->dot(d) < kAngleCosLimit) {
      tr.stop = TraceStop::AngleJump;
      tr.integrability_ok = false;
      break;
    }
    x = xn;
    d = *dn;
    tr.points.push_back(pn);
    tr.params.push_back(static_cast<double>(i) * h);
    tr.directions.push_back(to_point(d));
    tr.max_residual = std::max(tr.max_residual, residual);
  }

  Pseudostructure ps;
  ps.chart = chart;
  ps.tangent_dim = static_cast<int>(seed_basis.size());
  ps.max_residual = tr.max_residual;
  ps.curves.push_back(std::move(tr));
  return ps;
}

RecoveryResult recover_state_function(const EvolutionaryRelation& rel,
                                      const Pseudostructure& ps, const Point& base,
                                      double tol) {
  if (rel.degree() != 1)
    throw DomainError("state-function recovery is implemented for p = 1");
  RecoveryResult out;
  if (ps.curves.empty()) return out;

  double near = 1e-9;
  for (const Trace& tr : ps.curves) near = std::max(near, 1.5 * tr.step);
  const double near_sq = near * near;

  // Per-curve cumulative integrals of omega . tangent.
  std::vector<std::vector<double>> integrals;
  for (const Trace& tr : ps.curves)
    integrals.push_back(cumulative_integral(tangential_samples(rel.omega, tr), tr.step));

  struct Anchor {
    const Point* point;
    double value;
  };
  std::vector<Anchor> anchors;
  anchors.push_back({&base, 0.0});
  std::vector<bool> assigned(ps.curves.size(), false);
  std::vector<std::vector<double>> values(ps.curves.size());

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < ps.curves.size(); ++c) {
      if (assigned[c]) continue;
      const Trace& tr = ps.curves[c];
      // First node matching an existing anchor fixes the whole curve.
      std::optional<std::pair<std::size_t, double>> hit;
      for (std::size_t j = 0; j < tr.points.size() && !hit; ++j)
        for (const Anchor& a : anchors)
          if (sq_dist(tr.points[j], *a.point) <= near_sq) {
            hit = {j, a.value + one_form_increment(rel.omega, *a.point,
                                                   tr.points[j])};
            break;
          }
      if (!hit) continue;
      values[c].resize(tr.points.size());
      for (std::size_t i = 0; i < tr.points.size(); ++i)
        values[c][i] = hit->second + integrals[c][i] - integrals[c][hit->first];
      // Loop defect: nodes that land on already-anchored points, compared
      // after transporting the anchor value over the residual gap.
      for (std::size_t i = 0; i < tr.points.size(); ++i)
        for (const Anchor& a : anchors)
          if (sq_dist(tr.points[i], *a.point) <= near_sq) {
            double expect =
                a.value + one_form_increment(rel.omega, *a.point, tr.points[i]);
            out.loop_defect =
                std::max(out.loop_defect, std::abs(values[c][i] - expect));
          }
      for (std::size_t i = 0; i < tr.points.size(); ++i)
        anchors.push_back({&tr.points[i], values[c][i]});
      assigned[c] = true;
      progress = true;
    }
  }

  for (std::size_t c = 0; c < ps.curves.size(); ++c) {
    if (!assigned[c]) {
      ++out.disconnected_curves;
      continue;
    }
    ++out.connected_curves;
    for (std::size_t i = 0; i < ps.curves[c].points.size(); ++i)
      out.samples.push_back({ps.curves[c].points[i], values[c][i],
                             static_cast<int>(c)});
  }
  out.valid = out.connected_curves > 0 && out.loop_defect < tol;
  return out;
}

PseudostructureVerdict identical_on_pseudostructure(const EvolutionaryRelation& rel,
                                                    const Pseudostructure& ps,
                                                    double tol) {
  if (rel.degree() != 1)
    throw DomainError("pseudostructure identity check is implemented for p = 1");
  PseudostructureVerdict v;
  if (rel.psi) {
    v.psi_known = true;
    for (std::size_t c = 0; c < ps.curves.size(); ++c) {
      const Trace& tr = ps.curves[c];
      std::vector<double> I =
          cumulative_integral(tangential_samples(rel.omega, tr), tr.step);
      double psi0 = eval_zero_form(*rel.psi, tr.points[0]);
      for (std::size_t i = 0; i < tr.points.size(); ++i) {
        double lhs = eval_zero_form(*rel.psi, tr.points[i]) - psi0;
        v.max_residual = std::max(v.max_residual, std::abs(lhs - I[i]));
      }
    }
  } else {
    // No candidate psi: path-consistency of the omega integral.
    RecoveryResult rec =
        recover_state_function(rel, ps, ps.curves.front().seed, tol);
    v.max_residual = rec.loop_defect;
    v.loops_available = rec.connected_curves > 1 || ps.curves.size() == 1;
  }
  v.identical = v.max_residual < tol;
  return v;
}

namespace {

SamplePlan plan_with_margin(const SamplePlan& plan, const DifferentialForm& f) {
  SamplePlan eff = plan;
  for (const auto& [idx, field] : f.entries())
    if (!field.is_expression() && eff.margin_cells < 1) eff.margin_cells = 1;
  return eff;
}

}  // namespace

CascadeReport cascade_integrate(const EvolutionaryRelation& rel,
                                const CascadeConfig& config) {
  const int p = rel.degree();
  if (p < 1) throw DomainError("cascade requires p >= 1");
  const int n = rel.chart()->dimension();

  CascadeReport report;
  report.interpretation_notes = {
      "reentry: each step re-derives the commutator of the restricted form",
      "dual-form closure is checked as direction-field continuity (30 deg/step)",
  };

  if (p == 1) {
    CommutatorField K = relation_commutator(rel);
    SamplePlan plan = plan_with_margin(config.plan, K.coefficients());
    std::vector<Point> pts = plan.points(*rel.chart());

    ClosureReport global = sweep_max(K.coefficients(), config.tol, plan);

    long degenerate = 0;
    std::vector<Point> degenerate_points;
    for (const Point& q : pts) {
      if (!degeneracy_directions(K, q, config.tol).empty()) {
        ++degenerate;
        degenerate_points.push_back(q);
      }
    }

    if (degenerate == 0) {
      CascadeStep s;
      s.k = 1;
      s.locus_size = 0;
      s.pseudostructure_dim = n;
      s.max_residual = global.max_residual;
      s.note = "no degenerate points in the sample plan";
      report.steps.push_back(std::move(s));
      report.outcome = CascadeOutcome::NoRealization;
      return report;
    }

    // Seeds: configured ones that admit a null direction, else drawn from
    // the degenerate point set.
    std::vector<Point> seeds;
    for (const Point& s : config.seeds)
      if (rel.chart()->contains(s) && !degeneracy_directions(K, s, config.tol).empty())
        seeds.push_back(s);
    if (seeds.empty()) {
      std::size_t stride =
          std::max<std::size_t>(1, degenerate_points.size() /
                                       std::max(1, config.max_locus_seeds));
      for (std::size_t i = 0;
           i < degenerate_points.size() && static_cast<int>(seeds.size()) < config.max_locus_seeds;
           i += stride)
        seeds.push_back(degenerate_points[i]);
    }

    Pseudostructure merged;
    merged.chart = rel.chart();
    for (const Point& s : seeds) {
      Pseudostructure one = trace_pseudostructure(K, s, config.trace_step,
                                                  config.max_length, config.tol);
      merged.tangent_dim = std::max(merged.tangent_dim, one.tangent_dim);
      merged.max_residual = std::max(merged.max_residual, one.max_residual);
      for (Trace& tr : one.curves) merged.curves.push_back(std::move(tr));
    }

    CascadeStep s1;
    s1.k = 1;
    s1.locus_size = degenerate;
    s1.pseudostructure_dim = n;  // n + 1 - k
    s1.max_residual = merged.max_residual;
    if (global.closed) s1.note = "omega closed on the whole sample plan";
    report.steps.push_back(std::move(s1));

    Point base = config.base_point.value_or(merged.curves.front().seed);
    RecoveryResult rec =
        recover_state_function(rel, merged, base, std::max(config.tol, 1e-6));
    CascadeStep s0;
    s0.k = 0;
    s0.locus_size = degenerate;
    s0.pseudostructure_dim = n + 1;
    s0.max_residual = rec.loop_defect;
    s0.state_function_samples = rec.samples;
    s0.note = rec.valid ? "state function recovered along traces"
                        : "state-function recovery incomplete";
    report.steps.push_back(std::move(s0));

    report.pseudostructures.push_back(std::move(merged));
    report.outcome =
        global.closed ? CascadeOutcome::GlobalIdentity : CascadeOutcome::Realized;
    return report;
  }

  // p >= 2: structural driver. Certificates per degree, contraction with a
  // chosen null direction between steps, stop above the 1-form machinery.
  DifferentialForm current = rel.omega;
  report.outcome = CascadeOutcome::NoRealization;
  for (int k = p; k >= 2; --k) {
    CommutatorField K = form_commutator(current);
    SamplePlan plan = plan_with_margin(config.plan, K.coefficients());
    std::vector<Point> pts = plan.points(*rel.chart());

    long degenerate = 0;
    Point best_point;
    std::vector<Point> best_dirs;
    for (const Point& q : pts) {
      auto dirs = degeneracy_directions(K, q, config.tol);
      if (!dirs.empty()) {
        ++degenerate;
        if (dirs.size() > best_dirs.size()) {
          best_dirs = dirs;
          best_point = q;
        }
      }
    }

    CascadeStep s;
    s.k = k;
    s.locus_size = degenerate;
    s.pseudostructure_dim = n + 1 - k;
    if (degenerate == 0) {
      s.note = "no degenerate points in the sample plan";
      report.steps.push_back(std::move(s));
      return report;
    }
    RestrictedClosureReport cert =
        restricted_closure(current, best_dirs, best_point, config.tol);
    s.max_residual = cert.max_residual;
    s.note = "restricted-closure certificate at a maximal-degeneracy point";
    report.steps.push_back(std::move(s));
    report.outcome = CascadeOutcome::Realized;

    if (k > 2) {
      std::vector<double> v(best_dirs[0].begin(), best_dirs[0].end());
      current = current.contract(v);
    }
  }
  return report;
}

}  // namespace evoform
