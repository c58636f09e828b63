#include "evoform/form.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "evoform/multi_index.hpp"

namespace evoform {

DifferentialForm::DifferentialForm(ChartPtr chart, int degree)
    : chart_(std::move(chart)), degree_(degree) {
  if (degree_ < 0 || degree_ > chart_->dimension())
    throw DomainError("form degree must be in 0..n");
}

DifferentialForm DifferentialForm::basis_one_form(ChartPtr chart, int axis) {
  DifferentialForm w(chart, 1);
  w.set_coefficient({axis}, ScalarField::constant(chart, 1.0));
  return w;
}

void DifferentialForm::add_term(std::vector<int> indices, ScalarField field) {
  if (static_cast<int>(indices.size()) != degree_)
    throw DomainError("multi-index length does not match form degree");
  for (int i : indices)
    if (i < 0 || i >= chart_->dimension())
      throw DomainError("multi-index axis out of range");
  int sign = canonicalize(indices);
  if (sign == 0) return;
  if (sign < 0) field = field.scaled(-1.0);
  auto it = entries_.find(indices);
  if (it == entries_.end()) {
    if (!field.is_structurally_zero()) entries_.emplace(std::move(indices), std::move(field));
  } else {
    ScalarField sum = it->second + field;
    if (sum.is_structurally_zero())
      entries_.erase(it);
    else
      it->second = std::move(sum);
  }
}

void DifferentialForm::set_coefficient(std::vector<int> indices, ScalarField field) {
  int sign = canonicalize(indices);
  if (sign == 0) throw DomainError("repeated index in multi-index");
  entries_.erase(indices);
  add_term(std::move(indices), sign < 0 ? field.scaled(-1.0) : field);
}

double DifferentialForm::coefficient_at(std::vector<int> indices, const Point& p) const {
  if (static_cast<int>(indices.size()) != degree_)
    throw DomainError("multi-index length does not match form degree");
  int sign = canonicalize(indices);
  if (sign == 0) return 0.0;
  auto it = entries_.find(indices);
  if (it == entries_.end()) return 0.0;
  return sign * it->second.evaluate(p);
}

double DifferentialForm::apply(const std::vector<Point>& vectors, const Point& p) const {
  if (static_cast<int>(vectors.size()) != degree_)
    throw DomainError("vector tuple length does not match form degree");
  if (degree_ == 0) {
    auto it = entries_.find({});
    return it == entries_.end() ? 0.0 : it->second.evaluate(p);
  }
  double sum = 0.0;
  Eigen::MatrixXd minor(degree_, degree_);
  for (const auto& [idx, field] : entries_) {
    for (int r = 0; r < degree_; ++r)
      for (int c = 0; c < degree_; ++c)
        minor(r, c) = vectors[c].at(idx[r]);
    sum += field.evaluate(p) * minor.determinant();
  }
  return sum;
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& other) const {
  require_same_chart(chart_, other.chart_);
  if (degree_ != other.degree_) throw DomainError("degree mismatch in form sum");
  DifferentialForm out = *this;
  for (const auto& [idx, field] : other.entries_) out.add_term(idx, field);
  return out;
}

DifferentialForm DifferentialForm::scaled(double factor) const {
  DifferentialForm out(chart_, degree_);
  if (factor == 0.0) return out;
  for (const auto& [idx, field] : entries_)
    out.entries_.emplace(idx, field.scaled(factor));
  return out;
}

DifferentialForm DifferentialForm::contract(const std::vector<double>& v) const {
  if (degree_ == 0) throw DomainError("cannot contract a 0-form");
  if (static_cast<int>(v.size()) != chart_->dimension())
    throw DomainError("vector dimension does not match chart");
  DifferentialForm out(chart_, degree_ - 1);
  for (const auto& [idx, field] : entries_) {
    for (int pos = 0; pos < degree_; ++pos) {
      if (v[idx[pos]] == 0.0) continue;
      std::vector<int> rest;
      for (int q = 0; q < degree_; ++q)
        if (q != pos) rest.push_back(idx[q]);
      double sign = (pos % 2 == 0) ? 1.0 : -1.0;
      out.add_term(std::move(rest), field.scaled(sign * v[idx[pos]]));
    }
  }
  return out;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_chart(a.chart(), b.chart());
  const int n = a.chart()->dimension();
  if (a.degree() + b.degree() > n)
    throw DomainError("wedge degree exceeds chart dimension");
  DifferentialForm out(a.chart(), a.degree() + b.degree());
  for (const auto& [ia, fa] : a.entries()) {
    for (const auto& [ib, fb] : b.entries()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), fa * fb);
    }
  }
  return out;
}

DifferentialForm exterior_derivative(const DifferentialForm& w, DerivativeMode mode,
                                     double fd_step) {
  const ChartPtr& chart = w.chart();
  const int n = chart->dimension();
  if (w.degree() >= n)
    throw DomainError("exterior derivative of a top-degree form");
  DifferentialForm out(chart, w.degree() + 1);
  for (const auto& [idx, field] : w.entries()) {
    for (int a = 0; a < n; ++a) {
      bool member = false;
      for (int i : idx)
        if (i == a) member = true;
      if (member) continue;
      ScalarField dfield;
      if (mode == DerivativeMode::FiniteDifference) {
        ScalarField base = field;
        double h = fd_step > 0.0 ? fd_step : chart->cell_width(a);
        dfield = ScalarField::from_callable(
            chart, [base, a, h](const Point& p) { return base.fd_partial(a, p, h); },
            h);
      } else {
        dfield = field.derivative(a);
      }
      std::vector<int> jdx = idx;
      jdx.insert(jdx.begin(), a);
      out.add_term(std::move(jdx), std::move(dfield));
    }
  }
  return out;
}

ClosureReport sweep_max(const DifferentialForm& dw, double tol, const SamplePlan& plan) {
  ClosureReport rep;
  rep.tol = tol;
  std::vector<Point> pts = plan.points(*dw.chart());
  rep.samples = static_cast<int>(pts.size());
  for (const Point& p : pts) {
    for (const auto& [idx, field] : dw.entries()) {
      double v = std::abs(field.evaluate(p));
      if (v > rep.max_residual) {
        rep.max_residual = v;
        rep.argmax_point = p;
        rep.argmax_indices = idx;
      }
    }
  }
  rep.closed = rep.max_residual < tol;
  return rep;
}

namespace {

bool needs_margin(const DifferentialForm& w) {
  for (const auto& [idx, field] : w.entries())
    if (!field.is_expression()) return true;
  return false;
}

}  // namespace

ClosureReport is_closed(const DifferentialForm& w, double tol, const SamplePlan& plan) {
  if (w.degree() == w.chart()->dimension()) {
    // dw vanishes structurally at top degree.
    ClosureReport rep;
    rep.tol = tol;
    rep.closed = true;
    return rep;
  }
  SamplePlan effective = plan;
  if (needs_margin(w) && effective.margin_cells < 1) effective.margin_cells = 1;
  return sweep_max(exterior_derivative(w), tol, effective);
}

DifferentialForm lorentz_dual_two_form(const DifferentialForm& w) {
  const ChartPtr& chart = w.chart();
  if (chart->dimension() != 4 || w.degree() != 2)
    throw DomainError("dual arrangement is defined for 2-forms on 4-D charts");
  DifferentialForm out(chart, 2);
  for (const auto& [idx, field] : w.entries()) {
    std::vector<int> comp = complement_subset(idx, 4);
    std::vector<int> seq = comp;
    seq.insert(seq.end(), idx.begin(), idx.end());
    double sign = permutation_sign(seq);
    // eta^{aa} eta^{bb} with axis 4 timelike.
    if (idx[0] == 3 || idx[1] == 3) sign = -sign;
    out.add_term(std::move(comp), field.scaled(sign));
  }
  return out;
}

RestrictedClosureReport restricted_closure(const DifferentialForm& w,
                                           const std::vector<Point>& directions,
                                           const Point& point, double tol) {
  const int n = w.chart()->dimension();
  if (directions.empty() || static_cast<int>(directions.size()) > n)
    throw DomainError("direction count must be in 1..n");
  Eigen::MatrixXd D(n, static_cast<int>(directions.size()));
  for (std::size_t c = 0; c < directions.size(); ++c) {
    if (static_cast<int>(directions[c].size()) != n)
      throw DomainError("direction dimension does not match chart");
    for (int r = 0; r < n; ++r) D(r, static_cast<int>(c)) = directions[c][r];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(D);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-10 * sv(0))
    throw NumericError("directions are linearly dependent");

  RestrictedClosureReport rep;
  if (w.degree() >= n) {
    rep.closed = true;
    return rep;
  }
  DifferentialForm dw = exterior_derivative(w);
  const int k1 = dw.degree();
  if (static_cast<int>(directions.size()) < k1) {
    // Not enough directions to feed the (k+1)-form: vacuously closed.
    rep.closed = true;
    return rep;
  }
  for (const auto& tuple : increasing_subsets(static_cast<int>(directions.size()), k1)) {
    std::vector<Point> vs;
    for (int t : tuple) vs.push_back(directions[t]);
    double v = std::abs(dw.apply(vs, point));
    rep.max_residual = std::max(rep.max_residual, v);
  }
  rep.closed = rep.max_residual < tol;
  return rep;
}

}  // namespace evoform
