#include "evoform/connection.hpp"

namespace evoform {

void Connection::check_index(int i) const {
  if (i < 0 || i >= chart_->dimension())
    throw DomainError("connection index out of range");
}

void Connection::set(int sigma, int beta, int alpha, ScalarField field) {
  check_index(sigma);
  check_index(beta);
  check_index(alpha);
  require_same_chart(chart_, field.chart());
  if (field.is_structurally_zero()) {
    entries_.erase({sigma, beta, alpha});
  } else {
    entries_.insert_or_assign({sigma, beta, alpha}, std::move(field));
  }
}

const ScalarField* Connection::find(int sigma, int beta, int alpha) const {
  auto it = entries_.find({sigma, beta, alpha});
  return it == entries_.end() ? nullptr : &it->second;
}

double Connection::gamma(int sigma, int beta, int alpha, const Point& p) const {
  const ScalarField* f = find(sigma, beta, alpha);
  return f ? f->evaluate(p) : 0.0;
}

double Connection::torsion(int sigma, int beta, int alpha, const Point& p) const {
  return gamma(sigma, beta, alpha, p) - gamma(sigma, alpha, beta, p);
}

std::vector<std::vector<std::vector<double>>> Connection::torsion_components(
    const Point& p) const {
  chart_->require_point(p);
  const int n = chart_->dimension();
  std::vector<std::vector<std::vector<double>>> T(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) T[s][b][a] = torsion(s, b, a, p);
  return T;
}

CommutatorField covariant_commutator(const DifferentialForm& w, const Connection& c) {
  if (w.degree() != 1) throw DomainError("covariant commutator requires a 1-form");
  require_same_chart(w.chart(), c.chart());
  const ChartPtr& chart = w.chart();
  const int n = chart->dimension();

  CommutatorField flat = flat_commutator(w);
  DifferentialForm K = flat.coefficients();

  // Torsion contraction (G^s_{ba} - G^s_{ab}) a_s on each increasing (a, b).
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int s = 0; s < n; ++s) {
        auto it = w.entries().find(std::vector<int>{s});
        if (it == w.entries().end()) continue;
        const ScalarField* gba = c.find(s, b, a);
        const ScalarField* gab = c.find(s, a, b);
        if (!gba && !gab) continue;
        ScalarField torsion =
            gba ? (gab ? *gba + gab->scaled(-1.0) : *gba) : gab->scaled(-1.0);
        K.add_term({a, b}, torsion * it->second);
      }
    }
  }
  return CommutatorField(1, std::move(K));
}

}  // namespace evoform
