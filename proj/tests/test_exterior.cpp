#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "evoform/commutator.hpp"
#include "evoform/form.hpp"
#include "evoform/multi_index.hpp"

using namespace evoform;

namespace {

ScalarField random_poly(const ChartPtr& chart, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_int_distribution<int> deg(0, 3);
  std::ostringstream src;
  src << coeff(rng);
  for (int axis = 1; axis <= chart->dimension(); ++axis) {
    int d = deg(rng);
    if (d == 0) continue;
    src << " + " << coeff(rng) << "*x" << axis;
    if (d > 1) src << "^" << d;
  }
  return ScalarField::parse(chart, src.str());
}

DifferentialForm random_form(const ChartPtr& chart, int degree, std::mt19937_64& rng) {
  DifferentialForm w(chart, degree);
  for (const auto& idx : increasing_subsets(chart->dimension(), degree))
    w.set_coefficient(idx, random_poly(chart, rng));
  return w;
}

double sup_over_grid(const DifferentialForm& w) {
  double sup = 0.0;
  for (const Point& p : SamplePlan::grid().points(*w.chart()))
    for (const auto& [idx, f] : w.entries())
      sup = std::max(sup, std::abs(f.evaluate(p)));
  return sup;
}

}  // namespace

TEST_SUITE("exterior") {

TEST_CASE("wedge sign rules") {
  auto chart = Chart::unit_box(2);
  auto dx1 = DifferentialForm::basis_one_form(chart, 0);
  auto dx2 = DifferentialForm::basis_one_form(chart, 1);
  CHECK(wedge(dx1, dx1).empty());
  DifferentialForm a = wedge(dx1, dx2);
  DifferentialForm b = wedge(dx2, dx1);
  Point p{0.3, 0.7};
  CHECK(a.coefficient_at({0, 1}, p) == doctest::Approx(1.0));
  CHECK(b.coefficient_at({0, 1}, p) == doctest::Approx(-1.0));

  DifferentialForm x2dx1(chart, 1);
  x2dx1.set_coefficient({0}, ScalarField::parse(chart, "x2"));
  CHECK(wedge(x2dx1, dx2).coefficient_at({0, 1}, p) == doctest::Approx(0.7));
}

TEST_CASE("wedge is graded-anticommutative and bilinear") {
  std::mt19937_64 rng(5);
  auto chart = Chart::unit_box(3);
  SamplePlan plan = SamplePlan::random(20, 17);
  for (int trial = 0; trial < 5; ++trial) {
    for (int da = 1; da <= 2; ++da) {
      int db = 1;
      DifferentialForm a = random_form(chart, da, rng);
      DifferentialForm b = random_form(chart, db, rng);
      DifferentialForm ab = wedge(a, b);
      DifferentialForm ba = wedge(b, a).scaled(((da * db) % 2 == 0) ? 1.0 : -1.0);
      for (const Point& p : plan.points(*chart))
        for (const auto& idx : increasing_subsets(3, da + db))
          CHECK(ab.coefficient_at(idx, p) ==
                doctest::Approx(ba.coefficient_at(idx, p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("wedge degree overflow and chart mismatch are errors") {
  auto chart = Chart::unit_box(2);
  auto other = Chart::unit_box(2);
  auto dx1 = DifferentialForm::basis_one_form(chart, 0);
  auto dx2 = DifferentialForm::basis_one_form(chart, 1);
  DifferentialForm top = wedge(dx1, dx2);
  CHECK_THROWS_AS(wedge(top, dx1), DomainError);
  CHECK_THROWS_AS(wedge(dx1, DifferentialForm::basis_one_form(other, 0)), DomainError);
}

TEST_CASE("exterior derivative examples") {
  auto chart = Chart::unit_box(2);
  DifferentialForm c(chart, 0);
  c.set_coefficient({}, ScalarField::constant(chart, 3.0));
  CHECK(exterior_derivative(c).empty());

  DifferentialForm w(chart, 1);
  w.set_coefficient({1}, ScalarField::parse(chart, "x1"));  // x1 dx2
  DifferentialForm dw = exterior_derivative(w);
  CHECK(dw.coefficient_at({0, 1}, {0.4, 0.9}) == doctest::Approx(1.0));

  DifferentialForm psi(chart, 0);
  psi.set_coefficient({}, ScalarField::parse(chart, "x1*x2^2"));
  DifferentialForm ddpsi = exterior_derivative(exterior_derivative(psi));
  CHECK(sup_over_grid(ddpsi) < 1e-12);
}

TEST_CASE("top-degree derivative is rejected") {
  auto chart = Chart::unit_box(2);
  DifferentialForm top(chart, 2);
  top.set_coefficient({0, 1}, ScalarField::parse(chart, "x1"));
  CHECK_THROWS_AS(exterior_derivative(top), DomainError);
}

TEST_CASE("d of d vanishes on random polynomial forms") {
  std::mt19937_64 rng(31);
  int done = 0;
  for (int trial = 0; trial < 24; ++trial) {
    int n = 2 + trial % 3;  // 2..4
    int k = trial % std::min(3, n);  // 0..2, below top degree - 1
    if (k + 2 > n) k = n - 2;
    auto chart = Chart::unit_box(n, 5);
    DifferentialForm w = random_form(chart, k, rng);
    DifferentialForm dd = exterior_derivative(exterior_derivative(w));
    CHECK(sup_over_grid(dd) < 1e-12);
    ++done;
  }
  CHECK(done >= 20);
}

TEST_CASE("Leibniz rule on random pairs") {
  std::mt19937_64 rng(77);
  auto chart = Chart::unit_box(3, 5);
  SamplePlan plan = SamplePlan::random(15, 3);
  for (int trial = 0; trial < 8; ++trial) {
    int da = trial % 2;  // 0 or 1
    DifferentialForm a = random_form(chart, da, rng);
    DifferentialForm b = random_form(chart, 1, rng);
    DifferentialForm lhs = exterior_derivative(wedge(a, b));
    DifferentialForm rhs =
        wedge(exterior_derivative(a), b) +
        wedge(a, exterior_derivative(b)).scaled(da % 2 == 0 ? 1.0 : -1.0);
    for (const Point& p : plan.points(*chart))
      for (const auto& idx : increasing_subsets(3, da + 2))
        CHECK(lhs.coefficient_at(idx, p) ==
              doctest::Approx(rhs.coefficient_at(idx, p)).epsilon(1e-10));
  }
}

TEST_CASE("permuted index lookup returns the signed value") {
  auto chart = Chart::unit_box(3);
  DifferentialForm w(chart, 2);
  w.set_coefficient({0, 2}, ScalarField::parse(chart, "x2"));
  Point p{0.1, 0.6, 0.2};
  CHECK(w.coefficient_at({0, 2}, p) == doctest::Approx(0.6));
  CHECK(w.coefficient_at({2, 0}, p) == doctest::Approx(-0.6));
  CHECK(w.coefficient_at({0, 0}, p) == 0.0);
}

TEST_CASE("apply evaluates the alternating sum") {
  auto chart = Chart::unit_box(2);
  DifferentialForm w(chart, 2);
  w.set_coefficient({0, 1}, ScalarField::constant(chart, 2.0));
  Point p{0.5, 0.5};
  CHECK(w.apply({{1, 0}, {0, 1}}, p) == doctest::Approx(2.0));
  CHECK(w.apply({{0, 1}, {1, 0}}, p) == doctest::Approx(-2.0));
  CHECK(w.apply({{1, 1}, {2, 2}}, p) == doctest::Approx(0.0));
}

TEST_CASE("flat commutator examples") {
  auto chart = Chart::make(2, {{-1, 1}, {-1, 1}}, {11, 11});
  Point p{0.3, -0.4};

  DifferentialForm exact(chart, 1);
  exact.set_coefficient({0}, ScalarField::parse(chart, "x2"));
  exact.set_coefficient({1}, ScalarField::parse(chart, "x1"));
  CHECK(flat_commutator(exact).matrix_at(p).cwiseAbs().maxCoeff() < 1e-14);

  DifferentialForm rot(chart, 1);
  rot.set_coefficient({0}, ScalarField::parse(chart, "x2"));
  rot.set_coefficient({1}, ScalarField::parse(chart, "-x1"));
  Eigen::MatrixXd K = flat_commutator(rot).matrix_at(p);
  CHECK(K(0, 1) == doctest::Approx(-2.0));
  CHECK(K(1, 0) == doctest::Approx(2.0));

  DifferentialForm single(chart, 1);
  single.set_coefficient({0}, ScalarField::parse(chart, "sin(x1)"));
  CHECK(flat_commutator(single).matrix_at(p).cwiseAbs().maxCoeff() < 1e-14);

  DifferentialForm two(chart, 2);
  two.set_coefficient({0, 1}, ScalarField::parse(chart, "x1"));
  CHECK_THROWS_AS(flat_commutator(two), DomainError);
}

TEST_CASE("flat commutator matches exterior derivative entry-for-entry") {
  std::mt19937_64 rng(13);
  auto chart = Chart::unit_box(4, 5);
  SamplePlan plan = SamplePlan::random(25, 9);
  for (int trial = 0; trial < 5; ++trial) {
    DifferentialForm w = random_form(chart, 1, rng);
    DifferentialForm dw = exterior_derivative(w);
    Eigen::MatrixXd K;
    for (const Point& p : plan.points(*chart)) {
      K = flat_commutator(w).matrix_at(p);
      CHECK((K + K.transpose()).cwiseAbs().maxCoeff() < 1e-12);
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          CHECK(K(a, b) == doctest::Approx(dw.coefficient_at({a, b}, p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("closure predicate") {
  auto chart = Chart::unit_box(2);
  SamplePlan plan = SamplePlan::grid();

  DifferentialForm psi(chart, 0);
  psi.set_coefficient({}, ScalarField::parse(chart, "x1^2*x2"));
  ClosureReport ok = is_closed(exterior_derivative(psi), 1e-12, plan);
  CHECK(ok.closed);
  CHECK(ok.max_residual < 1e-12);

  DifferentialForm shear(chart, 1);
  shear.set_coefficient({0}, ScalarField::parse(chart, "x2"));
  ClosureReport bad = is_closed(shear, 1e-9, plan);
  CHECK_FALSE(bad.closed);
  CHECK(bad.max_residual == doctest::Approx(1.0));
  CHECK(bad.argmax_indices == std::vector<int>{0, 1});
  CHECK(bad.samples == 121);
}

TEST_CASE("top-degree forms are trivially closed") {
  auto chart = Chart::unit_box(2);
  DifferentialForm top(chart, 2);
  top.set_coefficient({0, 1}, ScalarField::parse(chart, "x1*x2"));
  CHECK(is_closed(top, 1e-12, SamplePlan::grid()).closed);
}

TEST_CASE("restricted closure on chosen directions") {
  auto chart = Chart::unit_box(3);
  DifferentialForm w(chart, 1);
  w.set_coefficient({0}, ScalarField::parse(chart, "x2"));  // dw = -dx1^dx2
  Point p{0.5, 0.5, 0.5};
  Point e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

  CHECK(restricted_closure(w, {e3}, p, 1e-10).closed);  // vacuous on a line
  RestrictedClosureReport r = restricted_closure(w, {e1, e2}, p, 1e-10);
  CHECK_FALSE(r.closed);
  CHECK(r.max_residual == doctest::Approx(1.0));

  DifferentialForm exact = exterior_derivative([&] {
    DifferentialForm f(chart, 0);
    f.set_coefficient({}, ScalarField::parse(chart, "x1*x2*x3"));
    return f;
  }());
  CHECK(restricted_closure(exact, {e1, e2, e3}, p, 1e-10).closed);

  CHECK_THROWS_AS(restricted_closure(w, {e1, e1}, p, 1e-10), NumericError);
}

TEST_CASE("complementary arrangement of a plane-wave 2-form is closed") {
  auto chart = Chart::unit_box(4, 5);
  DifferentialForm F(chart, 2);
  F.set_coefficient({0, 1}, ScalarField::parse(chart, "sin(x1 - x4)"));
  F.set_coefficient({1, 3}, ScalarField::parse(chart, "sin(x1 - x4)"));
  CHECK(is_closed(F, 1e-10, SamplePlan::grid()).closed);
  DifferentialForm dual = lorentz_dual_two_form(F);
  CHECK(is_closed(dual, 1e-10, SamplePlan::grid()).closed);
  Point p{0.3, 0.1, 0.9, 0.2};
  // eta = diag(1,1,1,-1): (*F)_{13} and (*F)_{34} carry the same profile
  CHECK(dual.coefficient_at({0, 2}, p) ==
        doctest::Approx(F.coefficient_at({1, 3}, p)));
  CHECK(dual.coefficient_at({2, 3}, p) ==
        doctest::Approx(F.coefficient_at({0, 1}, p)));
}

}  // TEST_SUITE
