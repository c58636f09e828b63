#include <benchmark/benchmark.h>

#include "evoform/commutator.hpp"
#include "evoform/degeneracy.hpp"
#include "evoform/expression.hpp"
#include "evoform/form.hpp"
#include "evoform/sampling.hpp"

namespace {

using namespace evoform;

void bench_parse_expression(benchmark::State& state) {
  auto chart = Chart::unit_box(3, 9);
  const std::string src = "sin(x1 * x2) + exp(-x3^2) / (1 + x1^2) - cos(x2 - x3)";
  for (auto _ : state) {
    Expression e = Expression::parse(src, *chart);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(bench_parse_expression);

void bench_exterior_derivative(benchmark::State& state) {
  auto chart = Chart::unit_box(4, 9);
  DifferentialForm w(chart, 2);
  w.set_coefficient({0, 1}, ScalarField::parse(chart, "sin(x1 - x4)"));
  w.set_coefficient({1, 3}, ScalarField::parse(chart, "x2 * exp(x3)"));
  for (auto _ : state) {
    DifferentialForm dw = exterior_derivative(w);
    benchmark::DoNotOptimize(dw);
  }
}
BENCHMARK(bench_exterior_derivative);

DifferentialForm shear_one_form(const ChartPtr& chart) {
  DifferentialForm w(chart, 1);
  w.set_coefficient({0}, ScalarField::parse(chart, "x2 * x3"));
  w.set_coefficient({1}, ScalarField::parse(chart, "x1 + x3^2"));
  w.set_coefficient({2}, ScalarField::parse(chart, "sin(x1)"));
  return w;
}

void bench_commutator_sweep(benchmark::State& state) {
  auto chart = Chart::unit_box(3, 9);
  CommutatorField k = flat_commutator(shear_one_form(chart));
  SamplePlan plan = SamplePlan::random(64, 7);
  for (auto _ : state) {
    ClosureReport r = k.residual_sweep(1e-9, plan);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bench_commutator_sweep);

void bench_null_space(benchmark::State& state) {
  auto chart = Chart::unit_box(3, 9);
  CommutatorField k = flat_commutator(shear_one_form(chart));
  Point p{0.3, 0.4, 0.5};
  for (auto _ : state) {
    auto dirs = degeneracy_directions(k, p, 1e-9);
    benchmark::DoNotOptimize(dirs);
  }
}
BENCHMARK(bench_null_space);

}  // namespace

BENCHMARK_MAIN();
