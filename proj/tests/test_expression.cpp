#include <doctest.h>

#include <cmath>
#include <random>

#include "evoform/expression.hpp"

using namespace evoform;

namespace {
ChartPtr chart2() { return Chart::unit_box(2); }
}  // namespace

TEST_SUITE("expression") {

TEST_CASE("evaluation matches hand values") {
  auto c = Chart::make(2, {{0, 3}, {0, 4}}, {11, 11});
  CHECK(Expression::parse("x1^2 + x2", *c).evaluate({2, 3}) == doctest::Approx(7.0));
  CHECK(Expression::parse("5", *c).evaluate({1.3, 2.7}) == 5.0);
  CHECK(Expression::parse("sin(x1)*x2", *c).evaluate({1, 2}) ==
        doctest::Approx(std::sin(1.0) * 2.0));
  CHECK(Expression::parse("2*x1 - x2/4", *c).evaluate({1, 2}) == doctest::Approx(1.5));
  CHECK(Expression::parse("exp(0)", *c).evaluate({0, 0}) == doctest::Approx(1.0));
  CHECK(Expression::parse("sqrt(x2)", *c).evaluate({0, 4}) == doctest::Approx(2.0));
  CHECK(Expression::parse("pi", *c).evaluate({0, 0}) == doctest::Approx(3.14159265358979));
}

TEST_CASE("integer powers, including negative exponents") {
  auto c = chart2();
  CHECK(Expression::parse("x1^3", *c).evaluate({0.5, 0}) == doctest::Approx(0.125));
  CHECK(Expression::parse("(1 + x1)^(-2)", *c).evaluate({1, 0}) == doctest::Approx(0.25));
  CHECK_THROWS_AS(Expression::parse("x1^x2", *c), ParseError);
  CHECK_THROWS_AS(Expression::parse("x1^0.5", *c), ParseError);
}

TEST_CASE("symbolic derivative matches hand values") {
  auto c = Chart::make(1, {{0, 4}}, {11});
  CHECK(Expression::parse("x1^2", *c).derivative(0).evaluate({3}) == doctest::Approx(6.0));
  auto c2 = chart2();
  CHECK(Expression::parse("7", *c2).derivative(0).evaluate({0.2, 0.9}) == 0.0);
  CHECK(Expression::parse("x2", *c2).derivative(0).evaluate({0.4, 0.1}) == 0.0);
  // product, quotient, chain rules
  auto e = Expression::parse("sin(x1*x2)/(1 + x1^2)", *c2);
  double x = 0.3, y = 0.7;
  double num = std::sin(x * y), den = 1 + x * x;
  double dnum = y * std::cos(x * y), dden = 2 * x;
  CHECK(e.derivative(0).evaluate({x, y}) ==
        doctest::Approx((dnum * den - num * dden) / (den * den)).epsilon(1e-12));
  auto s = Expression::parse("sqrt(1 + x1)", *c2);
  CHECK(s.derivative(0).evaluate({0.44, 0}) ==
        doctest::Approx(0.5 / std::sqrt(1.44)).epsilon(1e-12));
}

TEST_CASE("positioned errors") {
  auto c = chart2();
  CHECK_THROWS_AS(Expression::parse("", *c), ParseError);
  CHECK_THROWS_AS(Expression::parse("x3", *c), ParseError);
  CHECK_THROWS_AS(Expression::parse("sin", *c), ParseError);
  CHECK_THROWS_AS(Expression::parse("1 + ", *c), ParseError);
  CHECK_THROWS_AS(Expression::parse("(x1", *c), ParseError);
  CHECK_THROWS_AS(Expression::parse("x1 x2", *c), ParseError);
  try {
    Expression::parse("x1 + x9", *c);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("print-then-parse is an evaluation fixpoint") {
  auto c = Chart::unit_box(3);
  std::vector<std::string> sources = {
      "x1^2 + x2",       "sin(x1)*x2 - cos(x3)", "-(x1 + x2)/2",
      "exp(-x3^2)",      "sqrt(1 + x1^2)",       "(x1 - x2)^3 / (1 + x3)",
      "2*pi*x1",         "x1*x2*x3",             "1/(2 + x2)^(-2)"};
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& src : sources) {
    Expression e = Expression::parse(src, *c);
    Expression r = Expression::parse(e.to_string(), *c);
    for (int t = 0; t < 10; ++t) {
      Point p{u(rng), u(rng), u(rng)};
      CHECK(r.evaluate(p) == doctest::Approx(e.evaluate(p)).epsilon(1e-14));
    }
  }
}

TEST_CASE("parser totality under token fuzz") {
  auto c = chart2();
  const std::vector<std::string> tokens = {"x1", "x2", "x3",  "sin", "cos", "(",
                                           ")",  "+",  "-",   "*",   "/",   "^",
                                           "1",  "2.5", "pi", "sqrt", "exp", "."};
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  std::uniform_int_distribution<int> len(1, 12);
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 500; ++i) {
    std::string text;
    int m = len(rng);
    for (int j = 0; j < m; ++j) text += tokens[pick(rng)] + " ";
    try {
      Expression e = Expression::parse(text, *c);
      e.evaluate({0.5, 0.5});  // must also evaluate without crashing
      ++parsed;
    } catch (const ParseError&) {
      ++rejected;
    } catch (const DomainError&) {
      ++rejected;  // e.g. division blowups flagged at evaluation
    }
  }
  CHECK(parsed + rejected == 500);
  CHECK(parsed > 0);
  CHECK(rejected > 0);
}

TEST_CASE("purity: repeated evaluation is bit-identical") {
  auto c = chart2();
  Expression e = Expression::parse("sin(x1*x2) + exp(x1) - x2^3", *c);
  Point p{0.123456789, 0.987654321};
  double first = e.evaluate(p);
  for (int i = 0; i < 100; ++i) CHECK(e.evaluate(p) == first);
}

}  // TEST_SUITE
