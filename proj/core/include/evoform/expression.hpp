#pragma once

#include <memory>
#include <string>

#include "evoform/chart.hpp"

namespace evoform {

// Immutable expression tree over the coordinates of a chart.
//
// Grammar (see docs/grammar.md):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' ['-'] integer)?
//   atom    := number | coordinate | func '(' expr ')' | '(' expr ')'
//   func    := 'sin' | 'cos' | 'exp' | 'sqrt'
//
// Powers are restricted to integer exponents so that symbolic
// differentiation stays closed under the grammar.
class Expression {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  Expression() = default;  // empty; only valid after parse/constant/...

  static Expression constant(double value);
  static Expression coordinate(int axis, const std::string& name);

  // Parses `text` against the chart's coordinate names.
  // Throws ParseError (with position) on malformed input or unknown names.
  static Expression parse(const std::string& text, const Chart& chart);

  double evaluate(const Point& p) const;
  Expression derivative(int axis) const;

  // Structural zero after simplification (used for sparse form storage).
  bool is_zero() const;
  bool is_constant(double* value = nullptr) const;

  // Print-then-parse yields an equivalent expression.
  std::string to_string() const;

  Expression operator+(const Expression& other) const;
  Expression operator-(const Expression& other) const;
  Expression operator*(const Expression& other) const;
  Expression negate() const;

  explicit Expression(NodePtr root) : root_(std::move(root)) {}
  const NodePtr& root() const { return root_; }

 private:
  NodePtr root_;
};

}  // namespace evoform
