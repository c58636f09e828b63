#include "evoform/expression.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace evoform {

namespace {

enum class Kind { Number, Coord, Neg, Sin, Cos, Exp, Sqrt, Add, Sub, Mul, Div, Pow };

bool is_function(Kind k) {
  return k == Kind::Sin || k == Kind::Cos || k == Kind::Exp || k == Kind::Sqrt;
}

}  // namespace

struct Expression::Node {
  Kind kind;
  double value = 0.0;       // Number
  int axis = -1;            // Coord
  std::string name;         // Coord
  int exponent = 0;         // Pow
  NodePtr a, b;             // children

  Node(Kind k) : kind(k) {}
};

namespace {

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;

NodePtr number(double v) {
  auto n = std::make_shared<Node>(Kind::Number);
  n->value = v;
  return n;
}

bool is_const(const NodePtr& n, double v) {
  return n->kind == Kind::Number && n->value == v;
}

NodePtr unary(Kind k, NodePtr a) {
  if (a->kind == Kind::Number) {
    switch (k) {
      case Kind::Neg: return number(-a->value);
      case Kind::Sin: return number(std::sin(a->value));
      case Kind::Cos: return number(std::cos(a->value));
      case Kind::Exp: return number(std::exp(a->value));
      case Kind::Sqrt: return number(std::sqrt(a->value));
      default: break;
    }
  }
  if (k == Kind::Neg && a->kind == Kind::Neg) return a->a;
  auto n = std::make_shared<Node>(k);
  n->a = std::move(a);
  return n;
}

NodePtr binary(Kind k, NodePtr a, NodePtr b) {
  if (a->kind == Kind::Number && b->kind == Kind::Number) {
    switch (k) {
      case Kind::Add: return number(a->value + b->value);
      case Kind::Sub: return number(a->value - b->value);
      case Kind::Mul: return number(a->value * b->value);
      case Kind::Div:
        if (b->value != 0.0) return number(a->value / b->value);
        break;
      default: break;
    }
  }
  switch (k) {
    case Kind::Add:
      if (is_const(a, 0.0)) return b;
      if (is_const(b, 0.0)) return a;
      break;
    case Kind::Sub:
      if (is_const(b, 0.0)) return a;
      if (is_const(a, 0.0)) return unary(Kind::Neg, std::move(b));
      break;
    case Kind::Mul:
      if (is_const(a, 0.0) || is_const(b, 0.0)) return number(0.0);
      if (is_const(a, 1.0)) return b;
      if (is_const(b, 1.0)) return a;
      break;
    case Kind::Div:
      if (is_const(a, 0.0)) return number(0.0);
      if (is_const(b, 1.0)) return a;
      break;
    default: break;
  }
  auto n = std::make_shared<Node>(k);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr power(NodePtr base, int exponent) {
  if (exponent == 0) return number(1.0);
  if (exponent == 1) return base;
  if (base->kind == Kind::Number)
    return number(std::pow(base->value, exponent));
  auto n = std::make_shared<Node>(Kind::Pow);
  n->a = std::move(base);
  n->exponent = exponent;
  return n;
}

double eval_node(const Node& n, const Point& p) {
  switch (n.kind) {
    case Kind::Number: return n.value;
    case Kind::Coord: return p[static_cast<std::size_t>(n.axis)];
    case Kind::Neg: return -eval_node(*n.a, p);
    case Kind::Sin: return std::sin(eval_node(*n.a, p));
    case Kind::Cos: return std::cos(eval_node(*n.a, p));
    case Kind::Exp: return std::exp(eval_node(*n.a, p));
    case Kind::Sqrt: return std::sqrt(eval_node(*n.a, p));
    case Kind::Add: return eval_node(*n.a, p) + eval_node(*n.b, p);
    case Kind::Sub: return eval_node(*n.a, p) - eval_node(*n.b, p);
    case Kind::Mul: return eval_node(*n.a, p) * eval_node(*n.b, p);
    case Kind::Div: return eval_node(*n.a, p) / eval_node(*n.b, p);
    case Kind::Pow: {
      double base = eval_node(*n.a, p);
      return std::pow(base, n.exponent);
    }
  }
  return 0.0;
}

NodePtr diff_node(const NodePtr& n, int axis) {
  switch (n->kind) {
    case Kind::Number: return number(0.0);
    case Kind::Coord: return number(n->axis == axis ? 1.0 : 0.0);
    case Kind::Neg: return unary(Kind::Neg, diff_node(n->a, axis));
    case Kind::Sin:
      return binary(Kind::Mul, unary(Kind::Cos, n->a), diff_node(n->a, axis));
    case Kind::Cos:
      return unary(Kind::Neg, binary(Kind::Mul, unary(Kind::Sin, n->a),
                                     diff_node(n->a, axis)));
    case Kind::Exp:
      return binary(Kind::Mul, unary(Kind::Exp, n->a), diff_node(n->a, axis));
    case Kind::Sqrt:
      // a' / (2*sqrt(a))
      return binary(Kind::Div, diff_node(n->a, axis),
                    binary(Kind::Mul, number(2.0), unary(Kind::Sqrt, n->a)));
    case Kind::Add:
      return binary(Kind::Add, diff_node(n->a, axis), diff_node(n->b, axis));
    case Kind::Sub:
      return binary(Kind::Sub, diff_node(n->a, axis), diff_node(n->b, axis));
    case Kind::Mul:
      return binary(Kind::Add,
                    binary(Kind::Mul, diff_node(n->a, axis), n->b),
                    binary(Kind::Mul, n->a, diff_node(n->b, axis)));
    case Kind::Div:
      // (a'b - ab') / b^2
      return binary(Kind::Div,
                    binary(Kind::Sub,
                           binary(Kind::Mul, diff_node(n->a, axis), n->b),
                           binary(Kind::Mul, n->a, diff_node(n->b, axis))),
                    power(n->b, 2));
    case Kind::Pow:
      // k * a^(k-1) * a'
      return binary(Kind::Mul,
                    binary(Kind::Mul, number(static_cast<double>(n->exponent)),
                           power(n->a, n->exponent - 1)),
                    diff_node(n->a, axis));
  }
  return number(0.0);
}

int precedence(Kind k) {
  switch (k) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
  }
}

void print_node(const Node& n, std::ostream& out, int parent_prec) {
  int prec = precedence(n.kind);
  bool paren = prec < parent_prec;
  if (paren) out << '(';
  switch (n.kind) {
    case Kind::Number: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.value;
      std::string s = tmp.str();
      if (!s.empty() && s[0] == '-') {
        out << '(' << s << ')';
      } else {
        out << s;
      }
      break;
    }
    case Kind::Coord: out << n.name; break;
    case Kind::Neg:
      out << '-';
      print_node(*n.a, out, prec + 1);
      break;
    case Kind::Sin: out << "sin("; print_node(*n.a, out, 0); out << ')'; break;
    case Kind::Cos: out << "cos("; print_node(*n.a, out, 0); out << ')'; break;
    case Kind::Exp: out << "exp("; print_node(*n.a, out, 0); out << ')'; break;
    case Kind::Sqrt: out << "sqrt("; print_node(*n.a, out, 0); out << ')'; break;
    case Kind::Add:
      print_node(*n.a, out, prec);
      out << " + ";
      print_node(*n.b, out, prec + 1);
      break;
    case Kind::Sub:
      print_node(*n.a, out, prec);
      out << " - ";
      print_node(*n.b, out, prec + 1);
      break;
    case Kind::Mul:
      print_node(*n.a, out, prec);
      out << "*";
      print_node(*n.b, out, prec + 1);
      break;
    case Kind::Div:
      print_node(*n.a, out, prec);
      out << "/";
      print_node(*n.b, out, prec + 1);
      break;
    case Kind::Pow:
      print_node(*n.a, out, prec + 1);
      out << '^';
      if (n.exponent < 0)
        out << '(' << n.exponent << ')';
      else
        out << n.exponent;
      break;
  }
  if (paren) out << ')';
}

// Recursive-descent parser over a flat token scan.
class Parser {
 public:
  Parser(const std::string& text, const Chart& chart)
      : text_(text), chart_(chart) {}

  NodePtr parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    NodePtr e = parse_expr();
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  NodePtr parse_expr() {
    NodePtr left = parse_term();
    for (;;) {
      if (accept('+'))
        left = binary(Kind::Add, left, parse_term());
      else if (accept('-'))
        left = binary(Kind::Sub, left, parse_term());
      else
        return left;
    }
  }

  NodePtr parse_term() {
    NodePtr left = parse_factor();
    for (;;) {
      if (accept('*'))
        left = binary(Kind::Mul, left, parse_factor());
      else if (accept('/'))
        left = binary(Kind::Div, left, parse_factor());
      else
        return left;
    }
  }

  NodePtr parse_factor() {
    if (accept('-')) return unary(Kind::Neg, parse_factor());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (accept('^')) return power(base, parse_exponent());
    return base;
  }

  int parse_exponent() {
    skip_ws();
    bool paren = accept('(');
    skip_ws();
    bool neg = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("exponent must be an integer", start);
    if (!at_end() && peek() == '.')
      throw ParseError("exponent must be an integer", pos_);
    int value = std::stoi(text_.substr(start, pos_ - start));
    if (paren) expect(')');
    return neg ? -value : value;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (accept('(')) {
      NodePtr e = parse_expr();
      expect(')');
      return e;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr parse_number() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                         peek() == '.'))
      ++pos_;
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = mark;  // 'e' belongs to an identifier-looking tail; reject below
      } else {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    try {
      std::size_t used = 0;
      std::string slice = text_.substr(start, pos_ - start);
      double v = std::stod(slice, &used);
      if (used != slice.size()) throw ParseError("malformed number", start);
      return number(v);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed number", start);
    } catch (const std::out_of_range&) {
      throw ParseError("number out of range", start);
    }
  }

  NodePtr parse_identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    Kind fn = Kind::Number;
    bool is_fn = false;
    if (name == "sin") { fn = Kind::Sin; is_fn = true; }
    else if (name == "cos") { fn = Kind::Cos; is_fn = true; }
    else if (name == "exp") { fn = Kind::Exp; is_fn = true; }
    else if (name == "sqrt") { fn = Kind::Sqrt; is_fn = true; }
    if (is_fn) {
      skip_ws();
      if (!accept('('))
        throw ParseError("function '" + name + "' requires one parenthesized argument", pos_);
      NodePtr arg = parse_expr();
      expect(')');
      return unary(fn, arg);
    }
    if (name == "pi") return number(3.14159265358979323846);
    int axis = chart_.axis_of(name);
    if (axis < 0)
      throw ParseError("unknown identifier '" + name + "'", start);
    auto n = std::make_shared<Node>(Kind::Coord);
    n->axis = axis;
    n->name = name;
    return n;
  }

  const std::string& text_;
  const Chart& chart_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::constant(double value) { return Expression(number(value)); }

Expression Expression::coordinate(int axis, const std::string& name) {
  auto n = std::make_shared<Node>(Kind::Coord);
  n->axis = axis;
  n->name = name;
  return Expression(std::move(n));
}

Expression Expression::parse(const std::string& text, const Chart& chart) {
  return Expression(Parser(text, chart).parse());
}

double Expression::evaluate(const Point& p) const { return eval_node(*root_, p); }

Expression Expression::derivative(int axis) const {
  return Expression(diff_node(root_, axis));
}

bool Expression::is_zero() const {
  return root_ && root_->kind == Kind::Number && root_->value == 0.0;
}

bool Expression::is_constant(double* value) const {
  if (root_ && root_->kind == Kind::Number) {
    if (value) *value = root_->value;
    return true;
  }
  return false;
}

std::string Expression::to_string() const {
  std::ostringstream out;
  print_node(*root_, out, 0);
  return out.str();
}

Expression Expression::operator+(const Expression& other) const {
  return Expression(binary(Kind::Add, root_, other.root_));
}

Expression Expression::operator-(const Expression& other) const {
  return Expression(binary(Kind::Sub, root_, other.root_));
}

Expression Expression::operator*(const Expression& other) const {
  return Expression(binary(Kind::Mul, root_, other.root_));
}

Expression Expression::negate() const {
  return Expression(unary(Kind::Neg, root_));
}

}  // namespace evoform
