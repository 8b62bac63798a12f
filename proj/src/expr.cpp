#include "nilt/expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace nilt {

ParseError::ParseError(std::size_t position, std::string expected,
                       std::string found)
    : Error("parse error at column " + std::to_string(position) +
            ": expected " + expected + ", found " + found),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

EvalError::EvalError(std::size_t position, const std::string& what)
    : DomainError("evaluation error at column " + std::to_string(position) +
                  ": " + what),
      position_(position) {}

namespace {

enum class Fn { Sqrt, Exp, Ln, Sin, Cos, Sinh, Cosh, Erf };

bool function_from_name(const std::string& name, Fn& out) {
  if (name == "sqrt") out = Fn::Sqrt;
  else if (name == "exp") out = Fn::Exp;
  else if (name == "ln") out = Fn::Ln;
  else if (name == "sin") out = Fn::Sin;
  else if (name == "cos") out = Fn::Cos;
  else if (name == "sinh") out = Fn::Sinh;
  else if (name == "cosh") out = Fn::Cosh;
  else if (name == "erf") out = Fn::Erf;
  else return false;
  return true;
}

}  // namespace

struct Expr::Node {
  enum class Kind {
    Number,   // literal text preserved in `literal`
    Variable, // s
    Pi,
    Gamma,
    Negate,   // child a
    Add, Sub, Mul, Div, Pow,  // children a, b
    Call,     // fn, child a
  };

  Kind kind;
  std::size_t position;  // 1-based column of the node's first token
  std::string literal;
  Fn fn = Fn::Sqrt;
  std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Token {
  enum class Kind { Number, Ident, Op, End };
  Kind kind;
  std::string text;
  std::size_t position;  // 1-based column
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, "end of input", pos_ + 1};
      return;
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t mark = pos_;
        ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
          ++pos_;
        }
        if (pos_ < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          while (pos_ < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
          }
        } else {
          pos_ = mark;  // bare 'e' belongs to whatever follows
        }
      }
      std::string text(text_.substr(start, pos_ - start));
      if (text == ".") {
        current_ = {Token::Kind::Op, ".", start + 1};
        return;
      }
      current_ = {Token::Kind::Number, std::move(text), start + 1};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      current_ = {Token::Kind::Ident,
                  std::string(text_.substr(start, pos_ - start)), start + 1};
      return;
    }
    ++pos_;
    current_ = {Token::Kind::Op, std::string(1, c), start + 1};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Token::Kind::End, "", 1};
};

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  NodePtr parse() {
    NodePtr root = parse_expr();
    const Token& t = lexer_.peek();
    if (t.kind != Token::Kind::End) {
      throw ParseError(t.position, "end of input", describe(t));
    }
    return root;
  }

private:
  static std::string describe(const Token& t) {
    if (t.kind == Token::Kind::End) return "end of input";
    return "\"" + t.text + "\"";
  }

  bool at_op(const char* op) const {
    const Token& t = lexer_.peek();
    return t.kind == Token::Kind::Op && t.text == op;
  }

  Token expect_op(const char* op, const char* what) {
    if (!at_op(op)) {
      throw ParseError(lexer_.peek().position, what, describe(lexer_.peek()));
    }
    return lexer_.take();
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (at_op("+") || at_op("-")) {
      Token op = lexer_.take();
      NodePtr rhs = parse_term();
      auto node = std::make_shared<Node>();
      node->kind = op.text == "+" ? Node::Kind::Add : Node::Kind::Sub;
      node->position = op.position;
      node->a = std::move(lhs);
      node->b = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (at_op("*") || at_op("/")) {
      Token op = lexer_.take();
      NodePtr rhs = parse_factor();
      auto node = std::make_shared<Node>();
      node->kind = op.text == "*" ? Node::Kind::Mul : Node::Kind::Div;
      node->position = op.position;
      node->a = std::move(lhs);
      node->b = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  // factor := '-' factor | primary ('^' factor)?
  // Unary minus binds looser than '^', so -s^2 parses as -(s^2).
  NodePtr parse_factor() {
    if (at_op("-")) {
      Token op = lexer_.take();
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Negate;
      node->position = op.position;
      node->a = parse_factor();
      return node;
    }
    NodePtr base = parse_primary();
    if (at_op("^")) {
      Token op = lexer_.take();
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Pow;
      node->position = op.position;
      node->a = std::move(base);
      node->b = parse_factor();  // right-associative
      return node;
    }
    return base;
  }

  NodePtr parse_primary() {
    const Token t = lexer_.peek();
    switch (t.kind) {
      case Token::Kind::Number: {
        lexer_.take();
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::Number;
        node->position = t.position;
        node->literal = t.text;
        return node;
      }
      case Token::Kind::Ident: {
        lexer_.take();
        auto node = std::make_shared<Node>();
        node->position = t.position;
        if (t.text == "s") {
          node->kind = Node::Kind::Variable;
          return node;
        }
        if (t.text == "pi") {
          node->kind = Node::Kind::Pi;
          return node;
        }
        if (t.text == "gamma") {
          node->kind = Node::Kind::Gamma;
          return node;
        }
        Fn fn;
        if (!function_from_name(t.text, fn)) {
          throw ParseError(t.position,
                           "number, s, pi, gamma, a function, or \"(\"",
                           "unknown identifier \"" + t.text + "\"");
        }
        node->kind = Node::Kind::Call;
        node->fn = fn;
        node->literal = t.text;
        expect_op("(", "\"(\"");
        node->a = parse_expr();
        expect_op(")", "\")\"");
        return node;
      }
      case Token::Kind::Op:
        if (t.text == "(") {
          lexer_.take();
          NodePtr inner = parse_expr();
          expect_op(")", "\")\"");
          return inner;
        }
        break;
      case Token::Kind::End:
        break;
    }
    throw ParseError(t.position, "number, s, pi, gamma, a function, or \"(\"",
                     describe(t));
  }

  Lexer lexer_;
};

Complex eval_node(const Node& node, const Complex& s,
                  const PrecisionContext& ctx);

Complex eval_pow(const Node& node, const Complex& s,
                 const PrecisionContext& ctx) {
  Complex base = eval_node(*node.a, s, ctx);
  Complex exponent = eval_node(*node.b, s, ctx);
  if (exponent.is_real() && exponent.re().is_integer()) {
    long k = exponent.re().to_long();
    if (k >= -64 && k <= 64) {
      if (base.is_zero() && k < 0) {
        throw EvalError(node.position, "0 raised to a negative power");
      }
      return pow_int(base, k);
    }
  }
  if (base.is_zero()) {
    if (exponent.re().sign() > 0) {
      return Complex::with_bits(base.precision());
    }
    throw EvalError(node.position, "0 raised to a non-positive power");
  }
  return exp(exponent * log(base));
}

Complex eval_node(const Node& node, const Complex& s,
                  const PrecisionContext& ctx) {
  switch (node.kind) {
    case Node::Kind::Number:
      return Complex(Real::from_string(ctx, node.literal));
    case Node::Kind::Variable:
      return Complex(ctx, s);
    case Node::Kind::Pi:
      return Complex(const_pi(ctx));
    case Node::Kind::Gamma:
      return Complex(const_euler_gamma(ctx));
    case Node::Kind::Negate:
      return -eval_node(*node.a, s, ctx);
    case Node::Kind::Add:
      return eval_node(*node.a, s, ctx) + eval_node(*node.b, s, ctx);
    case Node::Kind::Sub:
      return eval_node(*node.a, s, ctx) - eval_node(*node.b, s, ctx);
    case Node::Kind::Mul:
      return eval_node(*node.a, s, ctx) * eval_node(*node.b, s, ctx);
    case Node::Kind::Div: {
      Complex num = eval_node(*node.a, s, ctx);
      Complex den = eval_node(*node.b, s, ctx);
      if (den.is_zero()) {
        throw EvalError(node.position, "division by zero");
      }
      return num / den;
    }
    case Node::Kind::Pow:
      return eval_pow(node, s, ctx);
    case Node::Kind::Call: {
      Complex argv = eval_node(*node.a, s, ctx);
      try {
        switch (node.fn) {
          case Fn::Sqrt: return sqrt(argv);
          case Fn::Exp: return exp(argv);
          case Fn::Ln: return log(argv);
          case Fn::Sin: return sin(argv);
          case Fn::Cos: return cos(argv);
          case Fn::Sinh: return sinh(argv);
          case Fn::Cosh: return cosh(argv);
          case Fn::Erf: return erf(argv, ctx);
        }
      } catch (const DomainError& e) {
        throw EvalError(node.position, node.literal + ": " + e.what());
      } catch (const ConvergenceError& e) {
        throw EvalError(node.position, node.literal + ": " + e.what());
      }
      throw EvalError(node.position, "unhandled function");
    }
  }
  throw EvalError(node.position, "unhandled node kind");
}

}  // namespace

Expr::Expr() = default;
Expr::Expr(const Expr&) = default;
Expr::Expr(Expr&&) noexcept = default;
Expr& Expr::operator=(const Expr&) = default;
Expr& Expr::operator=(Expr&&) noexcept = default;
Expr::~Expr() = default;

Expr Expr::parse(std::string_view text) {
  Parser parser(text);
  Expr e;
  e.text_ = std::string(text);
  e.root_ = parser.parse();
  return e;
}

Complex Expr::eval(const Complex& s, const PrecisionContext& ctx) const {
  return eval_node(*root_, s, ctx);
}

TransformFn Expr::evaluator(const PrecisionContext& ctx) const {
  auto root = root_;
  return [root, ctx](const Complex& s) {
    return eval_node(*root, s, ctx);
  };
}

TransformFn Expr::evaluator() const {
  auto root = root_;
  return [root](const Complex& s) {
    constexpr long double kLog10Of2 = 0.30102999566398119521373889472449303L;
    long digits = static_cast<long>(
        static_cast<long double>(s.precision()) * kLog10Of2);
    if (digits < kMinDecimalDigits) digits = kMinDecimalDigits;
    return eval_node(*root, s, PrecisionContext(digits));
  };
}

}  // namespace nilt
