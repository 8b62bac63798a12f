#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "nilt/evaluator.hpp"

namespace nilt {

/// First grammar violation, with a 1-based column. parse() throws this; it
/// never takes the process down.
class ParseError : public Error {
public:
  ParseError(std::size_t position, std::string expected, std::string found);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

private:
  std::size_t position_;
  std::string expected_, found_;
};

/// Evaluation-time domain failure (division by zero, ln 0, ...) pointing at
/// the offending node's column.
class EvalError : public DomainError {
public:
  EvalError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A parsed F(s) expression over +,-,*,/,^, the variable s, the constants
/// pi and gamma, and sqrt/exp/ln/sin/cos/sinh/cosh/erf. Number literals keep
/// their decimal text and are re-read at the evaluation precision.
///
/// Grammar:
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | primary ('^' factor)?
///   primary := number | 's' | 'pi' | 'gamma' | func '(' expr ')' | '(' expr ')'
///
/// '^' is right-associative; unary minus binds looser, so -s^2 = -(s^2).
/// Integer exponents with |k| <= 64 use repeated multiplication, everything
/// else goes through exp(b ln a) on the principal branch.
class Expr {
public:
  static Expr parse(std::string_view text);  // throws ParseError

  Complex eval(const Complex& s, const PrecisionContext& ctx) const;

  const std::string& text() const noexcept { return text_; }

  /// Evaluator closure bound to a fixed context.
  TransformFn evaluator(const PrecisionContext& ctx) const;
  /// Evaluator that follows the precision of each argument, so inverters may
  /// call it with guard digits; this is what the CLI feeds them.
  TransformFn evaluator() const;

  Expr(const Expr&);
  Expr(Expr&&) noexcept;
  Expr& operator=(const Expr&);
  Expr& operator=(Expr&&) noexcept;
  ~Expr();

  struct Node;

private:
  Expr();
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace nilt
