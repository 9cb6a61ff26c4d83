#pragma once

// Immutable AST for integer polynomial equations whose exponents are either
// literals or named symbols.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "droot/digital_root.hpp"

namespace droot {

struct LiteralExponent {
  std::int64_t n = 1;
  bool operator==(const LiteralExponent&) const = default;
};

/// Named exponent. Its lower bound lives on the Equation, not in the tree.
struct SymbolicExponent {
  std::string name;
  bool operator==(const SymbolicExponent&) const = default;
};

using Exponent = std::variant<LiteralExponent, SymbolicExponent>;

enum class BinaryOp { kAdd, kSub, kMul };

struct ExprNode;

/// Shared handle to an immutable expression node.
class Expr {
 public:
  /// The constant 0.
  Expr();

  static Expr constant(std::int64_t value);
  static Expr var(std::string name);
  static Expr pow(Expr base, Exponent exponent);
  static Expr neg(Expr operand);
  static Expr add(Expr lhs, Expr rhs);
  static Expr sub(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  const ExprNode& node() const { return *node_; }

  /// Structural equality.
  bool operator==(const Expr& other) const;

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const ExprNode> node_;
};

struct Const {
  std::int64_t value = 0;
};
struct Var {
  std::string name;
};
struct Pow {
  Expr base;
  Exponent exponent;
};
struct Neg {
  Expr operand;
};
struct Binary {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};

struct ExprNode {
  std::variant<Const, Var, Pow, Neg, Binary> kind;
};

struct ExponentVar {
  std::string name;
  std::int64_t min = 1;
  bool operator==(const ExponentVar&) const = default;
};

struct Equation {
  Expr lhs;
  Expr rhs;
  /// Base variables in first-appearance order.
  std::vector<std::string> variables;
  /// Symbolic exponents in first-appearance order.
  std::vector<ExponentVar> exponents;

  bool operator==(const Equation&) const = default;
};

/// Free names of an expression, split by position, in first-appearance order.
struct FreeNames {
  std::vector<std::string> variables;
  std::vector<std::string> exponents;
};

FreeNames free_names(const Expr& expr);

/// Canonical text: minimal parentheses, single spaces around + - =, none
/// around * and ^.
std::string to_string(const Expr& expr);
std::string to_string(const Equation& eq);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Thrown for well-formed text that violates a naming or range rule.
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundNameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ExponentMins = std::map<std::string, std::int64_t>;

/// Grammar:
///   equation := expr '=' expr
///   expr     := term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := ['-'] atom
///   atom     := (integer | ident | '(' expr ')') ['^' exponent]
///   exponent := integer | ident
/// A name used in exponent position anywhere is a symbolic exponent
/// everywhere; using it as a base too is an error.
Equation parse_equation(const std::string& text, const ExponentMins& exponent_mins = {});

/// Parses a lone expression with the same grammar.
Expr parse_expression(const std::string& text);

/// Digital-root values bound to every free name of an expression.
struct Assignment {
  std::map<std::string, DigitalRoot> roots;
  std::map<std::string, std::int64_t> exponents;

  bool operator==(const Assignment&) const = default;
};

/// Reduces the expression through the digital-root operations. Throws
/// UnboundNameError if a free name is missing from the assignment.
DigitalRoot evaluate_dr(const Expr& expr, const Assignment& assignment);

}  // namespace droot
