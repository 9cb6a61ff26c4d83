#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "droot/expr.hpp"

namespace droot {

namespace {

enum class Tok { kInt, kIdent, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kEquals, kEnd };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  std::int64_t value = 0;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kInt: return "integer '" + t.text + "'";
    case Tok::kIdent: return "identifier '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      Token t{Tok::kInt, start, text.substr(start, i - start)};
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc{}) throw ParseError(start, "integer constant '" + t.text + "' out of range");
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Tok::kIdent, start, text.substr(start, i - start)});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '=': kind = Tok::kEquals; break;
      default: throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, start, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::kEnd, text.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool plus = next().kind == Tok::kPlus;
      Expr rhs = term();
      lhs = plus ? Expr::add(std::move(lhs), std::move(rhs)) : Expr::sub(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    next();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(peek().pos, expected + ", found " + describe(peek()));
  }

  const Token& peek() const { return tokens_[pos_]; }

 private:
  const Token& next() { return tokens_[pos_++]; }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Tok::kStar) {
      next();
      lhs = Expr::mul(std::move(lhs), factor());
    }
    return lhs;
  }

  Expr factor() {
    if (peek().kind == Tok::kMinus) {
      next();
      return Expr::neg(atom());
    }
    return atom();
  }

  Expr atom() {
    Expr base = primary();
    if (peek().kind != Tok::kCaret) return base;
    next();
    const Token& t = peek();
    if (t.kind == Tok::kInt) {
      next();
      if (t.value < 1) throw SemanticError("literal exponent must be >= 1, got " + t.text);
      return Expr::pow(std::move(base), LiteralExponent{t.value});
    }
    if (t.kind == Tok::kIdent) {
      next();
      return Expr::pow(std::move(base), SymbolicExponent{t.text});
    }
    fail("expected exponent (integer or identifier)");
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInt:
        next();
        return Expr::constant(t.value);
      case Tok::kIdent:
        next();
        return Expr::var(t.text);
      case Tok::kLParen: {
        next();
        Expr inner = expr();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      default:
        fail("expected integer, identifier or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void check_disjoint(const FreeNames& names) {
  for (const auto& e : names.exponents) {
    if (std::find(names.variables.begin(), names.variables.end(), e) != names.variables.end()) {
      throw SemanticError("name '" + e + "' is used both as a variable and as an exponent");
    }
  }
}

void append_unique(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& n : from) {
    if (std::find(into.begin(), into.end(), n) == into.end()) into.push_back(n);
  }
}

}  // namespace

Expr parse_expression(const std::string& text) {
  Parser p(text);
  Expr e = p.expr();
  if (p.peek().kind != Tok::kEnd) p.fail("expected operator or end of input");
  check_disjoint(free_names(e));
  return e;
}

Equation parse_equation(const std::string& text, const ExponentMins& exponent_mins) {
  Parser p(text);
  Expr lhs = p.expr();
  p.expect(Tok::kEquals, "'='");
  Expr rhs = p.expr();
  if (p.peek().kind != Tok::kEnd) p.fail("expected operator or end of input");

  FreeNames names = free_names(lhs);
  const FreeNames right = free_names(rhs);
  append_unique(names.variables, right.variables);
  append_unique(names.exponents, right.exponents);
  check_disjoint(names);

  Equation eq{std::move(lhs), std::move(rhs), std::move(names.variables), {}};
  for (const auto& name : names.exponents) {
    std::int64_t min = 1;
    if (auto it = exponent_mins.find(name); it != exponent_mins.end()) min = it->second;
    if (min < 1) throw SemanticError("minimum for exponent '" + name + "' must be >= 1");
    eq.exponents.push_back({name, min});
  }
  for (const auto& [name, min] : exponent_mins) {
    if (std::none_of(eq.exponents.begin(), eq.exponents.end(),
                     [&](const ExponentVar& e) { return e.name == name; })) {
      throw SemanticError("minimum given for '" + name + "', which is not an exponent of the equation");
    }
  }
  return eq;
}

}  // namespace droot
