#include "droot/expr.hpp"

#include <algorithm>

namespace droot {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void push_unique(std::vector<std::string>& names, const std::string& name) {
  if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
}

void collect(const Expr& e, FreeNames& out) {
  std::visit(Overloaded{
                 [](const Const&) {},
                 [&](const Var& v) { push_unique(out.variables, v.name); },
                 [&](const Pow& p) {
                   collect(p.base, out);
                   if (const auto* s = std::get_if<SymbolicExponent>(&p.exponent)) {
                     push_unique(out.exponents, s->name);
                   }
                 },
                 [&](const Neg& n) { collect(n.operand, out); },
                 [&](const Binary& b) {
                   collect(b.lhs, out);
                   collect(b.rhs, out);
                 },
             },
             e.node().kind);
}

// Binding strength used by the printer: sum < term < factor < atom.
enum Level { kSum = 0, kTerm = 1, kFactor = 2, kAtom = 3 };

Level level_of(const Expr& e) {
  return std::visit(Overloaded{
                        [](const Const&) { return kAtom; },
                        [](const Var&) { return kAtom; },
                        [](const Pow&) { return kAtom; },
                        [](const Neg&) { return kFactor; },
                        [](const Binary& b) { return b.op == BinaryOp::kMul ? kTerm : kSum; },
                    },
                    e.node().kind);
}

std::string render(const Expr& e, Level context);

std::string render_exponent(const Exponent& exp) {
  return std::visit(Overloaded{
                        [](const LiteralExponent& l) { return std::to_string(l.n); },
                        [](const SymbolicExponent& s) { return s.name; },
                    },
                    exp);
}

std::string render_node(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const Const& c) { return std::to_string(c.value); },
          [](const Var& v) { return v.name; },
          [](const Pow& p) {
            const auto& base = p.base.node().kind;
            const bool bare = std::holds_alternative<Const>(base) || std::holds_alternative<Var>(base);
            std::string b = bare ? render(p.base, kAtom) : "(" + render(p.base, kSum) + ")";
            return b + "^" + render_exponent(p.exponent);
          },
          [](const Neg& n) { return "-" + render(n.operand, kAtom); },
          [](const Binary& b) {
            switch (b.op) {
              case BinaryOp::kMul: return render(b.lhs, kTerm) + "*" + render(b.rhs, kFactor);
              case BinaryOp::kAdd: return render(b.lhs, kSum) + " + " + render(b.rhs, kTerm);
              case BinaryOp::kSub: return render(b.lhs, kSum) + " - " + render(b.rhs, kTerm);
            }
            return std::string{};
          },
      },
      e.node().kind);
}

std::string render(const Expr& e, Level context) {
  std::string s = render_node(e);
  return level_of(e) < context ? "(" + s + ")" : s;
}

}  // namespace

Expr::Expr() : node_(std::make_shared<const ExprNode>(ExprNode{Const{0}})) {}

Expr Expr::constant(std::int64_t value) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{Const{value}}));
}
Expr Expr::var(std::string name) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{Var{std::move(name)}}));
}
Expr Expr::pow(Expr base, Exponent exponent) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{Pow{std::move(base), std::move(exponent)}}));
}
Expr Expr::neg(Expr operand) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{Neg{std::move(operand)}}));
}
Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{Binary{op, std::move(lhs), std::move(rhs)}}));
}
Expr Expr::add(Expr lhs, Expr rhs) { return binary(BinaryOp::kAdd, std::move(lhs), std::move(rhs)); }
Expr Expr::sub(Expr lhs, Expr rhs) { return binary(BinaryOp::kSub, std::move(lhs), std::move(rhs)); }
Expr Expr::mul(Expr lhs, Expr rhs) { return binary(BinaryOp::kMul, std::move(lhs), std::move(rhs)); }

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  const auto& a = node_->kind;
  const auto& b = other.node_->kind;
  if (a.index() != b.index()) return false;
  return std::visit(
      Overloaded{
          [&](const Const& c) { return c.value == std::get<Const>(b).value; },
          [&](const Var& v) { return v.name == std::get<Var>(b).name; },
          [&](const Pow& p) {
            const auto& q = std::get<Pow>(b);
            return p.exponent == q.exponent && p.base == q.base;
          },
          [&](const Neg& n) { return n.operand == std::get<Neg>(b).operand; },
          [&](const Binary& x) {
            const auto& y = std::get<Binary>(b);
            return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
          },
      },
      a);
}

FreeNames free_names(const Expr& expr) {
  FreeNames out;
  collect(expr, out);
  return out;
}

std::string to_string(const Expr& expr) { return render(expr, kSum); }

std::string to_string(const Equation& eq) { return to_string(eq.lhs) + " = " + to_string(eq.rhs); }

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

DigitalRoot evaluate_dr(const Expr& expr, const Assignment& assignment) {
  return std::visit(
      Overloaded{
          [](const Const& c) { return DigitalRoot::of(c.value); },
          [&](const Var& v) {
            auto it = assignment.roots.find(v.name);
            if (it == assignment.roots.end()) throw UnboundNameError("unbound variable '" + v.name + "'");
            return it->second;
          },
          [&](const Pow& p) {
            const DigitalRoot base = evaluate_dr(p.base, assignment);
            return std::visit(Overloaded{
                                  [&](const LiteralExponent& l) { return dr_pow(base, l.n); },
                                  [&](const SymbolicExponent& s) {
                                    auto it = assignment.exponents.find(s.name);
                                    if (it == assignment.exponents.end()) {
                                      throw UnboundNameError("unbound exponent '" + s.name + "'");
                                    }
                                    return dr_pow(base, it->second);
                                  },
                              },
                              p.exponent);
          },
          [&](const Neg& n) { return dr_neg(evaluate_dr(n.operand, assignment)); },
          [&](const Binary& b) {
            const DigitalRoot l = evaluate_dr(b.lhs, assignment);
            const DigitalRoot r = evaluate_dr(b.rhs, assignment);
            switch (b.op) {
              case BinaryOp::kAdd: return dr_add(l, r);
              case BinaryOp::kSub: return dr_sub(l, r);
              case BinaryOp::kMul: return dr_mul(l, r);
            }
            throw std::logic_error("unknown binary op");
          },
      },
      expr.node().kind);
}

}  // namespace droot
