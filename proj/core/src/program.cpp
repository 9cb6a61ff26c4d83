#include "program.hpp"

#include <algorithm>
#include <array>

namespace droot::detail {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::int64_t slot_of(std::span<const std::string> names, const std::string& name, const char* what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw UnboundNameError(std::string("unbound ") + what + " '" + name + "'");
  return it - names.begin();
}

// Evaluation stack sized by max_depth(); shallow programs stay off the heap.
template <class T>
class Stack {
 public:
  explicit Stack(std::size_t depth) {
    if (depth > kInline) {
      heap_.resize(depth);
      data_ = heap_.data();
    }
  }
  void push(T v) { data_[size_++] = std::move(v); }
  T pop() { return std::move(data_[--size_]); }
  T& top() { return data_[size_ - 1]; }

 private:
  static constexpr std::size_t kInline = 32;
  std::array<T, kInline> inline_{};
  std::vector<T> heap_;
  T* data_ = inline_.data();
  std::size_t size_ = 0;
};

}  // namespace

Program::Program(const Expr& expr, std::span<const std::string> variables,
                 std::span<const std::string> exponents) {
  emit(expr, variables, exponents);
  std::size_t depth = 0;
  for (const auto& in : code_) {
    switch (in.op) {
      case OpCode::kConst:
      case OpCode::kVar: ++depth; break;
      case OpCode::kAdd:
      case OpCode::kSub:
      case OpCode::kMul: --depth; break;
      default: break;
    }
    max_depth_ = std::max(max_depth_, depth);
  }
}

void Program::emit(const Expr& e, std::span<const std::string> variables,
                   std::span<const std::string> exponents) {
  std::visit(Overloaded{
                 [&](const Const& c) { code_.push_back({OpCode::kConst, c.value}); },
                 [&](const Var& v) { code_.push_back({OpCode::kVar, slot_of(variables, v.name, "variable")}); },
                 [&](const Pow& p) {
                   emit(p.base, variables, exponents);
                   std::visit(Overloaded{
                                  [&](const LiteralExponent& l) { code_.push_back({OpCode::kPowLit, l.n}); },
                                  [&](const SymbolicExponent& s) {
                                    code_.push_back({OpCode::kPowSym, slot_of(exponents, s.name, "exponent")});
                                  },
                              },
                              p.exponent);
                 },
                 [&](const Neg& n) {
                   emit(n.operand, variables, exponents);
                   code_.push_back({OpCode::kNeg});
                 },
                 [&](const Binary& b) {
                   emit(b.lhs, variables, exponents);
                   emit(b.rhs, variables, exponents);
                   const OpCode op = b.op == BinaryOp::kAdd   ? OpCode::kAdd
                                     : b.op == BinaryOp::kSub ? OpCode::kSub
                                                              : OpCode::kMul;
                   code_.push_back({op});
                 },
             },
             e.node().kind);
}

DigitalRoot Program::eval_dr(std::span<const DigitalRoot> roots, std::span<const std::int64_t> exps) const {
  Stack<DigitalRoot> st(max_depth_);
  for (const auto& in : code_) {
    switch (in.op) {
      case OpCode::kConst: st.push(DigitalRoot::of(in.arg)); break;
      case OpCode::kVar: st.push(roots[static_cast<std::size_t>(in.arg)]); break;
      case OpCode::kPowLit: st.top() = dr_pow(st.top(), in.arg); break;
      case OpCode::kPowSym: st.top() = dr_pow(st.top(), exps[static_cast<std::size_t>(in.arg)]); break;
      case OpCode::kNeg: st.top() = dr_neg(st.top()); break;
      case OpCode::kAdd: {
        auto r = st.pop();
        st.top() = dr_add(st.top(), r);
        break;
      }
      case OpCode::kSub: {
        auto r = st.pop();
        st.top() = dr_sub(st.top(), r);
        break;
      }
      case OpCode::kMul: {
        auto r = st.pop();
        st.top() = dr_mul(st.top(), r);
        break;
      }
    }
  }
  return st.pop();
}

bool checked_mul(__int128 a, __int128 b, __int128& out) { return !__builtin_mul_overflow(a, b, &out); }

bool checked_pow(__int128 base, std::int64_t n, __int128& out) {
  __int128 result = 1;
  while (n > 0) {
    if (n & 1) {
      if (!checked_mul(result, base, result)) return false;
    }
    n >>= 1;
    if (n > 0 && !checked_mul(base, base, base)) return false;
  }
  out = result;
  return true;
}

std::optional<__int128> Program::eval_i128(std::span<const std::int64_t> values,
                                           std::span<const std::int64_t> exps) const {
  Stack<__int128> st(max_depth_);
  for (const auto& in : code_) {
    switch (in.op) {
      case OpCode::kConst: st.push(in.arg); break;
      case OpCode::kVar: st.push(values[static_cast<std::size_t>(in.arg)]); break;
      case OpCode::kPowLit:
      case OpCode::kPowSym: {
        const std::int64_t n = in.op == OpCode::kPowLit ? in.arg : exps[static_cast<std::size_t>(in.arg)];
        if (!checked_pow(st.top(), n, st.top())) return std::nullopt;
        break;
      }
      case OpCode::kNeg:
        if (__builtin_sub_overflow(__int128{0}, st.top(), &st.top())) return std::nullopt;
        break;
      case OpCode::kAdd: {
        auto r = st.pop();
        if (__builtin_add_overflow(st.top(), r, &st.top())) return std::nullopt;
        break;
      }
      case OpCode::kSub: {
        auto r = st.pop();
        if (__builtin_sub_overflow(st.top(), r, &st.top())) return std::nullopt;
        break;
      }
      case OpCode::kMul: {
        auto r = st.pop();
        if (!checked_mul(st.top(), r, st.top())) return std::nullopt;
        break;
      }
    }
  }
  return st.pop();
}

boost::multiprecision::cpp_int Program::eval_big(std::span<const std::int64_t> values,
                                                 std::span<const std::int64_t> exps) const {
  using boost::multiprecision::cpp_int;
  Stack<cpp_int> st(max_depth_);
  for (const auto& in : code_) {
    switch (in.op) {
      case OpCode::kConst: st.push(cpp_int(in.arg)); break;
      case OpCode::kVar: st.push(cpp_int(values[static_cast<std::size_t>(in.arg)])); break;
      case OpCode::kPowLit:
      case OpCode::kPowSym: {
        const std::int64_t n = in.op == OpCode::kPowLit ? in.arg : exps[static_cast<std::size_t>(in.arg)];
        st.top() = boost::multiprecision::pow(st.top(), static_cast<unsigned>(n));
        break;
      }
      case OpCode::kNeg: st.top() = -st.top(); break;
      case OpCode::kAdd: {
        auto r = st.pop();
        st.top() += r;
        break;
      }
      case OpCode::kSub: {
        auto r = st.pop();
        st.top() -= r;
        break;
      }
      case OpCode::kMul: {
        auto r = st.pop();
        st.top() *= r;
        break;
      }
    }
  }
  return st.pop();
}

std::vector<std::string> exponent_names(const Equation& eq) {
  std::vector<std::string> out;
  out.reserve(eq.exponents.size());
  for (const auto& e : eq.exponents) out.push_back(e.name);
  return out;
}

}  // namespace droot::detail
