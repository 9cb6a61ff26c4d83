#pragma once

// Expressions flattened to postfix over slot indices so the sieve and the
// integer oracle can evaluate millions of points without map lookups.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "droot/expr.hpp"

namespace droot::detail {

enum class OpCode : std::uint8_t { kConst, kVar, kPowLit, kPowSym, kNeg, kAdd, kSub, kMul };

struct Instr {
  OpCode op;
  std::int64_t arg = 0;  // constant, slot index or literal exponent
};

class Program {
 public:
  /// Resolves names against the given slot lists; throws UnboundNameError
  /// for names absent from them.
  Program(const Expr& expr, std::span<const std::string> variables,
          std::span<const std::string> exponents);

  /// Roots indexed by variable slot, exponent values by exponent slot.
  DigitalRoot eval_dr(std::span<const DigitalRoot> roots, std::span<const std::int64_t> exps) const;

  /// Exact value in 128 bits, or nullopt if an intermediate overflows.
  std::optional<__int128> eval_i128(std::span<const std::int64_t> values,
                                    std::span<const std::int64_t> exps) const;

  boost::multiprecision::cpp_int eval_big(std::span<const std::int64_t> values,
                                          std::span<const std::int64_t> exps) const;

  std::size_t max_depth() const { return max_depth_; }

 private:
  void emit(const Expr& e, std::span<const std::string> variables, std::span<const std::string> exponents);

  std::vector<Instr> code_;
  std::size_t max_depth_ = 0;
};

std::vector<std::string> exponent_names(const Equation& eq);

/// a * b with overflow detection; false on overflow.
bool checked_mul(__int128 a, __int128 b, __int128& out);
bool checked_pow(__int128 base, std::int64_t n, __int128& out);

}  // namespace droot::detail
