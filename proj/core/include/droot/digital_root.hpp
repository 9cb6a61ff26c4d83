#pragma once

// Digital-root calculus: integers reduced to the nine classes m + 9k, with
// the representative 9 standing for residue 0.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace droot {

class DigitalRoot {
 public:
  /// Digital root of an arbitrary integer. Negative values and zero map
  /// through their residue mod 9, so of(-1) == 8 and of(0) == 9.
  static constexpr DigitalRoot of(std::int64_t n) {
    std::int64_t r = n % 9;
    if (r <= 0) r += 9;
    return DigitalRoot(static_cast<int>(r));
  }

  static constexpr DigitalRoot of(__int128 n) {
    auto r = static_cast<int>(n % 9);
    if (r <= 0) r += 9;
    return DigitalRoot(r);
  }

  /// Wraps a value already in 1..9; throws std::out_of_range otherwise.
  static DigitalRoot from_value(int value);

  constexpr DigitalRoot() = default;

  constexpr int value() const { return value_; }
  /// Residue in 0..8.
  constexpr int residue() const { return value_ % 9; }

  constexpr auto operator<=>(const DigitalRoot&) const = default;

 private:
  explicit constexpr DigitalRoot(int v) : value_(static_cast<std::int8_t>(v)) {}

  std::int8_t value_ = 9;
};

inline constexpr int kModulus = 9;

/// All nine roots in ascending order.
inline constexpr std::array<DigitalRoot, 9> kAllRoots = [] {
  std::array<DigitalRoot, 9> roots{};
  for (int v = 1; v <= 9; ++v) roots[v - 1] = DigitalRoot::of(std::int64_t{v});
  return roots;
}();

/// The residue class root + 9k.
struct ResidueClass {
  DigitalRoot root;
  int modulus = kModulus;

  bool contains(std::int64_t n) const { return DigitalRoot::of(n) == root; }
  std::string describe() const;  // e.g. "4+9k"
};

constexpr DigitalRoot digital_root(std::int64_t n) { return DigitalRoot::of(n); }

/// Iterated decimal digit sum; defined for n >= 1 only.
int iterated_digit_sum(std::uint64_t n);

constexpr DigitalRoot dr_add(DigitalRoot a, DigitalRoot b) {
  return DigitalRoot::of(std::int64_t{a.value() + b.value()});
}
constexpr DigitalRoot dr_sub(DigitalRoot a, DigitalRoot b) {
  return DigitalRoot::of(std::int64_t{a.value() - b.value()});
}
constexpr DigitalRoot dr_mul(DigitalRoot a, DigitalRoot b) {
  return DigitalRoot::of(std::int64_t{a.value() * b.value()});
}
/// Negation, read off the subtraction table as 9 - a.
constexpr DigitalRoot dr_neg(DigitalRoot a) {
  return dr_sub(DigitalRoot::of(std::int64_t{9}), a);
}

/// base^n reduced mod 9 by square-and-multiply. Throws std::domain_error
/// for n < 1.
DigitalRoot dr_pow(DigitalRoot base, std::int64_t n);

/// Small set of digital roots stored as a bitmask over 1..9.
class RootSet {
 public:
  constexpr RootSet() = default;
  RootSet(std::initializer_list<int> values);

  static constexpr RootSet all() { return RootSet(0x3FE); }

  constexpr void insert(DigitalRoot r) { bits_ |= static_cast<std::uint16_t>(1u << r.value()); }
  constexpr bool contains(DigitalRoot r) const { return (bits_ >> r.value()) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool full() const { return bits_ == all().bits_; }
  int size() const;

  std::vector<DigitalRoot> roots() const;
  std::vector<int> values() const;
  std::string to_string() const;  // "{1,4,7,9}"

  constexpr RootSet operator|(RootSet o) const { return RootSet(bits_ | o.bits_); }
  constexpr RootSet operator&(RootSet o) const { return RootSet(bits_ & o.bits_); }
  constexpr bool operator==(const RootSet&) const = default;

 private:
  explicit constexpr RootSet(unsigned bits) : bits_(static_cast<std::uint16_t>(bits)) {}

  std::uint16_t bits_ = 0;
};

/// Either a literal exponent n or the constraint "n >= min".
struct ExponentSpec {
  enum class Kind { kLiteral, kAtLeast };
  Kind kind = Kind::kLiteral;
  std::int64_t value = 1;

  static ExponentSpec literal(std::int64_t n) { return {Kind::kLiteral, n}; }
  static ExponentSpec at_least(std::int64_t c) { return {Kind::kAtLeast, c}; }
};

/// Representative exponents that cover every exponent >= min: {min..min+5}
/// when min >= 2 (powers mod 9 are 6-periodic from exponent 2), {1..7}
/// when min == 1.
struct ExponentWindow {
  std::int64_t first = 1;
  std::int64_t last = 7;

  std::int64_t size() const { return last - first + 1; }
};

ExponentWindow exponent_window(std::int64_t min);

/// Maps an actual exponent e >= min onto its representative in
/// exponent_window(min), preserving dr_pow for every base.
std::int64_t exponent_representative(std::int64_t e, std::int64_t min);

RootSet attainable_roots(ExponentSpec spec);

/// Rows of digital roots of m^n for n = 2..max_exponent and m = 1..9.
struct PowerTable {
  std::int64_t first_exponent = 2;
  std::vector<std::array<DigitalRoot, 9>> rows;

  std::int64_t last_exponent() const {
    return first_exponent + static_cast<std::int64_t>(rows.size()) - 1;
  }
  const std::array<DigitalRoot, 9>& row(std::int64_t exponent) const {
    return rows.at(static_cast<std::size_t>(exponent - first_exponent));
  }
};

PowerTable power_table(std::int64_t max_exponent);

enum class ArithOp { kAdd, kSub, kMul };

char op_symbol(ArithOp op);
DigitalRoot apply(ArithOp op, DigitalRoot a, DigitalRoot b);

/// cells[a-1][b-1] = a op b.
using OpTable = std::array<std::array<DigitalRoot, 9>, 9>;
OpTable arithmetic_table(ArithOp op);

}  // namespace droot
