#include "droot/digital_root.hpp"

#include <stdexcept>

namespace droot {

DigitalRoot DigitalRoot::from_value(int value) {
  if (value < 1 || value > 9) {
    throw std::out_of_range("digital root must be in 1..9, got " + std::to_string(value));
  }
  return DigitalRoot(value);
}

std::string ResidueClass::describe() const {
  return std::to_string(root.value()) + "+" + std::to_string(modulus) + "k";
}

int iterated_digit_sum(std::uint64_t n) {
  if (n == 0) throw std::domain_error("iterated digit sum is defined for n >= 1");
  while (n >= 10) {
    std::uint64_t sum = 0;
    for (; n > 0; n /= 10) sum += n % 10;
    n = sum;
  }
  return static_cast<int>(n);
}

DigitalRoot dr_pow(DigitalRoot base, std::int64_t n) {
  if (n < 1) throw std::domain_error("exponent must be >= 1, got " + std::to_string(n));
  int result = 1;
  int b = base.residue();
  while (n > 0) {
    if (n & 1) result = (result * b) % kModulus;
    b = (b * b) % kModulus;
    n >>= 1;
  }
  return DigitalRoot::of(std::int64_t{result});
}

RootSet::RootSet(std::initializer_list<int> values) {
  for (int v : values) insert(DigitalRoot::from_value(v));
}

int RootSet::size() const {
  int n = 0;
  for (unsigned b = bits_; b != 0; b &= b - 1) ++n;
  return n;
}

std::vector<DigitalRoot> RootSet::roots() const {
  std::vector<DigitalRoot> out;
  for (auto r : kAllRoots) {
    if (contains(r)) out.push_back(r);
  }
  return out;
}

std::vector<int> RootSet::values() const {
  std::vector<int> out;
  for (auto r : roots()) out.push_back(r.value());
  return out;
}

std::string RootSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : values()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

ExponentWindow exponent_window(std::int64_t min) {
  if (min < 1) throw std::domain_error("exponent minimum must be >= 1");
  if (min == 1) return {1, 7};
  return {min, min + 5};
}

std::int64_t exponent_representative(std::int64_t e, std::int64_t min) {
  if (e < min) throw std::domain_error("exponent below its minimum");
  const auto w = exponent_window(min);
  if (e <= w.last) return e;
  // Beyond the window every exponent is >= 2, where the period is 6.
  return w.last - 5 + (e - (w.last - 5)) % 6;
}

RootSet attainable_roots(ExponentSpec spec) {
  RootSet out;
  std::int64_t first = spec.value;
  std::int64_t last = spec.value;
  if (spec.kind == ExponentSpec::Kind::kAtLeast) {
    const auto w = exponent_window(spec.value);
    first = w.first;
    last = w.last;
  } else if (spec.value < 1) {
    throw std::domain_error("literal exponent must be >= 1");
  }
  for (auto e = first; e <= last; ++e) {
    for (auto b : kAllRoots) out.insert(dr_pow(b, e));
  }
  return out;
}

PowerTable power_table(std::int64_t max_exponent) {
  if (max_exponent < 2) throw std::domain_error("max_exponent must be >= 2");
  PowerTable table;
  table.rows.reserve(static_cast<std::size_t>(max_exponent - 1));
  for (std::int64_t n = 2; n <= max_exponent; ++n) {
    std::array<DigitalRoot, 9> row{};
    for (std::size_t m = 0; m < 9; ++m) row[m] = dr_pow(kAllRoots[m], n);
    table.rows.push_back(row);
  }
  return table;
}

char op_symbol(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return '+';
    case ArithOp::kSub: return '-';
    case ArithOp::kMul: return 'x';
  }
  return '?';
}

DigitalRoot apply(ArithOp op, DigitalRoot a, DigitalRoot b) {
  switch (op) {
    case ArithOp::kAdd: return dr_add(a, b);
    case ArithOp::kSub: return dr_sub(a, b);
    case ArithOp::kMul: return dr_mul(a, b);
  }
  throw std::logic_error("unknown arithmetic op");
}

OpTable arithmetic_table(ArithOp op) {
  OpTable table{};
  for (std::size_t a = 0; a < 9; ++a) {
    for (std::size_t b = 0; b < 9; ++b) table[a][b] = apply(op, kAllRoots[a], kAllRoots[b]);
  }
  return table;
}

}  // namespace droot
