#include "droot/digital_root.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace droot {
namespace {

DigitalRoot R(int v) { return DigitalRoot::from_value(v); }

TEST(DigitalRootTest, WorkedExamples) {
  EXPECT_EQ(digital_root(123456789).value(), 9);
  EXPECT_EQ(digital_root(888).value(), 6);
  EXPECT_EQ(digital_root(100).value(), 1);
  EXPECT_EQ(digital_root(-1).value(), 8);
  EXPECT_EQ(digital_root(0).value(), 9);
  EXPECT_EQ(digital_root(-9).value(), 9);
  EXPECT_EQ(digital_root(INT64_MIN).value(), test::digit_sum_root(test::BigInt(INT64_MIN)));
  EXPECT_EQ(digital_root(INT64_MAX).value(), test::digit_sum_root(test::BigInt(INT64_MAX)));
}

TEST(DigitalRootTest, FromValueRejectsOutOfRange) {
  EXPECT_THROW(DigitalRoot::from_value(0), std::out_of_range);
  EXPECT_THROW(DigitalRoot::from_value(10), std::out_of_range);
  EXPECT_EQ(DigitalRoot::from_value(9).residue(), 0);
}

TEST(DigitalRootTest, MatchesClosedFormAndDigitSum) {
  for (std::int64_t n = -5000; n <= 5000; ++n) {
    ASSERT_EQ(digital_root(n).value(), test::closed_form_root(n)) << n;
    if (n >= 1) ASSERT_EQ(digital_root(n).value(), iterated_digit_sum(static_cast<std::uint64_t>(n))) << n;
  }
  EXPECT_THROW(iterated_digit_sum(0), std::domain_error);
}

TEST(DigitalRootTest, ResidueClassMembership) {
  const ResidueClass four{R(4)};
  EXPECT_EQ(four.describe(), "4+9k");
  for (std::int64_t k = -3; k <= 3; ++k) EXPECT_TRUE(four.contains(4 + 9 * k));
  EXPECT_FALSE(four.contains(5));
  // Every integer lands in exactly one class.
  for (std::int64_t n = -50; n <= 50; ++n) {
    int hits = 0;
    for (auto r : kAllRoots) hits += ResidueClass{r}.contains(n) ? 1 : 0;
    EXPECT_EQ(hits, 1) << n;
  }
}

TEST(DigitalRootArithmeticTest, TableExamples) {
  EXPECT_EQ(dr_add(R(9), R(1)), R(1));
  EXPECT_EQ(dr_add(R(8), R(2)), R(1));
  EXPECT_EQ(dr_add(R(1), R(1)), R(2));
  EXPECT_EQ(dr_sub(R(1), R(2)), R(8));
  EXPECT_EQ(dr_sub(R(5), R(5)), R(9));
  EXPECT_EQ(dr_sub(R(9), R(1)), R(8));
  EXPECT_EQ(dr_mul(R(4), R(7)), R(1));
  EXPECT_EQ(dr_mul(R(5), R(2)), R(1));
  EXPECT_EQ(dr_mul(R(6), R(9)), R(9));
  EXPECT_EQ(dr_neg(R(1)), R(8));
  EXPECT_EQ(dr_neg(R(9)), R(9));
}

TEST(DigitalRootArithmeticTest, NineAbsorptionAndCommutativity) {
  for (auto x : kAllRoots) {
    EXPECT_EQ(dr_mul(x, R(9)), R(9));
    EXPECT_EQ(dr_add(x, R(9)), x);
    for (auto y : kAllRoots) {
      EXPECT_EQ(dr_add(x, y), dr_add(y, x));
      EXPECT_EQ(dr_mul(x, y), dr_mul(y, x));
      EXPECT_EQ(dr_add(dr_sub(x, y), y), x);
    }
  }
}

TEST(DigitalRootArithmeticTest, MatchesTranscribedArithmeticTables) {
  const auto cells = test::load_arithmetic_tables();
  ASSERT_EQ(cells.size(), 243u);
  for (const auto& c : cells) {
    const ArithOp op = c.op == '+' ? ArithOp::kAdd : c.op == '-' ? ArithOp::kSub : ArithOp::kMul;
    EXPECT_EQ(apply(op, R(c.a), R(c.b)).value(), c.value) << c.a << c.op << c.b;
    EXPECT_EQ(arithmetic_table(op)[c.a - 1][c.b - 1].value(), c.value);
  }
}

TEST(DigitalRootPowTest, Examples) {
  EXPECT_EQ(dr_pow(R(5), 5), R(2));
  EXPECT_EQ(dr_pow(R(8), 2), R(1));
  EXPECT_EQ(dr_pow(R(3), 1), R(3));
  EXPECT_EQ(dr_pow(R(3), 7), R(9));
  EXPECT_EQ(dr_pow(R(1), 1000), R(1));
  const test::BigInt residue = boost::multiprecision::powm(test::BigInt(2), test::BigInt(INT64_MAX), test::BigInt(9));
  EXPECT_EQ(dr_pow(R(2), INT64_MAX).value(), residue == 0 ? 9 : static_cast<int>(residue));
  EXPECT_THROW(dr_pow(R(2), 0), std::domain_error);
  EXPECT_THROW(dr_pow(R(2), -3), std::domain_error);
}

TEST(DigitalRootPowTest, PeriodSix) {
  for (auto b : kAllRoots) {
    for (std::int64_t n = 2; n <= 40; ++n) EXPECT_EQ(dr_pow(b, n), dr_pow(b, n + 6)) << b.value() << "^" << n;
    const bool multiple_of_three = b.value() % 3 == 0;
    if (!multiple_of_three) EXPECT_EQ(dr_pow(b, 1), dr_pow(b, 7)) << b.value();
  }
  EXPECT_NE(dr_pow(R(3), 1), dr_pow(R(3), 7));
  EXPECT_NE(dr_pow(R(6), 1), dr_pow(R(6), 7));
  EXPECT_EQ(dr_pow(R(9), 1), dr_pow(R(9), 7));
}

TEST(DigitalRootPowTest, HomomorphismAgainstExactPowers) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> xs(1, 1000);
  std::uniform_int_distribution<std::int64_t> ns(1, 20);
  for (int i = 0; i < 2000; ++i) {
    const auto x = xs(rng);
    const auto n = ns(rng);
    const test::BigInt exact = boost::multiprecision::pow(test::BigInt(x), static_cast<unsigned>(n));
    ASSERT_EQ(dr_pow(digital_root(x), n).value(), test::digit_sum_root(exact)) << x << "^" << n;
  }
}

TEST(DigitalRootPowTest, HomomorphismForSumsDifferencesProducts) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> xs(-1'000'000, 1'000'000);
  for (int i = 0; i < 20000; ++i) {
    const auto x = xs(rng);
    const auto y = xs(rng);
    ASSERT_EQ(digital_root(x + y), dr_add(digital_root(x), digital_root(y)));
    ASSERT_EQ(digital_root(x - y), dr_sub(digital_root(x), digital_root(y)));
    ASSERT_EQ(digital_root(x * y), dr_mul(digital_root(x), digital_root(y)));
  }
}

TEST(AttainableRootsTest, LiteralAndConstrainedExponents) {
  EXPECT_EQ(attainable_roots(ExponentSpec::literal(2)), (RootSet{1, 4, 7, 9}));
  EXPECT_EQ(attainable_roots(ExponentSpec::literal(3)), (RootSet{1, 8, 9}));
  EXPECT_EQ(attainable_roots(ExponentSpec::at_least(3)), (RootSet{1, 2, 4, 5, 7, 8, 9}));
  EXPECT_EQ(attainable_roots(ExponentSpec::literal(1)), RootSet::all());
  EXPECT_EQ(attainable_roots(ExponentSpec::at_least(1)), RootSet::all());
  EXPECT_EQ(attainable_roots(ExponentSpec::at_least(2)), (RootSet{1, 2, 4, 5, 7, 8, 9}));
  EXPECT_THROW(attainable_roots(ExponentSpec::literal(0)), std::domain_error);
}

TEST(AttainableRootsTest, ConstraintMatchesLongUnion) {
  // Union over a long run of exponents, no periodicity assumed.
  for (std::int64_t c = 1; c <= 10; ++c) {
    RootSet expected;
    for (std::int64_t e = c; e <= c + 60; ++e) {
      for (int b = 1; b <= 9; ++b) {
        expected.insert(DigitalRoot::from_value(test::digit_sum_root(boost::multiprecision::pow(test::BigInt(b), e))));
      }
    }
    EXPECT_EQ(attainable_roots(ExponentSpec::at_least(c)), expected) << c;
  }
}

TEST(ExponentWindowTest, RepresentativesPreservePowers) {
  EXPECT_EQ(exponent_window(1).first, 1);
  EXPECT_EQ(exponent_window(1).last, 7);
  EXPECT_EQ(exponent_window(3).first, 3);
  EXPECT_EQ(exponent_window(3).last, 8);
  EXPECT_THROW(exponent_window(0), std::domain_error);
  for (std::int64_t min = 1; min <= 5; ++min) {
    const auto w = exponent_window(min);
    for (std::int64_t e = min; e <= 60; ++e) {
      const auto rep = exponent_representative(e, min);
      ASSERT_GE(rep, w.first);
      ASSERT_LE(rep, w.last);
      for (auto b : kAllRoots) ASSERT_EQ(dr_pow(b, e), dr_pow(b, rep)) << b.value() << "^" << e;
    }
  }
  EXPECT_THROW(exponent_representative(2, 3), std::domain_error);
}

TEST(PowerTableTest, MatchesTranscribedTable) {
  const auto golden = test::load_powers_table();
  ASSERT_EQ(golden.size(), 44u);
  const PowerTable table = power_table(45);
  EXPECT_EQ(table.first_exponent, 2);
  EXPECT_EQ(table.last_exponent(), 45);
  for (const auto& [n, row] : golden) {
    for (std::size_t m = 0; m < 9; ++m) EXPECT_EQ(table.row(n)[m].value(), row[m]) << "X^" << n << " class " << m + 1;
  }
}

TEST(PowerTableTest, RowsAndErrors) {
  const PowerTable t = power_table(45);
  auto values = [](const std::array<DigitalRoot, 9>& row) {
    std::vector<int> v;
    for (auto r : row) v.push_back(r.value());
    return v;
  };
  EXPECT_EQ(values(t.row(6)), (std::vector<int>{1, 1, 9, 1, 1, 9, 1, 1, 9}));
  EXPECT_EQ(values(t.row(45)), (std::vector<int>{1, 8, 9, 1, 8, 9, 1, 8, 9}));
  EXPECT_EQ(t.row(2), t.row(8));
  EXPECT_THROW(power_table(1), std::domain_error);
  EXPECT_EQ(power_table(100).rows.size(), 99u);
}

TEST(RootSetTest, Basics) {
  RootSet s{4, 1, 9};
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.to_string(), "{1,4,9}");
  EXPECT_TRUE(s.contains(DigitalRoot::from_value(4)));
  EXPECT_FALSE(s.contains(DigitalRoot::from_value(5)));
  EXPECT_TRUE(RootSet::all().full());
  EXPECT_EQ(RootSet::all().size(), 9);
  EXPECT_TRUE(RootSet{}.empty());
  EXPECT_EQ((s & RootSet{1, 2}), RootSet{1});
  EXPECT_THROW((RootSet{0}), std::out_of_range);
}

}  // namespace
}  // namespace droot
