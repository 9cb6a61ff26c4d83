#include "droot/oracle.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace droot {
namespace {

bool contains(const SearchResult& r, std::vector<std::int64_t> values, std::vector<std::int64_t> exps = {}) {
  return std::find(r.solutions.begin(), r.solutions.end(), Solution{std::move(values), std::move(exps)}) !=
         r.solutions.end();
}

void expect_exact(const SearchResult& r) {
  const Equation& eq = r.equation;
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    const Solution& s = r.solutions[i];
    std::map<std::string, test::BigInt> vars;
    std::map<std::string, unsigned> exps;
    for (std::size_t k = 0; k < eq.variables.size(); ++k) vars[eq.variables[k]] = s.values[k];
    for (std::size_t k = 0; k < eq.exponents.size(); ++k) exps[eq.exponents[k].name] = static_cast<unsigned>(s.exponents[k]);
    EXPECT_EQ(test::exact_value(eq.lhs, vars, exps), test::exact_value(eq.rhs, vars, exps));
    for (std::size_t k = 0; k < s.values.size(); ++k) {
      EXPECT_EQ(r.signatures[i].roots[k].value(), test::closed_form_root(s.values[k]));
    }
  }
}

TEST(SearchTest, MordellSmallBox) {
  const auto r = search(parse_equation("x^2 = y^3 - 2"), 100, 1);
  EXPECT_TRUE(contains(r, {5, 3}));
  EXPECT_TRUE(contains(r, {-5, 3}));
  EXPECT_EQ(r.solutions.size(), 2u);  // y^3 <= 10^6 bounds x^2 well inside the box
  EXPECT_EQ(r.points, 201u * 201u);
  expect_exact(r);
  EXPECT_EQ(r.signatures[1], (RootTuple{{DigitalRoot::from_value(5), DigitalRoot::from_value(3)}, {}}));

  EXPECT_TRUE(search(parse_equation("x^2 = y^3 - 2"), 3, 1).solutions.empty());
  const auto zero = search(parse_equation("x^2 = y^3 - 2"), 0, 1);
  EXPECT_TRUE(zero.solutions.empty());
  EXPECT_EQ(zero.points, 1u);
}

TEST(SearchTest, PellSolutions) {
  const auto r = search(parse_equation("x^2 - 2*y^2 = 1"), 20, 1);
  for (std::int64_t sx : {-1, 1}) {
    EXPECT_TRUE(contains(r, {sx, 0}));
    for (std::int64_t sy : {-1, 1}) {
      EXPECT_TRUE(contains(r, {3 * sx, 2 * sy}));
      EXPECT_TRUE(contains(r, {17 * sx, 12 * sy}));
    }
  }
  EXPECT_EQ(r.solutions.size(), 10u);
  EXPECT_TRUE(std::is_sorted(r.solutions.begin(), r.solutions.end()));
  expect_exact(r);
}

TEST(SearchTest, SymbolicExponentsAndOverflowFallback) {
  const Equation eq = parse_equation("A^x + B^y = C^z", {{"x", 3}, {"y", 3}, {"z", 3}});
  const auto r = search(eq, 10, 6);
  EXPECT_TRUE(contains(r, {3, 6, 3}, {3, 3, 5}));
  EXPECT_TRUE(contains(r, {2, 2, 2}, {3, 3, 4}));
  EXPECT_TRUE(contains(r, {0, 0, 0}, {3, 3, 3}));
  expect_exact(r);
  // Exponent 5 is already in the window; signatures keep it.
  const auto it = std::find(r.solutions.begin(), r.solutions.end(), Solution{{3, 6, 3}, {3, 3, 5}});
  EXPECT_EQ(r.signatures[static_cast<std::size_t>(it - r.solutions.begin())].exponents,
            (std::vector<std::int64_t>{3, 3, 5}));

  // 2^70 overflows 64 bits but not the exact path.
  const auto big = search(parse_equation("x^70 = 2^70"), 2, 1);
  EXPECT_TRUE(contains(big, {2}));
  EXPECT_TRUE(contains(big, {-2}));
  EXPECT_EQ(big.solutions.size(), 2u);
  const auto huge = search(parse_equation("x^200 - y^200 = 0"), 3, 1);
  EXPECT_EQ(huge.solutions.size(), 7u + 6u);  // x = ±y for x != 0, and (0,0)
}

TEST(SearchTest, Errors) {
  const Equation beal = parse_equation("A^x + B^y = C^z", {{"x", 3}, {"y", 3}, {"z", 3}});
  EXPECT_THROW(search(beal, 10, 2), std::invalid_argument);
  EXPECT_THROW(search(parse_equation("x = y"), -1, 1), std::invalid_argument);
  EXPECT_THROW(search(beal, 100, 8), BudgetExceeded);
  EXPECT_THROW(search(parse_equation("x = y"), 10, 1, {100, 1}), BudgetExceeded);
}

TEST(SearchTest, Signature) {
  const Equation eq = parse_equation("A^x = B", {{"x", 3}});
  EXPECT_EQ(signature(eq, Solution{{-1, 10}, {9}}),
            (RootTuple{{DigitalRoot::from_value(8), DigitalRoot::from_value(1)}, {3}}));
  EXPECT_EQ(signature(eq, Solution{{0, 0}, {14}}).exponents, (std::vector<std::int64_t>{8}));
}

TEST(SoundnessTest, CaseStudies) {
  const auto m = soundness_check(parse_equation("x^2 = y^3 - 2"), 100, 8);
  EXPECT_TRUE(m.passed);
  EXPECT_EQ(m.search.solutions.size(), 2u);

  const auto p = soundness_check(parse_equation("x^2 = 1 + d*y^2"), 100, 8);
  EXPECT_TRUE(p.passed);
  EXPECT_GT(p.search.solutions.size(), 100u);

  const auto b = soundness_check(parse_equation("A^x + B^y = C^z", {{"x", 3}, {"y", 3}, {"z", 3}}), 10, 8);
  EXPECT_TRUE(b.passed);
  EXPECT_FALSE(b.search.solutions.empty());

  const auto f = soundness_check(parse_equation("a^p - a^q = 3*n"), 30, 8);
  EXPECT_TRUE(f.passed);

  const auto empty = soundness_check(parse_equation("x^3 + y^3 + z^3 = 4"), 5, 1);
  EXPECT_TRUE(empty.search.solutions.empty());
  EXPECT_TRUE(empty.passed);
}

TEST(FermatTest, Classic) {
  const auto r = fermat_little_check(100, 31);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.cases, 100u * 11u);
  EXPECT_EQ(pow_mod(2, 7, 7), 2);
  EXPECT_EQ((128 - 2) % 7, 0);
  EXPECT_EQ(pow_mod(10, 3, 3), 10 % 3);
  EXPECT_THROW(fermat_little_check(0, 31), std::invalid_argument);
  EXPECT_THROW(fermat_little_check(10, 1), std::invalid_argument);
}

TEST(FermatTest, Extension) {
  const auto r = fermat_extension_check(1000, 31);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.cases, 1000u * 10u * 10u);
  const auto one = fermat_extension_check(1, 3);
  EXPECT_TRUE(one.passed);
  EXPECT_EQ(one.cases, 1u);
  EXPECT_EQ((pow_mod(2, 3, 3) - pow_mod(2, 5, 3) + 3) % 3, 0);
  EXPECT_EQ(pow_mod(3, 7, 3), 0);
  EXPECT_THROW(fermat_extension_check(10, 2), std::invalid_argument);
}

TEST(FermatTest, ExtensionFailsForEvenExponents) {
  // The odd-prime hypothesis matters: 2^2 - 2^3 = -4.
  EXPECT_NE((pow_mod(2, 2, 3) - pow_mod(2, 3, 3) + 3) % 3, 0);
}

TEST(PrimesTest, SieveMatchesTrialDivision) {
  const auto primes = primes_up_to(1000);
  std::vector<std::int64_t> trial;
  for (std::int64_t n = 0; n <= 1000; ++n) {
    if (is_prime(n)) trial.push_back(n);
  }
  EXPECT_EQ(primes, trial);
  EXPECT_EQ(primes_up_to(31).size(), 11u);
  EXPECT_TRUE(primes_up_to(1).empty());
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(-7));
}

TEST(PowModTest, AgainstExact) {
  for (std::int64_t b = -20; b <= 20; ++b) {
    for (std::int64_t e = 0; e <= 30; ++e) {
      for (std::int64_t m : {1, 2, 3, 7, 9, 31}) {
        const test::BigInt exact = boost::multiprecision::pow(test::BigInt(b), static_cast<unsigned>(e));
        test::BigInt r = exact % m;
        if (r < 0) r += m;
        ASSERT_EQ(pow_mod(b, e, m), static_cast<std::int64_t>(r)) << b << "^" << e << " mod " << m;
      }
    }
  }
}

}  // namespace
}  // namespace droot
