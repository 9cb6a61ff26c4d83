#pragma once

// Brute-force integer ground truth for the sieve.

#include <cstdint>
#include <vector>

#include "droot/expr.hpp"
#include "droot/sieve.hpp"

namespace droot {

/// Integer values aligned with Equation::variables and actual exponents
/// aligned with Equation::exponents.
struct Solution {
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> exponents;

  auto operator<=>(const Solution&) const = default;
  bool operator==(const Solution&) const = default;
};

struct SearchResult {
  Equation equation;
  std::int64_t bound = 0;
  std::int64_t exponent_cap = 0;
  std::vector<Solution> solutions;  // sorted
  std::vector<RootTuple> signatures;
  std::uint64_t points = 0;
};

/// Digital-root image of a solution: roots of the values, exponents mapped
/// to their sieve-window representatives.
RootTuple signature(const Equation& eq, const Solution& s);

/// Every assignment with |value| <= bound and min <= e <= exponent_cap,
/// checked under exact arithmetic. Throws std::invalid_argument for a
/// negative bound or a cap below some exponent minimum, BudgetExceeded when
/// the box is larger than the budget.
SearchResult search(const Equation& eq, std::int64_t bound, std::int64_t exponent_cap,
                    const EnumerationOptions& options = {});

/// Number of points search() would visit; throws like search().
std::uint64_t search_size(const Equation& eq, std::int64_t bound, std::int64_t exponent_cap,
                          std::uint64_t budget = kDefaultBudget);

struct SoundnessResult {
  bool passed = true;
  SearchResult search;
  FeasibilityReport report;
  /// Indices into search.solutions whose signature the sieve rejected.
  std::vector<std::size_t> counterexamples;
};

SoundnessResult soundness_check(const Equation& eq, std::int64_t bound, std::int64_t exponent_cap,
                                const EnumerationOptions& options = {});

struct FermatCounterexample {
  std::int64_t a = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;  // 0 in classic mode
  bool operator==(const FermatCounterexample&) const = default;
};

struct FermatResult {
  bool passed = true;
  std::uint64_t cases = 0;
  std::vector<FermatCounterexample> counterexamples;
};

/// a^p = a (mod p) for a in 1..a_max and primes p <= p_max.
FermatResult fermat_little_check(std::int64_t a_max, std::int64_t p_max);

/// a^p - a^q = 0 (mod 3) for a in 1..a_max and ordered pairs of odd primes
/// p, q <= prime_max.
FermatResult fermat_extension_check(std::int64_t a_max, std::int64_t prime_max);

/// Trial division.
bool is_prime(std::int64_t n);

/// Sieve of Eratosthenes.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// base^e mod m for m >= 1.
std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m);

}  // namespace droot
