#include "droot/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "program.hpp"

namespace droot {

namespace {

struct Box {
  std::uint64_t side = 1;  // 2 * bound + 1
  std::vector<std::int64_t> exponent_min;
  std::vector<std::uint64_t> exponent_span;
};

Box box_of(const Equation& eq, std::int64_t bound, std::int64_t exponent_cap) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  Box box;
  box.side = static_cast<std::uint64_t>(bound) * 2 + 1;
  for (const auto& e : eq.exponents) {
    if (exponent_cap < e.min) {
      throw std::invalid_argument("exponent cap " + std::to_string(exponent_cap) + " is below the minimum " +
                                  std::to_string(e.min) + " of '" + e.name + "'");
    }
    box.exponent_min.push_back(e.min);
    box.exponent_span.push_back(static_cast<std::uint64_t>(exponent_cap - e.min + 1));
  }
  return box;
}

}  // namespace

RootTuple signature(const Equation& eq, const Solution& s) {
  RootTuple t;
  for (auto v : s.values) t.roots.push_back(DigitalRoot::of(v));
  for (std::size_t i = 0; i < s.exponents.size(); ++i) {
    t.exponents.push_back(exponent_representative(s.exponents[i], eq.exponents.at(i).min));
  }
  return t;
}

std::uint64_t search_size(const Equation& eq, std::int64_t bound, std::int64_t exponent_cap,
                          std::uint64_t budget) {
  const Box box = box_of(eq, bound, exponent_cap);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < eq.variables.size(); ++i) size = detail::saturating_mul(size, box.side);
  for (auto s : box.exponent_span) size = detail::saturating_mul(size, s);
  if (size > budget) throw BudgetExceeded(size, budget);
  return size;
}

SearchResult search(const Equation& eq, std::int64_t bound, std::int64_t exponent_cap,
                    const EnumerationOptions& options) {
  const std::uint64_t total = search_size(eq, bound, exponent_cap, options.budget);
  const Box box = box_of(eq, bound, exponent_cap);
  const auto exps = detail::exponent_names(eq);
  const detail::Program lhs(eq.lhs, eq.variables, exps);
  const detail::Program rhs(eq.rhs, eq.variables, exps);
  const std::size_t nv = eq.variables.size();
  const std::size_t ne = eq.exponents.size();

  auto chunks = detail::run_partitioned(total, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Solution> found;
    // Odometer over (values..., exponents...), most significant first.
    std::vector<std::uint64_t> radix(nv, box.side);
    radix.insert(radix.end(), box.exponent_span.begin(), box.exponent_span.end());
    std::vector<std::uint64_t> digits(radix.size());
    std::uint64_t index = begin;
    for (std::size_t i = digits.size(); i-- > 0;) {
      digits[i] = index % radix[i];
      index /= radix[i];
    }
    Solution point{std::vector<std::int64_t>(nv), std::vector<std::int64_t>(ne)};
    auto sync = [&](std::size_t i) {
      if (i < nv) {
        point.values[i] = static_cast<std::int64_t>(digits[i]) - bound;
      } else {
        point.exponents[i - nv] = box.exponent_min[i - nv] + static_cast<std::int64_t>(digits[i]);
      }
    };
    for (std::size_t i = 0; i < digits.size(); ++i) sync(i);

    for (std::uint64_t n = begin; n < end; ++n) {
      const auto l = lhs.eval_i128(point.values, point.exponents);
      const auto r = rhs.eval_i128(point.values, point.exponents);
      const bool equal = (l && r) ? *l == *r
                                  : lhs.eval_big(point.values, point.exponents) ==
                                        rhs.eval_big(point.values, point.exponents);
      if (equal) found.push_back(point);
      for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radix[i]) {
          sync(i);
          break;
        }
        digits[i] = 0;
        sync(i);
      }
    }
    return found;
  });

  SearchResult result{eq, bound, exponent_cap, {}, {}, total};
  for (auto& c : chunks) result.solutions.insert(result.solutions.end(), c.begin(), c.end());
  std::sort(result.solutions.begin(), result.solutions.end());
  for (const auto& s : result.solutions) result.signatures.push_back(signature(eq, s));
  return result;
}

SoundnessResult soundness_check(const Equation& eq, std::int64_t bound, std::int64_t exponent_cap,
                                const EnumerationOptions& options) {
  SoundnessResult out;
  out.report = sieve(eq, options);
  out.search = search(eq, bound, exponent_cap, options);
  const auto& feasible = out.report.feasible_tuples;
  for (std::size_t i = 0; i < out.search.signatures.size(); ++i) {
    if (!std::binary_search(feasible.begin(), feasible.end(), out.search.signatures[i])) {
      out.counterexamples.push_back(i);
    }
  }
  out.passed = out.counterexamples.empty();
  return out;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
  if (m < 1) throw std::domain_error("modulus must be >= 1");
  if (e < 0) throw std::domain_error("exponent must be >= 0");
  __int128 b = ((base % m) + m) % m;
  __int128 result = 1 % m;
  while (e > 0) {
    if (e & 1) result = result * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

FermatResult fermat_little_check(std::int64_t a_max, std::int64_t p_max) {
  if (a_max < 1) throw std::invalid_argument("a_max must be >= 1");
  if (p_max < 2) throw std::invalid_argument("p_max must be >= 2");
  FermatResult r;
  const auto primes = primes_up_to(p_max);
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (auto p : primes) {
      ++r.cases;
      if (pow_mod(a, p, p) != a % p) r.counterexamples.push_back({a, p, 0});
    }
  }
  r.passed = r.counterexamples.empty();
  return r;
}

FermatResult fermat_extension_check(std::int64_t a_max, std::int64_t prime_max) {
  if (a_max < 1) throw std::invalid_argument("a_max must be >= 1");
  if (prime_max < 3) throw std::invalid_argument("prime_max must be >= 3");
  FermatResult r;
  auto primes = primes_up_to(prime_max);
  std::erase(primes, 2);
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (auto p : primes) {
      for (auto q : primes) {
        ++r.cases;
        if ((pow_mod(a, p, 3) - pow_mod(a, q, 3) + 3) % 3 != 0) r.counterexamples.push_back({a, p, q});
      }
    }
  }
  r.passed = r.counterexamples.empty();
  return r;
}

}  // namespace droot
