#pragma once

// Exhaustive mod-9 feasibility analysis of an equation: every assignment of
// digital roots to its variables (and representative values to its symbolic
// exponents) is tried, and the balancing ones are kept.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "droot/digital_root.hpp"
#include "droot/expr.hpp"

namespace droot {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Equation shape does not match what an operation requires.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Worker count; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// One assignment, positionally aligned with Equation::variables and
/// Equation::exponents. Orders lexicographically.
struct RootTuple {
  std::vector<DigitalRoot> roots;
  std::vector<std::int64_t> exponents;

  auto operator<=>(const RootTuple&) const = default;
  bool operator==(const RootTuple&) const = default;
};

/// Obstruction: nothing balances. Unconstrained: every enumerated assignment
/// balances. Constrained: anything in between.
enum class Verdict { kObstruction, kConstrained, kUnconstrained };

std::string to_string(Verdict v);

struct FeasibilityReport {
  Equation equation;
  std::vector<RootTuple> feasible_tuples;  // sorted
  std::map<std::string, RootSet> projections;
  std::map<std::string, std::set<std::int64_t>> exponent_projections;
  Verdict verdict = Verdict::kObstruction;
  std::uint64_t enumeration_size = 0;

  Assignment assignment(std::size_t i) const;
};

/// 9^#variables * window^#exponents; throws BudgetExceeded above `budget`.
std::uint64_t sieve_size(const Equation& eq, std::uint64_t budget = kDefaultBudget);

FeasibilityReport sieve(const Equation& eq, const EnumerationOptions& options = {});

/// dr(subexpr) must land in `allowed`.
struct PredicateAtom {
  Expr subexpr;
  RootSet allowed;
};

/// Conjunction of atoms; empty means always true.
struct Predicate {
  std::vector<PredicateAtom> atoms;
};

/// Parses "dr(x^2)=1 & dr(y^2) in {1,4,7}". Throws ParseError.
Predicate parse_predicate(const std::string& text);

/// Keeps the tuples satisfying the predicate and recomputes projections and
/// verdict. Throws UnboundNameError for names not in the equation.
FeasibilityReport filter_report(const FeasibilityReport& report, const Predicate& predicate);

/// Digital roots taken by `subexpr` across the report's feasible tuples.
RootSet project_expr(const FeasibilityReport& report, const Expr& subexpr);

/// For U + V = W with each side a power: pairs (u, v) attainable by U and V
/// whose sum is not attainable by W. Throws StructureError on other shapes.
std::vector<std::pair<DigitalRoot, DigitalRoot>> forbidden_pairs(const Equation& eq);

/// Roots attainable by one side expression, exponents ranging per the
/// equation's minimums.
RootSet attainable_side(const Expr& side, const Equation& eq);

/// Residues r in 1..6 (6 standing for 0) such that exponents e >= max(min, 2)
/// with e = r mod 6 give dr_pow(base, e) == target.
std::set<int> exponent_classes(DigitalRoot base, DigitalRoot target, std::int64_t min);

}  // namespace droot
