#include "droot/sieve.hpp"

#include <algorithm>
#include <cctype>

#include "parallel.hpp"
#include "program.hpp"

namespace droot {

namespace {

struct Radix {
  std::vector<std::uint64_t> sizes;
  std::vector<std::int64_t> exponent_first;
};

Radix radix_of(const Equation& eq) {
  Radix r;
  r.sizes.assign(eq.variables.size(), 9);
  for (const auto& e : eq.exponents) {
    const auto w = exponent_window(e.min);
    r.sizes.push_back(static_cast<std::uint64_t>(w.size()));
    r.exponent_first.push_back(w.first);
  }
  return r;
}

// Mixed-radix counter over the assignment space, most significant digit first.
class Odometer {
 public:
  Odometer(const Radix& radix, std::size_t variable_count, std::uint64_t index)
      : radix_(radix), vars_(variable_count), digits_(radix.sizes.size()) {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      digits_[i] = index % radix_.sizes[i];
      index /= radix_.sizes[i];
    }
    tuple_.roots.resize(vars_);
    tuple_.exponents.resize(digits_.size() - vars_);
    for (std::size_t i = 0; i < digits_.size(); ++i) sync(i);
  }

  const RootTuple& tuple() const { return tuple_; }

  void advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < radix_.sizes[i]) {
        sync(i);
        return;
      }
      digits_[i] = 0;
      sync(i);
    }
  }

 private:
  void sync(std::size_t i) {
    if (i < vars_) {
      tuple_.roots[i] = kAllRoots[digits_[i]];
    } else {
      const std::size_t k = i - vars_;
      tuple_.exponents[k] = radix_.exponent_first[k] + static_cast<std::int64_t>(digits_[i]);
    }
  }

  const Radix& radix_;
  std::size_t vars_;
  std::vector<std::uint64_t> digits_;
  RootTuple tuple_;
};

void finish(FeasibilityReport& report) {
  const auto& eq = report.equation;
  report.projections.clear();
  report.exponent_projections.clear();
  for (const auto& v : eq.variables) report.projections[v] = RootSet{};
  for (const auto& e : eq.exponents) report.exponent_projections[e.name] = {};
  for (const auto& t : report.feasible_tuples) {
    for (std::size_t i = 0; i < eq.variables.size(); ++i) report.projections[eq.variables[i]].insert(t.roots[i]);
    for (std::size_t i = 0; i < eq.exponents.size(); ++i) {
      report.exponent_projections[eq.exponents[i].name].insert(t.exponents[i]);
    }
  }
  if (report.feasible_tuples.empty()) {
    report.verdict = Verdict::kObstruction;
    return;
  }
  // Unconstrained only when no assignment at all is ruled out; full
  // projections alone can hide correlations such as x^2 = y^2.
  const bool full = report.feasible_tuples.size() == report.enumeration_size;
  report.verdict = full ? Verdict::kUnconstrained : Verdict::kConstrained;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration of " +
                         (required == UINT64_MAX ? std::string("more than 2^64") : std::to_string(required)) +
                         " points exceeds budget " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kObstruction: return "Obstruction";
    case Verdict::kConstrained: return "Constrained";
    case Verdict::kUnconstrained: return "Unconstrained";
  }
  return "?";
}

Assignment FeasibilityReport::assignment(std::size_t i) const {
  const RootTuple& t = feasible_tuples.at(i);
  Assignment a;
  for (std::size_t k = 0; k < equation.variables.size(); ++k) a.roots[equation.variables[k]] = t.roots[k];
  for (std::size_t k = 0; k < equation.exponents.size(); ++k) {
    a.exponents[equation.exponents[k].name] = t.exponents[k];
  }
  return a;
}

std::uint64_t sieve_size(const Equation& eq, std::uint64_t budget) {
  std::uint64_t size = 1;
  for (auto s : radix_of(eq).sizes) size = detail::saturating_mul(size, s);
  if (size > budget) throw BudgetExceeded(size, budget);
  return size;
}

FeasibilityReport sieve(const Equation& eq, const EnumerationOptions& options) {
  const std::uint64_t total = sieve_size(eq, options.budget);
  const auto exps = detail::exponent_names(eq);
  const detail::Program lhs(eq.lhs, eq.variables, exps);
  const detail::Program rhs(eq.rhs, eq.variables, exps);
  const Radix radix = radix_of(eq);

  auto chunks = detail::run_partitioned(total, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<RootTuple> found;
    Odometer odo(radix, eq.variables.size(), begin);
    for (std::uint64_t i = begin; i < end; ++i, odo.advance()) {
      const RootTuple& t = odo.tuple();
      if (lhs.eval_dr(t.roots, t.exponents) == rhs.eval_dr(t.roots, t.exponents)) found.push_back(t);
    }
    return found;
  });

  FeasibilityReport report{eq, {}, {}, {}, Verdict::kObstruction, total};
  for (auto& c : chunks) {
    report.feasible_tuples.insert(report.feasible_tuples.end(), std::make_move_iterator(c.begin()),
                                  std::make_move_iterator(c.end()));
  }
  // Chunks are contiguous in enumeration order, which is already canonical.
  finish(report);
  return report;
}

Predicate parse_predicate(const std::string& text) {
  Predicate pred;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(pos, std::string("expected '") + c + "' in filter");
    }
    ++pos;
  };
  auto digit = [&] {
    skip_ws();
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') {
      throw ParseError(pos, "expected a digital root 1..9 in filter");
    }
    return DigitalRoot::from_value(text[pos++] - '0');
  };

  skip_ws();
  if (pos == text.size()) return pred;
  while (true) {
    skip_ws();
    if (text.compare(pos, 3, "dr(") != 0) throw ParseError(pos, "expected 'dr(' in filter");
    pos += 3;
    const std::size_t start = pos;
    int depth = 1;
    while (pos < text.size() && depth > 0) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    }
    if (depth != 0) throw ParseError(text.size(), "unterminated 'dr(' in filter");
    const std::string inner = text.substr(start, pos - 1 - start);
    Expr subexpr = [&] {
      try {
        return parse_expression(inner);
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), e.what());
      }
    }();

    RootSet allowed;
    skip_ws();
    if (text.compare(pos, 2, "in") == 0) {
      pos += 2;
      expect('{');
      allowed.insert(digit());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        allowed.insert(digit());
        skip_ws();
      }
      expect('}');
    } else {
      expect('=');
      allowed.insert(digit());
    }
    pred.atoms.push_back({std::move(subexpr), allowed});

    skip_ws();
    if (pos == text.size()) break;
    expect('&');
  }
  return pred;
}

FeasibilityReport filter_report(const FeasibilityReport& report, const Predicate& predicate) {
  const auto exps = detail::exponent_names(report.equation);
  std::vector<std::pair<detail::Program, RootSet>> checks;
  for (const auto& atom : predicate.atoms) {
    checks.emplace_back(detail::Program(atom.subexpr, report.equation.variables, exps), atom.allowed);
  }
  FeasibilityReport out{report.equation, {}, {}, {}, Verdict::kObstruction, report.enumeration_size};
  for (const auto& t : report.feasible_tuples) {
    const bool keep = std::all_of(checks.begin(), checks.end(), [&](const auto& c) {
      return c.second.contains(c.first.eval_dr(t.roots, t.exponents));
    });
    if (keep) out.feasible_tuples.push_back(t);
  }
  finish(out);
  return out;
}

RootSet project_expr(const FeasibilityReport& report, const Expr& subexpr) {
  const detail::Program prog(subexpr, report.equation.variables, detail::exponent_names(report.equation));
  RootSet out;
  for (const auto& t : report.feasible_tuples) out.insert(prog.eval_dr(t.roots, t.exponents));
  return out;
}

RootSet attainable_side(const Expr& side, const Equation& eq) {
  const FreeNames names = free_names(side);
  Equation sub{side, side, names.variables, {}};
  for (const auto& name : names.exponents) {
    auto it = std::find_if(eq.exponents.begin(), eq.exponents.end(),
                           [&](const ExponentVar& e) { return e.name == name; });
    if (it == eq.exponents.end()) throw UnboundNameError("unbound exponent '" + name + "'");
    sub.exponents.push_back(*it);
  }
  const auto exps = detail::exponent_names(sub);
  const detail::Program prog(side, sub.variables, exps);
  const Radix radix = radix_of(sub);
  const std::uint64_t total = sieve_size(sub);
  RootSet out;
  Odometer odo(radix, sub.variables.size(), 0);
  for (std::uint64_t i = 0; i < total; ++i, odo.advance()) {
    out.insert(prog.eval_dr(odo.tuple().roots, odo.tuple().exponents));
  }
  return out;
}

std::vector<std::pair<DigitalRoot, DigitalRoot>> forbidden_pairs(const Equation& eq) {
  const auto* sum = std::get_if<Binary>(&eq.lhs.node().kind);
  if (sum == nullptr || sum->op != BinaryOp::kAdd || !std::holds_alternative<Pow>(sum->lhs.node().kind) ||
      !std::holds_alternative<Pow>(sum->rhs.node().kind) || !std::holds_alternative<Pow>(eq.rhs.node().kind)) {
    throw StructureError("expected an equation of the form U^a + V^b = W^c, got " + to_string(eq));
  }
  const RootSet u = attainable_side(sum->lhs, eq);
  const RootSet v = attainable_side(sum->rhs, eq);
  const RootSet w = attainable_side(eq.rhs, eq);
  std::vector<std::pair<DigitalRoot, DigitalRoot>> out;
  for (auto a : u.roots()) {
    for (auto b : v.roots()) {
      if (!w.contains(dr_add(a, b))) out.emplace_back(a, b);
    }
  }
  return out;
}

std::set<int> exponent_classes(DigitalRoot base, DigitalRoot target, std::int64_t min) {
  if (min < 1) throw std::domain_error("exponent minimum must be >= 1");
  const std::int64_t first = std::max<std::int64_t>(min, 2);
  std::set<int> out;
  for (auto e = first; e < first + 6; ++e) {
    if (dr_pow(base, e) == target) out.insert(static_cast<int>((e - 1) % 6) + 1);
  }
  return out;
}

}  // namespace droot
