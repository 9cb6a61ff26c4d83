#include "render.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace droot::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string class_label(int m) { return ResidueClass{DigitalRoot::from_value(m)}.describe(); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json tuple_json(const Equation& eq, const RootTuple& t) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < eq.variables.size(); ++i) j[eq.variables[i]] = t.roots[i].value();
  for (std::size_t i = 0; i < eq.exponents.size(); ++i) j[eq.exponents[i].name] = t.exponents[i];
  return j;
}

std::string tuple_text(const Equation& eq, const RootTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < eq.variables.size(); ++i) {
    s += (s.empty() ? "" : " ") + eq.variables[i] + "=" + std::to_string(t.roots[i].value());
  }
  for (std::size_t i = 0; i < eq.exponents.size(); ++i) {
    s += (s.empty() ? "" : " ") + eq.exponents[i].name + "=" + std::to_string(t.exponents[i]);
  }
  return s;
}

std::string int_set_text(const std::set<std::int64_t>& values) {
  std::string s = "{";
  for (auto it = values.begin(); it != values.end(); ++it) {
    if (it != values.begin()) s += ',';
    s += std::to_string(*it);
  }
  return s + "}";
}

}  // namespace

std::string render_power_table(const PowerTable& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kCsv:
      os << "exponent";
      for (int m = 1; m <= 9; ++m) os << ',' << class_label(m);
      os << '\n';
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << table.first_exponent + static_cast<std::int64_t>(r);
        for (auto cell : table.rows[r]) os << ',' << cell.value();
        os << '\n';
      }
      return os.str();
    case Format::kJson: {
      ordered_json j;
      j["kind"] = "powers";
      j["columns"] = ordered_json::array();
      for (int m = 1; m <= 9; ++m) j["columns"].push_back(class_label(m));
      j["rows"] = ordered_json::array();
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        ordered_json row;
        row["exponent"] = table.first_exponent + static_cast<std::int64_t>(r);
        row["roots"] = ordered_json::array();
        for (auto cell : table.rows[r]) row["roots"].push_back(cell.value());
        j["rows"].push_back(row);
      }
      return dump(j);
    }
    case Format::kText:
      os << std::left << std::setw(6) << "x";
      for (int m = 1; m <= 9; ++m) os << std::right << std::setw(6) << class_label(m);
      os << '\n';
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << std::left << std::setw(6) << ("X^" + std::to_string(table.first_exponent + static_cast<std::int64_t>(r)));
        for (auto cell : table.rows[r]) os << std::right << std::setw(6) << cell.value();
        os << '\n';
      }
      return os.str();
  }
  return {};
}

std::string render_op_table(ArithOp op, Format format) {
  const OpTable cells = arithmetic_table(op);
  const std::string name = op == ArithOp::kAdd ? "add" : op == ArithOp::kSub ? "sub" : "mul";
  std::ostringstream os;
  switch (format) {
    case Format::kCsv:
      // Row a, column b holds a op b.
      os << name;
      for (int b = 1; b <= 9; ++b) os << ',' << b;
      os << '\n';
      for (std::size_t a = 0; a < 9; ++a) {
        os << a + 1;
        for (auto cell : cells[a]) os << ',' << cell.value();
        os << '\n';
      }
      return os.str();
    case Format::kJson: {
      ordered_json j;
      j["kind"] = name;
      j["cells"] = ordered_json::array();
      for (const auto& row : cells) {
        ordered_json r = ordered_json::array();
        for (auto cell : row) r.push_back(cell.value());
        j["cells"].push_back(r);
      }
      return dump(j);
    }
    case Format::kText:
      // Same layout as the classic printed table: one line per right operand.
      for (std::size_t b = 0; b < 9; ++b) {
        for (std::size_t a = 0; a < 9; ++a) {
          if (a > 0) os << '\t';
          os << a + 1 << op_symbol(op) << b + 1 << '=' << cells[a][b].value();
        }
        os << '\n';
      }
      return os.str();
  }
  return {};
}

std::string render_report(const FeasibilityReport& report, Format format, bool with_tuples) {
  const Equation& eq = report.equation;
  if (format == Format::kJson) {
    ordered_json j;
    j["equation"] = to_string(eq);
    j["variables"] = eq.variables;
    j["exponents"] = ordered_json::array();
    for (const auto& e : eq.exponents) j["exponents"].push_back({{"name", e.name}, {"min", e.min}});
    j["verdict"] = to_string(report.verdict);
    j["projections"] = ordered_json::object();
    for (const auto& v : eq.variables) j["projections"][v] = report.projections.at(v).values();
    j["exponent_projections"] = ordered_json::object();
    for (const auto& e : eq.exponents) {
      const auto& set = report.exponent_projections.at(e.name);
      j["exponent_projections"][e.name] = std::vector<std::int64_t>(set.begin(), set.end());
    }
    if (with_tuples) {
      j["tuples"] = ordered_json::array();
      for (const auto& t : report.feasible_tuples) j["tuples"].push_back(tuple_json(eq, t));
    }
    j["enumeration_size"] = report.enumeration_size;
    return dump(j);
  }

  std::ostringstream os;
  os << "equation: " << to_string(eq) << '\n';
  for (const auto& e : eq.exponents) os << "exponent " << e.name << " >= " << e.min << '\n';
  os << "verdict: " << to_string(report.verdict) << '\n';
  os << "feasible: " << report.feasible_tuples.size() << " of " << report.enumeration_size << '\n';
  for (const auto& v : eq.variables) os << v << ": " << report.projections.at(v).to_string() << '\n';
  for (const auto& e : eq.exponents) {
    os << e.name << " (exponent): " << int_set_text(report.exponent_projections.at(e.name)) << '\n';
  }
  if (with_tuples) {
    os << "tuples:\n";
    for (const auto& t : report.feasible_tuples) os << "  " << tuple_text(eq, t) << '\n';
  }
  return os.str();
}

std::string render_search(const SearchResult& result, const SoundnessResult* soundness, Format format) {
  const Equation& eq = result.equation;
  auto solution_json = [&](const Solution& s) {
    ordered_json j = ordered_json::object();
    for (std::size_t i = 0; i < eq.variables.size(); ++i) j[eq.variables[i]] = s.values[i];
    for (std::size_t i = 0; i < eq.exponents.size(); ++i) j[eq.exponents[i].name] = s.exponents[i];
    return j;
  };
  auto solution_text = [&](const Solution& s) {
    std::string out;
    for (std::size_t i = 0; i < eq.variables.size(); ++i) {
      out += (out.empty() ? "" : " ") + eq.variables[i] + "=" + std::to_string(s.values[i]);
    }
    for (std::size_t i = 0; i < eq.exponents.size(); ++i) {
      out += (out.empty() ? "" : " ") + eq.exponents[i].name + "=" + std::to_string(s.exponents[i]);
    }
    return out;
  };

  if (format == Format::kJson) {
    ordered_json j;
    j["equation"] = to_string(eq);
    j["bound"] = result.bound;
    j["exponent_cap"] = result.exponent_cap;
    j["points"] = result.points;
    j["solutions"] = ordered_json::array();
    for (const auto& s : result.solutions) j["solutions"].push_back(solution_json(s));
    j["signatures"] = ordered_json::array();
    for (const auto& t : result.signatures) j["signatures"].push_back(tuple_json(eq, t));
    if (soundness != nullptr) {
      ordered_json c = ordered_json::array();
      for (auto i : soundness->counterexamples) c.push_back(solution_json(result.solutions[i]));
      j["soundness"] = {{"passed", soundness->passed}, {"counterexamples", c}};
    }
    return dump(j);
  }

  std::ostringstream os;
  os << "equation: " << to_string(eq) << '\n';
  os << "bound: " << result.bound;
  if (!eq.exponents.empty()) os << ", exponent cap: " << result.exponent_cap;
  os << ", points: " << result.points << '\n';
  os << "solutions: " << result.solutions.size() << '\n';
  for (std::size_t i = 0; i < result.solutions.size(); ++i) {
    os << "  " << solution_text(result.solutions[i]) << "  [dr " << tuple_text(eq, result.signatures[i]) << "]\n";
  }
  if (soundness != nullptr) {
    if (soundness->passed) {
      os << "soundness: pass (" << result.signatures.size() << " signatures in feasible set)\n";
    } else {
      os << "soundness: FAIL (" << soundness->counterexamples.size() << " signatures rejected by the sieve)\n";
      for (auto i : soundness->counterexamples) os << "  " << solution_text(result.solutions[i]) << '\n';
    }
  }
  return os.str();
}

std::string render_fermat(const std::string& mode, std::int64_t a_max, std::int64_t p_max,
                          const FermatResult& result, double elapsed_ms, Format format) {
  if (format == Format::kJson) {
    ordered_json j;
    j["mode"] = mode;
    j["a_max"] = a_max;
    j["p_max"] = p_max;
    j["cases"] = result.cases;
    j["passed"] = result.passed;
    j["counterexamples"] = ordered_json::array();
    for (const auto& c : result.counterexamples) {
      ordered_json cj{{"a", c.a}, {"p", c.p}};
      if (mode == "extension") cj["q"] = c.q;
      j["counterexamples"].push_back(cj);
    }
    j["elapsed_ms"] = elapsed_ms;
    return dump(j);
  }
  std::ostringstream os;
  os << mode << ": a <= " << a_max << ", primes <= " << p_max << ", " << result.cases << " cases\n";
  for (const auto& c : result.counterexamples) {
    os << "  counterexample a=" << c.a << " p=" << c.p;
    if (mode == "extension") os << " q=" << c.q;
    os << '\n';
  }
  os << result.counterexamples.size() << " counterexamples\n";
  os << "elapsed: " << std::fixed << std::setprecision(3) << elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace droot::cli
