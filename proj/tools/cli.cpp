#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>

#include "droot/digital_root.hpp"
#include "droot/expr.hpp"
#include "droot/oracle.hpp"
#include "droot/sieve.hpp"
#include "render.hpp"

namespace droot::cli {

namespace {

constexpr const char* kGrammarHelp = R"(Equation grammar:
  equation := expr '=' expr
  expr     := term (('+' | '-') term)*
  term     := factor ('*' factor)*
  factor   := ['-'] atom
  atom     := (integer | ident | '(' expr ')') ['^' exponent]
  exponent := integer | ident
Multiplication is always explicit ("d*y^2", not "dy^2"). A name used as an
exponent is a symbolic exponent; give its lower bound with --min NAME=VALUE.
Filters: conjunctions of dr(<expr>)=<digit> or dr(<expr>) in {<digits>},
joined by '&', e.g. "dr(x^2)=1 & dr(y^2) in {1,4,7}".)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_decimal(const std::string& text, const std::string& what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError("invalid " + what + ": '" + text + "' (expected a decimal integer)");
  }
  return value;
}

ExponentMins parse_mins(const std::vector<std::string>& specs) {
  ExponentMins mins;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--min expects NAME=VALUE, got '" + spec + "'");
    mins[spec.substr(0, eq)] = parse_decimal(spec.substr(eq + 1), "exponent minimum");
  }
  return mins;
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw UsageError("unknown format '" + name + "'");
}

struct Options {
  std::string format = "text";
  std::uint64_t budget = kDefaultBudget;
  bool tuples = false;

  std::string value;  // dr argument
  std::string kind;   // table kind / fermat mode
  std::int64_t max_exp = 45;
  std::string equation;
  std::vector<std::string> mins;
  std::string filter;
  std::int64_t bound = 10;
  std::int64_t exponent_cap = -1;
  bool check = false;
  std::int64_t a_max = 100;
  std::int64_t p_max = 31;
};

int cmd_dr(const Options& o, std::ostream& out) {
  out << digital_root(parse_decimal(o.value, "integer")).value() << '\n';
  return kOk;
}

int cmd_table(const Options& o, Format format, std::ostream& out) {
  if (o.kind == "powers") {
    if (o.max_exp < 2) throw UsageError("--max-exp must be >= 2");
    out << render_power_table(power_table(o.max_exp), format);
  } else if (o.kind == "add") {
    out << render_op_table(ArithOp::kAdd, format);
  } else if (o.kind == "sub") {
    out << render_op_table(ArithOp::kSub, format);
  } else if (o.kind == "mul") {
    out << render_op_table(ArithOp::kMul, format);
  } else {
    throw UsageError("unknown table '" + o.kind + "' (expected powers, add, sub or mul)");
  }
  return kOk;
}

int cmd_analyze(const Options& o, Format format, std::ostream& out) {
  if (format == Format::kCsv) throw UsageError("analyze supports --format text or json");
  const Equation eq = parse_equation(o.equation, parse_mins(o.mins));
  FeasibilityReport report = sieve(eq, {o.budget, 0});
  if (!o.filter.empty()) report = filter_report(report, parse_predicate(o.filter));
  out << render_report(report, format, o.tuples);
  return report.verdict == Verdict::kObstruction ? kNegative : kOk;
}

int cmd_search(const Options& o, Format format, std::ostream& out) {
  if (format == Format::kCsv) throw UsageError("search supports --format text or json");
  const Equation eq = parse_equation(o.equation, parse_mins(o.mins));
  std::int64_t cap = o.exponent_cap;
  if (cap < 0) {
    // Default: one full period above the largest minimum.
    cap = 1;
    for (const auto& e : eq.exponents) cap = std::max(cap, e.min + 5);
  }
  const EnumerationOptions options{o.budget, 0};
  if (o.check) {
    const SoundnessResult s = soundness_check(eq, o.bound, cap, options);
    out << render_search(s.search, &s, format);
    return s.passed ? kOk : kNegative;
  }
  out << render_search(search(eq, o.bound, cap, options), nullptr, format);
  return kOk;
}

int cmd_fermat(const Options& o, Format format, std::ostream& out) {
  if (format == Format::kCsv) throw UsageError("fermat supports --format text or json");
  const auto start = std::chrono::steady_clock::now();
  FermatResult r;
  if (o.kind == "classic") {
    if (o.a_max < 1 || o.p_max < 2) throw UsageError("classic mode needs --a-max >= 1 and --p-max >= 2");
    r = fermat_little_check(o.a_max, o.p_max);
  } else if (o.kind == "extension") {
    if (o.a_max < 1 || o.p_max < 3) throw UsageError("extension mode needs --a-max >= 1 and --p-max >= 3");
    r = fermat_extension_check(o.a_max, o.p_max);
  } else {
    throw UsageError("unknown fermat mode '" + o.kind + "' (expected classic or extension)");
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << render_fermat(o.kind, o.a_max, o.p_max, r, ms, format);
  return r.passed ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital-root (mod 9) calculus and Diophantine feasibility sieve", "droot"};
  app.footer(kGrammarHelp);
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--budget", o.budget, "Maximum number of enumerated points");
  app.add_flag("--tuples", o.tuples, "Include the full feasible tuple list in analyze output");

  auto* dr = app.add_subcommand("dr", "Digital root of an integer");
  dr->add_option("n", o.value, "Decimal integer, possibly negative")->required();
  dr->fallthrough();

  auto* table = app.add_subcommand("table", "Render the powers table or an arithmetic table");
  table->add_option("kind", o.kind, "powers, add, sub or mul")->required();
  table->add_option("--max-exp", o.max_exp, "Last exponent of the powers table");
  table->fallthrough();

  auto* analyze = app.add_subcommand("analyze", "Digital-root feasibility analysis of an equation");
  analyze->add_option("equation", o.equation, "Equation text")->required();
  analyze->add_option("--min", o.mins, "Lower bound NAME=VALUE for a symbolic exponent (repeatable)");
  analyze->add_option("--filter", o.filter, "Keep tuples satisfying dr(...) constraints");
  analyze->fallthrough();

  auto* search_cmd = app.add_subcommand("search", "Brute-force integer solutions in a box");
  search_cmd->add_option("equation", o.equation, "Equation text")->required();
  search_cmd->add_option("--bound", o.bound, "Search |value| <= bound");
  search_cmd->add_option("--exponent-cap,--cap", o.exponent_cap, "Largest symbolic exponent tried");
  search_cmd->add_option("--min", o.mins, "Lower bound NAME=VALUE for a symbolic exponent (repeatable)");
  search_cmd->add_flag("--check", o.check, "Check every solution's signature against the sieve");
  search_cmd->fallthrough();

  auto* fermat = app.add_subcommand("fermat", "Exhaustive Fermat little-theorem checks");
  fermat->add_option("mode", o.kind, "classic or extension")->required();
  fermat->add_option("--a-max", o.a_max, "Largest a");
  fermat->add_option("--p-max", o.p_max, "Largest prime");
  fermat->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const Format format = parse_format(o.format);
    if (format == Format::kCsv && !table->parsed()) throw UsageError("--format csv is only available for tables");
    if (dr->parsed()) return cmd_dr(o, out);
    if (table->parsed()) return cmd_table(o, format, out);
    if (analyze->parsed()) return cmd_analyze(o, format, out);
    if (search_cmd->parsed()) return cmd_search(o, format, out);
    if (fermat->parsed()) return cmd_fermat(o, format, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget or shrink the problem)\n";
    return kBudget;
  } catch (const std::exception& e) {
    // Parse, naming and range errors are all usage errors.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace droot::cli
