#include "distprod/cli.hpp"

#include "distprod/expr.hpp"
#include "distprod/reducer.hpp"
#include "distprod/verify.hpp"
#include "distprod/wick.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace distprod {

namespace {

using Json = nlohmann::ordered_json;

const char* const kDescription =
    "Exact reduction of integrals over products of the oscillator correlation\n"
    "function D(tau) = exp(-w|tau|)/(2w), its derivatives and delta functions.\n\n"
    "Integrand syntax: sums of terms built from\n"
    "  D, dD, ddD, delta     factors D, dD/dtau, d^2D/dtau^2, Dirac delta (power >= 0)\n"
    "  w, d0, a, g           omega, delta(0), transformation parameter, coupling\n"
    "  p or p/q              rational coefficients\n"
    "e.g. \"dD^2 + w^2 D^2\", \"-3/32 w^-1 ddD^2 D^2\".";

struct Options {
  bool json = false;
  bool trace = false;
  std::string omega_text;
  std::optional<Rational> omega;
};

std::string render(const ValuePoly& v, const Options& opt) {
  if (!opt.omega) return v.to_string();
  Bindings b;
  b.w = *opt.omega;
  return v.substitute(b).to_string();
}

Json state_json(const ReductionState& s) {
  return Json{{"value", s.value.to_string()}, {"pending", s.pending.to_string()}};
}

Json trace_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& step : trace.steps)
    steps.push_back(Json{{"rule", step.rule}, {"before", state_json(step.before)}, {"after", state_json(step.after)}});
  return steps;
}

void print_trace(std::ostream& out, const ReductionTrace& trace) {
  for (const auto& step : trace.steps) {
    out << "  " << std::left << std::setw(15) << step.rule << step.after.value.to_string();
    if (!step.after.pending.empty()) out << "  +  Int[" << step.after.pending.to_string() << "]";
    out << '\n';
  }
}

struct Record {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
  const ReductionTrace* trace = nullptr;
};

Record to_record(const CheckResult& c, const Options& opt) {
  return {c.name, render(c.expected, opt), render(c.actual, opt), c.passed, c.trace ? &*c.trace : nullptr};
}

Record to_record(const OracleComparison& c) {
  std::ostringstream name;
  name << "quadrature Int D^" << c.m << " dD^" << c.n << " at w = " << to_string(c.omega);
  std::ostringstream expected;
  std::ostringstream actual;
  expected << std::setprecision(17) << c.reduced;
  actual << std::setprecision(17) << c.quadrature;
  return {name.str(), expected.str(), actual.str(), c.passed, nullptr};
}

int report(const std::string& command, const std::vector<Record>& records, const Options& opt, std::ostream& out) {
  bool all = true;
  for (const auto& r : records) all = all && r.passed;
  if (opt.json) {
    Json checks = Json::array();
    for (const auto& r : records) {
      Json j{{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"passed", r.passed}};
      if (opt.trace && r.trace) j["trace"] = trace_json(*r.trace);
      checks.push_back(std::move(j));
    }
    out << Json{{"command", command}, {"checks", std::move(checks)}, {"passed", all}}.dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& r : records) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name << '\n';
      if (!r.passed) out << "      expected: " << r.expected << "\n      actual:   " << r.actual << '\n';
      if (opt.trace && r.trace) print_trace(out, *r.trace);
      passed += r.passed ? 1 : 0;
    }
    out << passed << "/" << records.size() << " checks passed\n";
  }
  return all ? kExitPass : kExitCheckFailed;
}

int cmd_reduce(const std::string& text, const Options& opt, std::ostream& out) {
  auto sum = parse_integrand(text);
  auto result = reduce(sum, opt.trace);
  if (opt.json) {
    Json j{{"command", "reduce"}, {"input", sum.to_string()}, {"result", render(result.value, opt)}};
    if (opt.trace) j["trace"] = trace_json(result.trace);
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  if (opt.trace) print_trace(out, result.trace);
  out << render(result.value, opt) << '\n';
  return kExitPass;
}

int cmd_diagrams(int order, const Options& opt, std::ostream& out) {
  const auto classes = diagram_classes(order);
  ValuePoly total;
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& cls : classes) {
    ValuePoly value = cls.weight();
    if (cls.nonlocal() && !value.is_zero()) value *= reduce_value(IntegrandMonomial{cls.shape, ValuePoly(1)});
    total += value;
    const std::string shape = cls.nonlocal() ? render_factors(cls.shape) : "";
    const ValuePoly coeff = cls.prefactor * cls.coefficient;
    if (opt.json) {
      list.push_back(Json{{"group", to_string(cls.group)},
                          {"vertices", cls.vertices},
                          {"loops", {{"qq", cls.loops.qq}, {"dd", cls.loops.dd}, {"dq", cls.loops.dq}}},
                          {"integrand", shape},
                          {"matchings", cls.matchings},
                          {"coefficient", render(coeff, opt)},
                          {"value", render(value, opt)}});
      continue;
    }
    text << std::left << std::setw(18) << to_string(cls.group) << std::setw(28) << cls.vertices << "qq=" << cls.loops.qq
         << " dd=" << cls.loops.dd << " dq=" << cls.loops.dq << "  " << std::setw(14)
         << (shape.empty() ? "-" : shape) << std::right << std::setw(5) << cls.matchings << "  coeff "
         << render(coeff, opt) << "  value " << render(value, opt) << '\n';
  }
  if (opt.json) {
    out << Json{{"command", "diagrams"}, {"order", order}, {"classes", std::move(list)}, {"total", render(total, opt)}}
               .dump(2)
        << '\n';
  } else {
    out << text.str() << "total: " << render(total, opt) << '\n';
  }
  return kExitPass;
}

int cmd_verify(std::optional<int> order, const std::optional<Rational>& a, bool veltman, const Options& opt,
               std::ostream& out) {
  std::vector<CheckResult> checks;
  std::vector<OracleComparison> oracle;
  if (order) {
    checks.push_back(order_check(*order, a, veltman));
  } else {
    for (auto& c : identity_suite()) checks.push_back(std::move(c));
    for (auto& c : class_table_suite()) checks.push_back(std::move(c));
    for (auto& c : diagram_identities()) checks.push_back(std::move(c));
    for (int n : {1, 2}) {
      checks.push_back(order_check(n, a, veltman));
      if (!veltman) checks.push_back(order_check(n, a, true));
    }
    checks.push_back(lebesgue_divergence_check());
    oracle = oracle_suite();
  }
  std::vector<Record> records;
  for (const auto& c : checks) records.push_back(to_record(c, opt));
  for (const auto& c : oracle) records.push_back(to_record(c));
  return report("verify", records, opt, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{kDescription, args.empty() ? "distprod" : args.front()};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Emit a JSON report on stdout");
    sub->add_option("--omega", opt.omega_text, "Substitute w = p/q (> 0) in reported values");
  };

  std::string expr;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an integrand expression to a closed form");
  reduce_cmd->add_option("expr", expr, "Integrand expression")->required();
  reduce_cmd->add_flag("--trace", opt.trace, "Print every rewrite step");
  add_common(reduce_cmd);

  auto* identities_cmd = app.add_subcommand("identities", "Check the reduction identities and delta^2 rules");
  identities_cmd->add_flag("--trace", opt.trace, "Print the reduction trace of each left side");
  add_common(identities_cmd);

  int diagram_order = 0;
  auto* diagrams_cmd = app.add_subcommand("diagrams", "List the generated vacuum-diagram classes");
  diagrams_cmd->add_option("--order", diagram_order, "Order in g (1 or 2)")->required()->check(CLI::Range(1, 2));
  add_common(diagrams_cmd);

  std::optional<int> verify_order;
  std::string a_text;
  bool veltman = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check that order-g^n corrections cancel (all suites without --order)");
  verify_cmd->add_option("--order", verify_order, "Order in g (1 or 2)")->check(CLI::Range(1, 2));
  verify_cmd->add_option("--a", a_text, "Substitute the transformation parameter a = p/q");
  verify_cmd->add_flag("--veltman", veltman, "Set d0 = 0 before and after reduction");
  verify_cmd->add_flag("--trace", opt.trace, "Include reduction traces");
  add_common(verify_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("distprod");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (!opt.omega_text.empty()) {
      opt.omega = parse_rational(opt.omega_text);
      if (*opt.omega <= 0) throw std::invalid_argument("--omega must be positive");
    }
    if (*reduce_cmd) return cmd_reduce(expr, opt, out);
    if (*identities_cmd) {
      std::vector<Record> records;
      for (const auto& c : identity_suite()) records.push_back(to_record(c, opt));
      return report("identities", records, opt, out);
    }
    if (*diagrams_cmd) return cmd_diagrams(diagram_order, opt, out);
    std::optional<Rational> a;
    if (!a_text.empty()) a = parse_rational(a_text);
    return cmd_verify(verify_order, a, veltman, opt, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
  } catch (const RuleError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace distprod
