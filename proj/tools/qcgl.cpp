#include "qcgl/cauchon.hpp"
#include "qcgl/cgl_check.hpp"
#include "qcgl/delderiv.hpp"
#include "qcgl/error.hpp"
#include "qcgl/expr.hpp"
#include "qcgl/grassmann.hpp"
#include "qcgl/presets.hpp"
#include "qcgl/printing.hpp"
#include "qcgl/qmat.hpp"
#include "qcgl/random_elements.hpp"
#include "qcgl/spec_io.hpp"
#include "qcgl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>

namespace {

using nlohmann::json;
using namespace qcgl;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Active {
  OreAlgebraSpec spec;
  std::optional<QuantumMatrix> qm;
};

std::pair<int, int> parse_pair(const std::string& text) {
  static const std::regex pattern(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw UsageError("expected m,n but got '" + text + "'");
  const int m = std::stoi(match[1]);
  const int n = std::stoi(match[2]);
  if (m < 1 || n < 1) throw UsageError("matrix sizes must be positive");
  return {m, n};
}

Active make_qmat(int m, int n) {
  if (m < 1 || n < 1) throw UsageError("matrix sizes must be positive");
  if (m * n > 64) throw UsageError("at most 64 generators are supported");
  Active a{oqm(m, n), QuantumMatrix(m, n)};
  return a;
}

// A spec read from a file regains its minors when it is a quantum matrix algebra.
Active from_spec(OreAlgebraSpec spec) {
  static const std::regex pattern(R"(O_q\(M_\{(\d+),(\d+)\}\))");
  std::smatch match;
  Active a{std::move(spec), std::nullopt};
  if (std::regex_match(a.spec.name, match, pattern)) {
    const int m = std::stoi(match[1]);
    const int n = std::stoi(match[2]);
    if (m * n == static_cast<int>(a.spec.size()) && oqm(m, n) == a.spec) a.qm.emplace(m, n);
  }
  return a;
}

Active select_algebra(const std::string& algebra, const std::string& spec_file) {
  if (!spec_file.empty()) return from_spec(read_spec_file(spec_file));
  if (algebra.rfind("qmat:", 0) == 0) {
    auto [m, n] = parse_pair(algebra.substr(5));
    return make_qmat(m, n);
  }
  if (algebra == "qplane") return from_spec(quantum_affine_plane());
  for (const auto& name : preset_names()) {
    if (algebra == name) return from_spec(load_preset(name));
  }
  throw UsageError("unknown algebra '" + algebra + "' (use qmat:m,n, qplane or a preset name)");
}

const QuantumMatrix& require_qmat(const Active& a) {
  if (!a.qm) throw UsageError("this command needs a quantum matrix algebra (--algebra qmat:m,n)");
  return *a.qm;
}

std::vector<int> parse_index_list(std::string text) {
  if (!text.empty() && text.front() == '[') text.erase(0, 1);
  if (!text.empty() && text.back() == ']') text.pop_back();
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad index list '" + text + "'");
    }
  }
  return out;
}

std::string minor_set_text(const std::vector<int>& cols) {
  std::string out = "[";
  for (std::size_t k = 0; k < cols.size(); ++k) out += (k ? "," : "") + std::to_string(cols[k]);
  return out + "]";
}

json weight_json(const std::optional<Weight>& w) {
  if (!w) return nullptr;
  return json(*w);
}

json exponent_json(const std::optional<int>& e) {
  if (!e) return nullptr;
  return *e;
}

std::string exponent_text(const std::optional<int>& e) { return e ? std::to_string(*e) : "none"; }

struct Output {
  bool as_json = false;
  std::string command;
  std::string algebra;

  void emit(bool ok, const json& result, const std::string& text) const {
    if (as_json) {
      json doc{{"command", command}, {"ok", ok}, {"result", result}};
      if (!algebra.empty()) doc["algebra"] = algebra;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
    }
  }

  void error(const std::string& kind, const std::string& message, std::optional<std::size_t> position) const {
    if (as_json) {
      json err{{"kind", kind}, {"message", message}};
      if (position) err["position"] = *position;
      json doc{{"command", command}, {"ok", false}, {"error", err}};
      if (!algebra.empty()) doc["algebra"] = algebra;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cerr << "error: " << message << "\n";
    }
  }
};

json cgl_report_json(const CglReport& report) {
  json levels = json::array();
  for (const auto& level : report.levels) {
    json checks = json::object();
    const std::pair<const char*, const CheckResult*> items[] = {
        {"sigma_delta_commutation", &level.sigma_delta_commutation},
        {"delta_nilpotent", &level.delta_nilpotent},
        {"level_q_not_root", &level.level_q_not_root},
        {"h_matches_lambda", &level.h_matches_lambda},
        {"h_eigenvalue_not_root", &level.h_eigenvalue_not_root},
        {"lambda_nonzero", &level.lambda_nonzero},
        {"relations_respected", &level.relations_respected},
        {"torus_compatible", &level.torus_compatible},
    };
    for (const auto& [key, check] : items) checks[key] = {{"ok", check->ok}, {"failures", check->failures}};
    levels.push_back({{"generator", level.generator},
                      {"level_q", level.level_q.to_string()},
                      {"passed", level.passed()},
                      {"checks", checks}});
  }
  return {{"passed", report.passed()}, {"structural", report.structural}, {"levels", levels}};
}

std::string cgl_report_text(const CglReport& report) {
  std::ostringstream out;
  for (const auto& e : report.structural) out << "structural: " << e << "\n";
  for (const auto& level : report.levels) {
    out << level.generator << " (q_j = " << level.level_q.to_string() << "): "
        << (level.passed() ? "ok" : "FAILED") << "\n";
    const CheckResult* checks[] = {&level.sigma_delta_commutation, &level.delta_nilpotent,
                                   &level.level_q_not_root,        &level.h_matches_lambda,
                                   &level.h_eigenvalue_not_root,   &level.lambda_nonzero,
                                   &level.relations_respected,     &level.torus_compatible};
    for (const auto* c : checks) {
      for (const auto& f : c->failures) out << "  " << f << "\n";
    }
  }
  out << (report.passed() ? "CGL axioms hold" : "CGL axioms fail") << "\n";
  return out.str();
}

json algebra_summary(const Active& a) {
  return {{"name", a.spec.name},
          {"generators", a.spec.names},
          {"torus_rank", a.spec.torus_rank},
          {"quantum_matrix", a.qm.has_value()}};
}

std::string algebra_text(const Active& a) {
  std::ostringstream out;
  out << a.spec.name << "\n";
  out << "generators:";
  for (const auto& n : a.spec.names) out << " " << n;
  out << "\ntorus rank: " << a.spec.torus_rank << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in iterated skew polynomial algebras and quantum matrices"};
  app.require_subcommand(1);

  std::string algebra = "qmat:2,2";
  std::string spec_file;
  bool as_json = false;
  int nilpotence_bound = kDefaultNilpotenceBound;
  std::uint64_t seed = default_seed();
  std::uint64_t steps_budget = kDefaultStepBudget;
  app.add_option("--algebra", algebra, "Active algebra: qmat:m,n, qplane or a preset name")->capture_default_str();
  app.add_option("--spec", spec_file, "Read the active algebra from a spec file");
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--nilpotence-bound", nilpotence_bound, "Largest power of a derivation tried")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized checks (default QCGL_SEED)")->capture_default_str();
  app.add_option("--steps-budget", steps_budget, "Rewriting step budget")->capture_default_str();

  // algebra
  auto* algebra_cmd = app.add_subcommand("algebra", "Show, build or save an algebra");
  std::string out_file;
  algebra_cmd->add_option("--out", out_file, "Write the spec to a file");
  int qmat_m = 0;
  int qmat_n = 0;
  auto* algebra_qmat = algebra_cmd->add_subcommand("qmat", "Quantum m x n matrices");
  algebra_qmat->add_option("m", qmat_m)->required();
  algebra_qmat->add_option("n", qmat_n)->required();
  auto* algebra_qplane = algebra_cmd->add_subcommand("qplane", "Quantum affine plane");
  std::string preset_name;
  auto* algebra_preset = algebra_cmd->add_subcommand("preset", "Shipped preset");
  algebra_preset->add_option("name", preset_name)->required();
  for (auto* sub : {algebra_qmat, algebra_qplane, algebra_preset}) sub->fallthrough();
  algebra_cmd->require_subcommand(0, 1);

  std::string expr_a;
  std::string expr_b;
  auto* nf_cmd = app.add_subcommand("nf", "Normal form of an expression");
  nf_cmd->add_option("expr", expr_a)->required();

  std::string minor_rows;
  std::string minor_cols;
  auto* minor_cmd = app.add_subcommand("minor", "Quantum minor [I|J]");
  minor_cmd->add_option("rows", minor_rows, "I as 1,2 or the whole index [I|J]")->required();
  minor_cmd->add_option("cols", minor_cols, "J as 1,3");

  auto* qcommute_cmd = app.add_subcommand("qcommute", "Exponent s with ab = q^s ba");
  qcommute_cmd->add_option("a", expr_a)->required();
  qcommute_cmd->add_option("b", expr_b)->required();

  auto* normal_cmd = app.add_subcommand("normal", "Normality report");
  normal_cmd->add_option("expr", expr_a)->required();

  auto* weight_cmd = app.add_subcommand("weight", "Torus weight");
  weight_cmd->add_option("expr", expr_a)->required();

  auto* cauchon_cmd = app.add_subcommand("cauchon", "Cauchon diagram combinatorics");
  std::string cauchon_mode;
  int cm = 0;
  int cn = 0;
  cauchon_cmd->add_option("mode", cauchon_mode)->required()->check(CLI::IsMember({"count", "list", "histogram"}));
  cauchon_cmd->add_option("m", cm)->required()->check(CLI::PositiveNumber);
  cauchon_cmd->add_option("n", cn)->required()->check(CLI::PositiveNumber);

  auto* theta_cmd = app.add_subcommand("theta", "Deleting-derivations image");
  bool theta_alt_flag = false;
  theta_cmd->add_option("expr", expr_a)->required();
  theta_cmd->add_flag("--alt", theta_alt_flag, "Use the q^{n^2} expansion");

  auto* laurent_cmd = app.add_subcommand("laurent", "Evaluate in the Laurent extension (X is the top variable)");
  laurent_cmd->add_option("expr", expr_a)->required();

  auto* grassmann_cmd = app.add_subcommand("grassmann", "Maximal minors");
  std::string grassmann_mode;
  grassmann_cmd->add_option("mode", grassmann_mode)->required()->check(CLI::IsMember({"minors", "extremal", "phi"}));

  auto* verify_cmd = app.add_subcommand("verify", "Verification suites");
  auto* verify_suite = verify_cmd->add_subcommand("paper", "Full acceptance suite");
  std::string size_text;
  verify_suite->add_option("--size", size_text, "Restrict to O_q(M_{m,n})");
  verify_cmd->require_subcommand(1);

  auto* axioms_cmd = app.add_subcommand("axioms", "CGL axiom report for the active algebra");

  Output out;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  out.as_json = as_json;
  out.command = app.get_subcommands().front()->get_name();
  RewriteOptions rewrite;
  rewrite.step_budget = steps_budget;

  try {
    if (algebra_cmd->parsed()) {
      Active a = [&] {
        if (algebra_qmat->parsed()) return make_qmat(qmat_m, qmat_n);
        if (algebra_qplane->parsed()) return from_spec(quantum_affine_plane());
        if (algebra_preset->parsed()) return select_algebra(preset_name, "");
        return select_algebra(algebra, spec_file);
      }();
      out.algebra = a.spec.name;
      const CglReport report = check_cgl_axioms(a.spec, nilpotence_bound, rewrite);
      if (!out_file.empty()) {
        std::ofstream file(out_file);
        if (!file) throw UsageError("cannot write " + out_file);
        file << write_spec(a.spec);
      }
      json result = algebra_summary(a);
      result["axioms_hold"] = report.passed();
      if (out_file.empty()) result["spec"] = spec_to_json(a.spec);
      std::string text = algebra_text(a) + (report.passed() ? "CGL axioms hold\n" : "CGL axioms fail\n");
      if (out_file.empty() && !as_json) text += write_spec(a.spec);
      out.emit(report.passed(), result, text);
      return report.passed() ? kExitOk : kExitFailure;
    }

    if (cauchon_cmd->parsed()) {
      if (cm * cn > kMaxEnumerationCells) {
        throw UsageError("enumeration is limited to " + std::to_string(kMaxEnumerationCells) + " cells");
      }
      if (cauchon_mode == "count") {
        const auto c = count(cm, cn);
        out.emit(true, c, std::to_string(c));
      } else if (cauchon_mode == "histogram") {
        json result = json::object();
        std::ostringstream text;
        for (const auto& [k, v] : count_by_black(cm, cn)) {
          result[std::to_string(k)] = v;
          text << k << " " << v << "\n";
        }
        out.emit(true, result, text.str());
      } else {
        json result = json::array();
        std::ostringstream text;
        bool first = true;
        enumerate(cm, cn, [&](const CauchonDiagram& d) {
          json cells = json::array();
          for (const auto& [i, j] : d.black_cells()) cells.push_back({i, j});
          result.push_back(cells);
          if (!first) text << "\n";
          first = false;
          text << d.to_string();
        });
        out.emit(true, result, text.str());
      }
      return kExitOk;
    }

    if (verify_suite->parsed()) {
      SuiteOptions opts;
      opts.seed = seed;
      opts.nilpotence_bound = nilpotence_bound;
      opts.rewrite = rewrite;
      if (!size_text.empty()) {
        const auto size = parse_pair(size_text);
        if (size.first * size.second > kMaxEnumerationCells) {
          throw UsageError("--size is limited to " + std::to_string(kMaxEnumerationCells) + " entries");
        }
        opts.size = size;
      }
      out.command = "verify paper";
      const auto results = run_acceptance_suite(opts);
      bool ok = true;
      json criteria = json::array();
      std::ostringstream text;
      for (const auto& r : results) {
        ok = ok && r.passed;
        criteria.push_back({{"id", r.id},
                            {"title", r.title},
                            {"passed", r.passed},
                            {"skipped", r.skipped},
                            {"seconds", r.seconds},
                            {"limit_seconds", r.limit_seconds},
                            {"details", r.details}});
        text << format_result(r) << "\n";
        for (const auto& d : r.details) text << "    " << d << "\n";
      }
      text << (ok ? "all criteria passed" : "some criteria failed") << "\n";
      out.emit(ok, {{"seed", seed}, {"criteria", criteria}}, text.str());
      return ok ? kExitOk : kExitFailure;
    }

    const Active a = select_algebra(algebra, spec_file);
    out.algebra = a.spec.name;
    const QuantumMatrix* qm = a.qm ? &*a.qm : nullptr;
    const EvalContext ctx{qm ? &qm->spec() : &a.spec, qm, rewrite};
    auto poly = [&](const std::string& text) { return eval_poly(parse_expr(text), ctx); };
    auto render = [&](const NcPoly& p) { return to_string(a.spec, p); };

    if (nf_cmd->parsed()) {
      const std::string r = render(poly(expr_a));
      out.emit(true, r, r);
    } else if (minor_cmd->parsed()) {
      const QuantumMatrix& m = require_qmat(a);
      const MinorIndex idx = minor_cols.empty()
                                 ? parse_minor_index(minor_rows)
                                 : MinorIndex{parse_index_list(minor_rows), parse_index_list(minor_cols)};
      m.validate(idx);
      const std::string r = render(quantum_minor(m, idx));
      out.emit(true, {{"minor", to_string(idx)}, {"value", r}}, r);
    } else if (qcommute_cmd->parsed()) {
      const auto s = qcommute_exponent(a.spec, poly(expr_a), poly(expr_b), rewrite);
      out.emit(true, exponent_json(s), exponent_text(s));
    } else if (normal_cmd->parsed()) {
      const auto report = is_normal(a.spec, poly(expr_a), rewrite);
      json exps = json::object();
      std::ostringstream text;
      text << (report.normal ? "normal" : "not normal") << "\n";
      for (std::size_t g = 0; g < report.exponents.size(); ++g) {
        exps[a.spec.names[g]] = exponent_json(report.exponents[g]);
        text << "  " << a.spec.names[g] << ": " << exponent_text(report.exponents[g]) << "\n";
      }
      out.emit(true, {{"normal", report.normal}, {"exponents", exps}}, text.str());
    } else if (weight_cmd->parsed()) {
      const auto w = torus_weight(a.spec, poly(expr_a));
      out.emit(true, weight_json(w), w ? weight_to_string(*w) : "inhomogeneous");
    } else if (theta_cmd->parsed() || laurent_cmd->parsed()) {
      if (a.spec.size() < 1) throw UsageError("the algebra has no generators");
      const LaurentRing ring(a.spec, nilpotence_bound, rewrite);
      const Expr e = parse_expr(expr_a);
      LaurentElem value;
      if (laurent_cmd->parsed()) {
        value = eval_laurent(e, ring, qm);
      } else {
        const NcPoly p = eval_poly(e, ctx);
        value = theta_alt_flag ? theta_alt(ring, p) : theta(ring, p);
      }
      const std::string r = to_string(a.spec, value);
      out.emit(true, r, r);
    } else if (grassmann_cmd->parsed()) {
      const QuantumMatrix& m = require_qmat(a);
      if (grassmann_mode == "minors") {
        json result = json::object();
        std::ostringstream text;
        for (const auto& [cols, value] : maximal_minors(m).minors) {
          const std::string key = minor_set_text(cols);
          result[key] = render(value);
          text << key << " = " << render(value) << "\n";
        }
        out.emit(true, result, text.str());
      } else if (grassmann_mode == "extremal") {
        const auto report = extremal_normality_report(m);
        json entries = json::array();
        std::ostringstream text;
        for (const auto& e : report.entries) {
          const std::string lhs = minor_set_text(e.extremal);
          const std::string rhs = minor_set_text(e.against);
          entries.push_back({{"extremal", lhs}, {"against", rhs}, {"exponent", exponent_json(e.exponent)}});
          text << lhs << " " << rhs << " " << exponent_text(e.exponent) << "\n";
        }
        text << (report.success() ? "extremal minors are normal" : "extremal normality fails") << "\n";
        out.emit(report.success(), {{"success", report.success()}, {"entries", entries}}, text.str());
        return report.success() ? kExitOk : kExitFailure;
      } else {
        const auto report = phi_scaling_check(m);
        json entries = json::array();
        std::ostringstream text;
        for (const auto& e : report.entries) {
          entries.push_back({{"minor", to_string(e.minor)}, {"scales", e.scales}});
          text << to_string(e.minor) << " " << (e.scales ? "ok" : "FAILED") << "\n";
        }
        out.emit(report.success(), {{"success", report.success()}, {"entries", entries}}, text.str());
        return report.success() ? kExitOk : kExitFailure;
      }
    } else if (axioms_cmd->parsed()) {
      const CglReport report = check_cgl_axioms(a.spec, nilpotence_bound, rewrite);
      json result = cgl_report_json(report);
      result["torsionfree"] = to_string(is_torsionfree(a.spec));
      std::string text = cgl_report_text(report) + "torsionfree: " + to_string(is_torsionfree(a.spec)) + "\n";
      out.emit(report.passed(), result, text);
      return report.passed() ? kExitOk : kExitFailure;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    out.error("parse", e.what(), e.position());
    return kExitUsage;
  } catch (const UsageError& e) {
    out.error("usage", e.what(), std::nullopt);
    return kExitUsage;
  } catch (const SpecError& e) {
    out.error("spec", e.what(), std::nullopt);
    return kExitUsage;
  } catch (const LevelError& e) {
    out.error("level", e.what(), std::nullopt);
    return kExitUsage;
  } catch (const Error& e) {
    out.error("computation", e.what(), std::nullopt);
    return kExitFailure;
  } catch (const std::out_of_range& e) {
    out.error("usage", e.what(), std::nullopt);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    out.error("usage", e.what(), std::nullopt);
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    out.error("spec", e.what(), std::nullopt);
    return kExitUsage;
  }
}
