#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mzv/compositions.hpp"
#include "mzv/constants.hpp"
#include "mzv/engine.hpp"
#include "mzv/errors.hpp"
#include "mzv/powerseries.hpp"
#include "mzv/reductions.hpp"
#include "mzv/verifier.hpp"
#include "mzv/version.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kNoFamily = 3;

struct Config {
  std::optional<int> digits;
  bool as_json = false;
  std::string out_path;

  mzv::PrecisionContext context() const {
    return digits ? mzv::PrecisionContext(*digits) : mzv::PrecisionContext::from_environment();
  }
};

int significant(const mzv::PrecisionContext& ctx) { return std::min(ctx.digits() - 5, 30); }

json envelope(const std::string& command, json inputs) {
  json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  return j;
}

void finish(json& j) { j["version"] = mzv::kVersion; }

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw mzv::UsageError("cannot write " + cfg.out_path);
  out << text;
}

void emit_json(const Config& cfg, json j) {
  finish(j);
  emit(cfg, j.dump(2) + "\n");
}

// ---------------------------------------------------------------- eval

int cmd_eval(const Config& cfg, const std::string& expr, const std::string& x_text, double tol,
             std::optional<long> terms) {
  mzv::PrecisionContext ctx = cfg.context();
  mzv::Composition comp = mzv::parse_composition(expr);
  mzv::Rational x = mzv::parse_rational(x_text);
  mzv::EvalOptions opt;
  if (terms) {
    if (*terms < 1) throw mzv::UsageError("--terms must be >= 1");
    opt.max_terms_unit = opt.max_terms_alternating = opt.max_terms_geometric = *terms;
  }
  mzv::EvalResult r = mzv::eval_auto(comp, x, tol, ctx, opt);
  const int sig = significant(ctx);

  if (cfg.as_json) {
    json j = envelope("eval", {{"expr", expr}, {"x", mzv::to_string(x)}, {"tol", tol}, {"prec", ctx.digits()}});
    j["result"] = {{"expr", mzv::render(comp)},
                   {"x", mzv::to_string(x)},
                   {"value", r.value.to_string(sig)},
                   {"err_bound", r.err_bound.to_string(3)},
                   {"terms", r.terms_used},
                   {"method", mzv::to_string(r.method)},
                   {"warning", r.warning}};
    emit_json(cfg, std::move(j));
  } else {
    std::ostringstream os;
    os << "value      " << r.value.to_string(sig) << "\n"
       << "err_bound  " << r.err_bound.to_string(3) << "\n"
       << "terms      " << r.terms_used << "\n"
       << "method     " << mzv::to_string(r.method) << "\n";
    if (r.warning) os << "warning    tolerance not reached within the term budget\n";
    emit(cfg, os.str());
  }
  return 0;
}

// ---------------------------------------------------------------- closed

int cmd_closed(const Config& cfg, const std::string& expr, const std::string& x_text) {
  mzv::PrecisionContext ctx = cfg.context();
  mzv::Composition comp = mzv::parse_composition(expr);
  mzv::Rational x = mzv::parse_rational(x_text);
  auto found = mzv::find_reductions(comp, x);
  mzv::ConstantTable table(ctx);
  const int sig = significant(ctx);

  if (cfg.as_json) {
    json j = envelope("closed", {{"expr", expr}, {"x", mzv::to_string(x)}, {"prec", ctx.digits()}});
    json list = json::array();
    for (const auto& r : found)
      list.push_back({{"family", r.family},
                      {"route", mzv::to_string(r.route)},
                      {"target", mzv::render(r.target)},
                      {"x", mzv::to_string(r.x)},
                      {"closed_form", r.closed_form.to_string()},
                      {"value", r.closed_form.realize(table).to_string(sig)}});
    j["result"] = std::move(list);
    emit_json(cfg, std::move(j));
  } else {
    std::ostringstream os;
    if (found.empty()) os << "no known closed form for (" << mzv::render(comp) << ") at x = " << mzv::to_string(x) << "\n";
    for (const auto& r : found)
      os << r.family << "  " << r.closed_form.to_string() << "\n"
         << "  = " << r.closed_form.realize(table).to_string(sig) << "\n";
    emit(cfg, os.str());
  }
  return found.empty() ? kNoFamily : 0;
}

// ---------------------------------------------------------------- dual

int cmd_dual(const Config& cfg, const std::string& expr) {
  mzv::Composition comp = mzv::parse_composition(expr);
  std::string d = mzv::render(mzv::dual(comp));
  if (cfg.as_json) {
    json j = envelope("dual", {{"expr", expr}});
    j["result"] = {{"dual", d}};
    emit_json(cfg, std::move(j));
  } else {
    emit(cfg, d + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------- coeffs

mzv::Series<mzv::SymbolicValue> series_by_name(const std::string& which, int order) {
  if (which == "bbb14" || which == "tmilk" || which == "S1" || which == "Sprime1")
    return mzv::gf_coeff_route(which, order);
  if (which == "c" || which == "cprime") {
    if (order < 0) throw mzv::DomainError("series order must be >= 0");
    return mzv::Series<mzv::SymbolicValue>(which == "c" ? mzv::c_sequence(order) : mzv::c_prime_sequence(order));
  }
  return mzv::named_series(which, order);
}

int cmd_coeffs(const Config& cfg, const std::string& which, int order) {
  mzv::PrecisionContext ctx = cfg.context();
  mzv::ConstantTable table(ctx);
  auto s = series_by_name(which, order);
  const int sig = significant(ctx);

  if (cfg.as_json) {
    json j = envelope("coeffs", {{"series", which}, {"order", order}, {"prec", ctx.digits()}});
    json list = json::array();
    for (int k = 0; k <= s.order(); ++k)
      list.push_back({{"k", k}, {"symbolic", s[k].to_string()}, {"value", s[k].realize(table).to_string(sig)}});
    j["result"] = std::move(list);
    emit_json(cfg, std::move(j));
  } else {
    std::ostringstream os;
    for (int k = 0; k <= s.order(); ++k)
      os << "[" << k << "]  " << s[k].to_string() << "  = " << s[k].realize(table).to_string(sig) << "\n";
    emit(cfg, os.str());
  }
  return 0;
}

// ---------------------------------------------------------------- verify / suite

json report_json(const mzv::VerificationReport& r) {
  json points = json::array();
  for (const auto& p : r.points)
    points.push_back({{"label", p.label},
                      {"value", p.value},
                      {"reference", p.reference},
                      {"residual", p.residual},
                      {"tolerance", p.tolerance},
                      {"pass", p.pass()}});
  return {{"id", r.id},
          {"kind", mzv::to_string(r.kind)},
          {"pass", r.pass},
          {"max_residual", r.max_residual},
          {"tolerance", r.tolerance},
          {"points_evaluated", r.points.size()},
          {"elapsed_s", r.elapsed_s},
          {"time_limit_s", r.time_limit_s},
          {"digits", r.digits},
          {"points", std::move(points)}};
}

std::string report_line(const mzv::VerificationReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.id << "  points=" << r.points.size() << "  max_residual=" << r.max_residual
     << "  tol=" << r.tolerance << "  time=" << r.elapsed_s << "s\n";
  return os.str();
}

mzv::Overrides overrides_for(const Config& cfg, std::optional<double> tol) {
  mzv::Overrides o;
  if (tol) {
    std::ostringstream os;
    os.precision(17);
    os << *tol;
    o["tol"] = os.str();
  }
  o["prec"] = std::to_string(cfg.context().digits());
  return o;
}

int cmd_verify(const Config& cfg, const std::string& id, std::optional<double> tol) {
  mzv::VerificationReport r = mzv::run(id, overrides_for(cfg, tol));
  if (cfg.as_json) {
    json j = envelope("verify", {{"id", id}, {"prec", r.digits}});
    if (tol) j["inputs"]["tol"] = *tol;
    j["result"] = report_json(r);
    emit_json(cfg, std::move(j));
  } else {
    std::ostringstream os;
    os << report_line(r);
    for (const auto& p : r.points)
      os << "  " << (p.pass() ? "ok   " : "FAIL ") << p.label << "  residual=" << p.residual << "  tol=" << p.tolerance
         << "\n";
    emit(cfg, os.str());
  }
  return r.pass ? 0 : 1;
}

int cmd_suite(const Config& cfg, const std::optional<std::vector<std::string>>& only, std::optional<double> tol,
              unsigned jobs) {
  mzv::SuiteConfig sc;
  sc.ids = only;
  sc.overrides = overrides_for(cfg, tol);
  sc.jobs = jobs;
  mzv::SuiteSummary s = mzv::run_suite(sc);
  if (cfg.as_json) {
    json inputs = {{"prec", cfg.context().digits()}};
    if (tol) inputs["tol"] = *tol;
    if (only) inputs["only"] = *only;
    json j = envelope("suite", std::move(inputs));
    json reports = json::array();
    for (const auto& r : s.reports) reports.push_back(report_json(r));
    j["reports"] = std::move(reports);
    j["pass"] = s.pass;
    j["elapsed_s"] = s.elapsed_s;
    emit_json(cfg, std::move(j));
  } else {
    std::ostringstream os;
    for (const auto& r : s.reports) os << report_line(r);
    os << (s.pass ? "all checks passed" : "some checks failed") << " (" << s.reports.size() << " checks, "
       << s.elapsed_s << "s)\n";
    emit(cfg, os.str());
  }
  return s.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple zeta values, polylogarithms and Euler sums: evaluation and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", mzv::kVersion);

  Config cfg;
  int digits = 0;
  app.add_option("--prec", digits, "working precision in decimal digits (>= 30; default MZV_PREC or 60)");
  app.add_flag("--json", cfg.as_json, "print JSON instead of text");
  app.add_option("--out", cfg.out_path, "write output to this file");

  std::string expr, x_text = "1";
  double tol = 1e-12;
  long terms = 0;
  auto* eval = app.add_subcommand("eval", "evaluate a sum numerically");
  eval->add_option("expr", expr, "argument string, e.g. \"2,1\" or \"3,{1,3}^2\"")->required();
  eval->add_option("--x", x_text, "argument x in [0,1] as a rational or decimal (default 1)");
  eval->add_option("--tol", tol, "absolute tolerance (default 1e-12)");
  eval->add_option("--terms", terms, "cap on the outer summation index");

  auto* closed = app.add_subcommand("closed", "look up a closed form");
  closed->add_option("expr", expr, "argument string")->required();
  closed->add_option("--x", x_text, "1 or 1/2");

  auto* dual = app.add_subcommand("dual", "dual of an admissible unbarred string");
  dual->add_option("expr", expr, "argument string")->required();

  std::string which;
  int order = 10;
  auto* coeffs = app.add_subcommand("coeffs", "Maclaurin coefficients of a named series");
  coeffs->add_option("series", which, "A, G, Q, csc2, csch2, c, cprime, bbb14, tmilk, S1, Sprime1")->required();
  coeffs->add_option("--order", order, "truncation order (default 10)");

  std::string id;
  double vtol = 0;
  auto* verify = app.add_subcommand("verify", "run one identity check");
  verify->add_option("id", id, "check id, e.g. THM1")->required();
  auto* vtol_opt = verify->add_option("--tol", vtol, "override every point tolerance");

  std::vector<std::string> only;
  unsigned jobs = 0;
  double stol = 0;
  auto* suite = app.add_subcommand("suite", "run every identity check");
  auto* only_opt = suite->add_option("--only", only, "restrict to these ids (may be empty)");
  only_opt->expected(0, -1);
  auto* stol_opt = suite->add_option("--tol", stol, "override every point tolerance");
  suite->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (app.get_option("--prec")->count() > 0) cfg.digits = digits;
    if (*eval) {
      auto* terms_opt = eval->get_option("--terms");
      return cmd_eval(cfg, expr, x_text, tol, terms_opt->count() ? std::optional<long>(terms) : std::nullopt);
    }
    if (*closed) return cmd_closed(cfg, expr, x_text);
    if (*dual) return cmd_dual(cfg, expr);
    if (*coeffs) return cmd_coeffs(cfg, which, order);
    if (*verify) return cmd_verify(cfg, id, vtol_opt->count() ? std::optional<double>(vtol) : std::nullopt);
    if (*suite) {
      std::optional<std::vector<std::string>> filter;
      if (only_opt->count() > 0 || !only.empty()) {
        only.erase(std::remove(only.begin(), only.end(), std::string()), only.end());
        filter = only;
      }
      return cmd_suite(cfg, filter, stol_opt->count() ? std::optional<double>(stol) : std::nullopt, jobs);
    }
  } catch (const mzv::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
