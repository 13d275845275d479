// glaisher: compute log A by several routes and cross-check them.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <glaisher/glaisher.hpp>

namespace {

using namespace glaisher;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitFailed = 2;

struct CliConfig {
  long digits = 50;
  std::vector<std::string> routes;
  std::string output = "text";
  std::string out_path;
  RouteParams params;
  std::string res2_measure = "dt/t";
  bool accelerate = true;
  bool corrupt_constant = false;
  std::string route;
  std::vector<std::string> grid;
};

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw config_error("cannot open '" + cfg.out_path + "' for writing");
  out << text;
}

std::string shown(const Real& x, long digits) { return to_decimal(x, std::max(1L, digits - 10)); }

std::string sci(const Real& x) { return to_decimal(x, 3); }

std::string text_report(const ReportDocument& doc) {
  const long digits = doc.context_info.precision_digits;
  std::ostringstream os;
  os << "precision " << digits << " digits, tolerance " << sci(doc.context_info.target_tolerance) << "\n\n";
  for (const auto& e : doc.estimates) {
    os << std::left << std::setw(16) << to_string(e.route_id) << shown(e.value, digits) << "  +- "
       << sci(e.error_estimate) << (e.converged ? "" : "  (not converged)") << "\n";
  }
  for (const auto& f : doc.failures) os << std::left << std::setw(16) << f.name << "FAILED: " << f.error << "\n";
  if (!doc.agreement_matrix.routes.empty()) {
    os << "\n|difference|\n" << std::setw(16) << "";
    for (RouteId id : doc.agreement_matrix.routes) os << std::setw(16) << to_string(id);
    os << "\n";
    for (std::size_t i = 0; i < doc.agreement_matrix.routes.size(); ++i) {
      os << std::setw(16) << to_string(doc.agreement_matrix.routes[i]);
      for (const auto& x : doc.agreement_matrix.entries[i]) os << std::setw(16) << sci(x);
      os << "\n";
    }
  }
  if (!doc.residuals.empty()) {
    os << "\nresiduals\n";
    for (const auto& r : doc.residuals)
      os << std::setw(20) << to_string(r.identity_id) << std::setw(12) << sci(r.residual) << (r.passed() ? "  ok" : "  FAIL")
         << "\n";
  }
  for (const auto& [k, v] : doc.measurements) os << k << " = " << v << "\n";
  return os.str();
}

RouteParams route_params(const CliConfig& cfg) {
  RouteParams p = cfg.params;
  p.fourier_accelerate = cfg.accelerate;
  p.res2_measure = cfg.res2_measure == "dt" ? Res2Measure::dt : Res2Measure::dt_over_t;
  return p;
}

int cmd_compute(const CliConfig& cfg) {
  const std::vector<RouteId> routes =
      cfg.routes.empty() ? std::vector<RouteId>(kAllRoutes.begin(), kAllRoutes.end()) : parse_route_list(cfg.routes);
  const ComputeContext ctx(cfg.digits);
  RunOptions options;
  options.params = route_params(cfg);
  options.residual_options.corrupt_constant = cfg.corrupt_constant;
  const ReportDocument doc = run_all(ctx, routes, options);

  if (cfg.output == "json")
    emit(cfg, serialize(doc, Format::json));
  else if (cfg.output == "csv")
    emit(cfg, serialize(doc, Format::csv));
  else
    emit(cfg, text_report(doc));
  return all_agree(doc) ? kExitOk : kExitFailed;
}

int cmd_verify(const CliConfig& cfg) {
  const ComputeContext ctx(cfg.digits);
  ResidualOptions options;
  options.corrupt_constant = cfg.corrupt_constant;
  const Real log_a = consensus_log_a(ctx).value;
  ReportDocument doc;
  doc.timestamp = detail::utc_timestamp();
  doc.context_info = ContextInfo{ctx.precision_digits(), ctx.target_tolerance(), ctx.quad_max_level(), {}};
  doc.residuals.push_back(glaisher_identity_residual(ctx, log_a, options));
  doc.residuals.push_back(gla2_residual(ctx, log_a, options));
  doc.residuals.push_back(log_sin_check(ctx, options));

  bool ok = true;
  for (const auto& r : doc.residuals) ok = ok && r.passed();
  if (cfg.output == "json") {
    emit(cfg, serialize(doc, Format::json));
  } else {
    std::ostringstream os;
    os << "tolerance " << sci(ctx.target_tolerance()) << "\n";
    for (const auto& r : doc.residuals)
      os << std::left << std::setw(16) << to_string(r.identity_id) << std::setw(12) << sci(r.residual)
         << (r.passed() ? "  ok" : "  FAIL") << "\n";
    emit(cfg, os.str());
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_convergence(const CliConfig& cfg) {
  const auto id = parse_route_id(cfg.route);
  if (!id) throw config_error("unknown route '" + cfg.route + "'");
  std::vector<long> grid;
  for (const auto& item : cfg.grid) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw config_error("bad grid value '" + item + "'");
    grid.push_back(value);
  }
  if (grid.empty()) throw config_error("convergence grid is empty");
  const ComputeContext ctx(cfg.digits);
  ReportDocument doc;
  doc.timestamp = detail::utc_timestamp();
  doc.context_info = ContextInfo{ctx.precision_digits(), ctx.target_tolerance(), ctx.quad_max_level(), {*id}};
  doc.convergence_records = convergence_study(*id, grid, ctx, route_params(cfg));
  emit(cfg, serialize(doc, cfg.output == "json" ? Format::json : Format::csv));
  return kExitOk;
}

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--digits", cfg.digits, "Working precision in decimal digits (>= 20)")
      ->envname("GLAISHER_DIGITS")
      ->capture_default_str();
  sub->add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  sub->add_option("--limit-n", cfg.params.limit_n, "Base n for the limit route")->capture_default_str();
  sub->add_option("--richardson-order", cfg.params.richardson_order, "Richardson steps for the limit route")
      ->capture_default_str();
  sub->add_option("--fourier-N", cfg.params.fourier_terms, "Terms of the Fourier-series route")->capture_default_str();
  sub->add_option("--hasse-N", cfg.params.hasse_terms, "Outer terms of the Hasse series")->capture_default_str();
  sub->add_option("--res2-measure", cfg.res2_measure,
                  "Measure of the Kummer-route integral. Only for the control run: 'dt' is the divergent "
                  "variant and is expected to disagree")
      ->check(CLI::IsMember({"dt", "dt/t"}))
      ->capture_default_str();
  sub->add_flag("--debug-corrupt-constant", cfg.corrupt_constant,
                "Perturb one rational coefficient in each identity check (negative control)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compute log A (Glaisher-Kinkelin) by independent routes and cross-check them"};
  app.set_version_flag("--version", std::string(GLAISHER_VERSION));
  app.require_subcommand(1);
  CliConfig cfg;

  auto* compute = app.add_subcommand("compute", "Run routes and print estimates with the agreement matrix");
  add_common(compute, cfg);
  compute->add_option("--routes", cfg.routes, "Comma-separated routes (default: all)")->delimiter(',');
  compute->add_flag("--accelerate,!--no-accelerate", cfg.accelerate,
                    "Euler-Maclaurin tail for the Fourier-series route (default on)");

  auto* verify = app.add_subcommand("verify", "Evaluate the identity residuals");
  add_common(verify, cfg);

  auto* convergence = app.add_subcommand("convergence", "Tabulate one route over a parameter grid");
  add_common(convergence, cfg);
  convergence->add_option("--route", cfg.route, "limit, fourier_series or hasse")->required();
  convergence->add_option("--grid", cfg.grid, "Comma-separated ascending parameter values")->delimiter(',');
  convergence->add_flag("--accelerate,!--no-accelerate", cfg.accelerate,
                        "Euler-Maclaurin tail for the Fourier-series route (default off here)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  if (convergence->parsed() && convergence->count("--accelerate") == 0 && convergence->count("--no-accelerate") == 0)
    cfg.accelerate = false;

  try {
    if (compute->parsed()) return cmd_compute(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_convergence(cfg);
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const precision_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}
