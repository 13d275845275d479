#ifndef GLAISHER_REPORT_HPP
#define GLAISHER_REPORT_HPP

#include <algorithm>
#include <chrono>
#include <ctime>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "context.hpp"
#include "real.hpp"
#include "routes.hpp"

#ifndef GLAISHER_VERSION
#define GLAISHER_VERSION "0.1.0"
#endif

namespace glaisher {

/// Bad request: empty or unknown route set, malformed grid.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ContextInfo {
  long precision_digits = 0;
  Real target_tolerance;
  int quad_max_level = 0;
  std::vector<RouteId> requested_routes;
};

struct Failure {
  std::string name;
  std::string error;
};

struct ConvergenceRecord {
  RouteId route_id = RouteId::limit;
  std::string parameter_name;
  long parameter_value = 0;
  Real estimate;
  Real abs_delta_vs_consensus;
  std::string error;  // empty on success
};

struct AgreementMatrix {
  std::vector<RouteId> routes;
  std::vector<std::vector<Real>> entries;
};

struct ReportDocument {
  ContextInfo context_info;
  std::vector<RouteEstimate> estimates;
  std::vector<Failure> failures;
  std::vector<IdentityResidual> residuals;
  AgreementMatrix agreement_matrix;
  std::vector<ConvergenceRecord> convergence_records;
  std::map<std::string, std::string> measurements;
  std::string timestamp;
  std::string toolkit_version = GLAISHER_VERSION;

  const RouteEstimate* estimate(RouteId id) const {
    for (const auto& e : estimates)
      if (e.route_id == id) return &e;
    return nullptr;
  }
};

struct RunOptions {
  RouteParams params;
  ResidualOptions residual_options;
  bool identity_checks = true;
  bool parallel = true;
  /// When hasse is requested, search N <= this for the first 6-digit match.
  std::optional<long> hasse_search_max = 200;
};

namespace detail {

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline std::vector<RouteId> normalized_route_set(const std::vector<RouteId>& routes) {
  if (routes.empty()) throw config_error("route set is empty");
  std::vector<RouteId> out;
  for (RouteId id : kAllRoutes)
    if (std::find(routes.begin(), routes.end(), id) != routes.end()) out.push_back(id);
  return out;
}

}  // namespace detail

inline std::vector<RouteId> parse_route_list(const std::vector<std::string>& names) {
  std::vector<RouteId> out;
  for (const auto& name : names) {
    const auto id = parse_route_id(name);
    if (!id) throw config_error("unknown route '" + name + "'");
    out.push_back(*id);
  }
  return out;
}

/// Pairwise |value_i - value_j| over the given estimates; symmetric with an
/// exactly zero diagonal.
inline AgreementMatrix agreement_matrix(const std::vector<RouteEstimate>& estimates) {
  AgreementMatrix m;
  const std::size_t n = estimates.size();
  for (const auto& e : estimates) m.routes.push_back(e.route_id);
  m.entries.assign(n, std::vector<Real>(n, Real(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m.entries[i][j] = abs(estimates[i].value - estimates[j].value);
      m.entries[j][i] = m.entries[i][j];
    }
  return m;
}

/// Two estimates agree when both converged and their difference is within
/// ten times the sum of their error estimates, or within `tolerance`.
inline bool estimates_agree(const RouteEstimate& a, const RouteEstimate& b, const Real& tolerance) {
  if (!a.converged || !b.converged) return false;
  return abs(a.value - b.value) <= max(tolerance, 10 * (a.error_estimate + b.error_estimate));
}

inline bool all_agree(const ReportDocument& doc) {
  if (!doc.failures.empty()) return false;
  for (std::size_t i = 0; i < doc.estimates.size(); ++i) {
    if (!doc.estimates[i].converged) return false;
    for (std::size_t j = i + 1; j < doc.estimates.size(); ++j)
      if (!estimates_agree(doc.estimates[i], doc.estimates[j], doc.context_info.target_tolerance)) return false;
  }
  return true;
}

/// Runs the requested routes and every identity check. A route or check that
/// throws is listed under failures; only configuration errors propagate.
inline ReportDocument run_all(const ComputeContext& ctx, const std::vector<RouteId>& route_set,
                              const RunOptions& options = {}) {
  const std::vector<RouteId> routes = detail::normalized_route_set(route_set);
  ctx.constants();

  ReportDocument doc;
  doc.timestamp = detail::utc_timestamp();
  doc.context_info = ContextInfo{ctx.precision_digits(), ctx.target_tolerance(), ctx.quad_max_level(), routes};

  using Outcome = std::variant<RouteEstimate, std::string>;
  auto attempt = [&ctx, &options](RouteId id) -> Outcome {
    try {
      return run_route(id, options.params, ctx);
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
  };
  std::vector<Outcome> outcomes;
  if (options.parallel) {
    std::vector<std::future<Outcome>> pending;
    for (RouteId id : routes) pending.push_back(std::async(std::launch::async, attempt, id));
    for (auto& f : pending) outcomes.push_back(f.get());
  } else {
    for (RouteId id : routes) outcomes.push_back(attempt(id));
  }
  for (std::size_t i = 0; i < routes.size(); ++i) {
    if (auto* e = std::get_if<RouteEstimate>(&outcomes[i]))
      doc.estimates.push_back(std::move(*e));
    else
      doc.failures.push_back(Failure{std::string(to_string(routes[i])), std::get<std::string>(outcomes[i])});
  }
  doc.agreement_matrix = agreement_matrix(doc.estimates);

  auto scope = ctx.scope();
  std::optional<Real> reference;
  auto log_a_reference = [&]() -> const Real& {
    if (!reference) {
      const RouteEstimate* f = doc.estimate(RouteId::feaux);
      reference = (f && f->converged) ? f->value : route_feaux(ctx).value;
    }
    return *reference;
  };

  auto record = [&doc](std::string name, auto&& check) {
    try {
      doc.residuals.push_back(check());
    } catch (const std::exception& e) {
      doc.failures.push_back(Failure{std::move(name), e.what()});
    }
  };
  if (options.identity_checks) {
    record("glaisher_half", [&] { return glaisher_identity_residual(ctx, log_a_reference(), options.residual_options); });
    record("gla2", [&] { return gla2_residual(ctx, log_a_reference(), options.residual_options); });
    record("log_sin", [&] { return log_sin_check(ctx, options.residual_options); });
    record("res2_measure_check", [&] {
      const RouteEstimate* k = doc.estimate(RouteId::kummer);
      if (k && k->parameters.count("measure") && k->parameters.at("measure") == to_string(Res2Measure::dt_over_t))
        return IdentityResidual{IdentityId::res2_measure_check, k->value - log_a_reference(), ctx.target_tolerance()};
      return res2_measure_check(ctx, log_a_reference());
    });
  }

  if (options.hasse_search_max && std::find(routes.begin(), routes.end(), RouteId::hasse) != routes.end()) {
    try {
      const auto first = hasse_first_agreement(*options.hasse_search_max, 6.0, log_a_reference(), ctx);
      doc.measurements["hasse_search_max_N"] = std::to_string(*options.hasse_search_max);
      doc.measurements["hasse_first_N_6_digits"] = first ? std::to_string(*first) : "none";
    } catch (const std::exception& e) {
      doc.failures.push_back(Failure{"hasse_search", e.what()});
    }
  }
  return doc;
}

inline std::string_view grid_parameter_name(RouteId id) {
  switch (id) {
    case RouteId::limit: return "n";
    case RouteId::fourier_series:
    case RouteId::hasse: return "N";
    default: return "";
  }
}

/// One record per grid point for a series route, deltas taken against the
/// feaux/kummer consensus. Per-point failures are recorded, not thrown.
inline std::vector<ConvergenceRecord> convergence_study(RouteId route, const std::vector<long>& grid,
                                                        const ComputeContext& ctx, const RouteParams& params = {}) {
  if (grid.empty()) throw config_error("convergence grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i - 1] < grid[i])) throw config_error("convergence grid must be strictly ascending");
  const std::string_view name = grid_parameter_name(route);
  if (name.empty()) throw config_error("route '" + std::string(to_string(route)) + "' has no grid parameter");

  const Real consensus = consensus_log_a(ctx).value;
  auto scope = ctx.scope();
  std::vector<ConvergenceRecord> records;
  for (long value : grid) {
    ConvergenceRecord rec;
    rec.route_id = route;
    rec.parameter_name = std::string(name);
    rec.parameter_value = value;
    RouteParams p = params;
    if (route == RouteId::limit) p.limit_n = value;
    if (route == RouteId::fourier_series) p.fourier_terms = value;
    if (route == RouteId::hasse) p.hasse_terms = value;
    try {
      const RouteEstimate e = run_route(route, p, ctx);
      rec.estimate = e.value;
      rec.abs_delta_vs_consensus = abs(e.value - consensus);
    } catch (const std::exception& e) {
      rec.estimate = Real(std::numeric_limits<double>::quiet_NaN());
      rec.abs_delta_vs_consensus = rec.estimate;
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Serialization

enum class Format { json, csv };

inline constexpr std::string_view kCsvHeader = "route,param,value,estimate,abs_delta";

namespace detail {

inline nlohmann::ordered_json to_json(const ReportDocument& doc) {
  using nlohmann::ordered_json;
  const long digits = doc.context_info.precision_digits;
  auto dec = [digits](const Real& x) { return to_decimal(x, digits); };

  ordered_json j;
  j["toolkit_version"] = doc.toolkit_version;
  j["timestamp"] = doc.timestamp;
  ordered_json info;
  info["precision_digits"] = doc.context_info.precision_digits;
  info["target_tolerance"] = dec(doc.context_info.target_tolerance);
  info["quad_max_level"] = doc.context_info.quad_max_level;
  info["requested_routes"] = ordered_json::array();
  for (RouteId id : doc.context_info.requested_routes) info["requested_routes"].push_back(to_string(id));
  j["context_info"] = info;

  j["estimates"] = ordered_json::array();
  for (const auto& e : doc.estimates) {
    ordered_json o;
    o["route_id"] = to_string(e.route_id);
    o["value"] = dec(e.value);
    o["error_estimate"] = dec(e.error_estimate);
    o["parameters"] = ordered_json(e.parameters);
    o["evaluations"] = e.evaluations;
    o["elapsed_ns"] = static_cast<long long>(e.elapsed.count());
    o["converged"] = e.converged;
    j["estimates"].push_back(o);
  }
  j["failures"] = ordered_json::array();
  for (const auto& f : doc.failures) j["failures"].push_back({{"name", f.name}, {"error", f.error}});
  j["residuals"] = ordered_json::array();
  for (const auto& r : doc.residuals) {
    ordered_json o;
    o["identity_id"] = to_string(r.identity_id);
    o["residual"] = dec(r.residual);
    o["tolerance_used"] = dec(r.tolerance_used);
    o["passed"] = r.passed();
    j["residuals"].push_back(o);
  }
  ordered_json matrix;
  matrix["routes"] = ordered_json::array();
  for (RouteId id : doc.agreement_matrix.routes) matrix["routes"].push_back(to_string(id));
  matrix["entries"] = ordered_json::array();
  for (const auto& row : doc.agreement_matrix.entries) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(dec(x));
    matrix["entries"].push_back(r);
  }
  j["agreement_matrix"] = matrix;
  j["convergence_records"] = ordered_json::array();
  for (const auto& c : doc.convergence_records) {
    ordered_json o;
    o["route_id"] = to_string(c.route_id);
    o["parameter_name"] = c.parameter_name;
    o["parameter_value"] = c.parameter_value;
    o["estimate"] = dec(c.estimate);
    o["abs_delta_vs_consensus"] = dec(c.abs_delta_vs_consensus);
    o["error"] = c.error;
    j["convergence_records"].push_back(o);
  }
  j["measurements"] = ordered_json(doc.measurements);
  return j;
}

inline RouteId route_from_json(const nlohmann::ordered_json& v) {
  const auto id = parse_route_id(v.get<std::string>());
  if (!id) throw config_error("unknown route '" + v.get<std::string>() + "' in report");
  return *id;
}

}  // namespace detail

inline std::string serialize_csv(const std::vector<ConvergenceRecord>& records, long digits) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += std::string(to_string(r.route_id)) + ',' + r.parameter_name + ',' + std::to_string(r.parameter_value) + ',' +
           to_decimal(r.estimate, digits) + ',' + to_decimal(r.abs_delta_vs_consensus, digits) + '\n';
  }
  return out;
}

/// JSON carries the whole document with every Real as a decimal string of P
/// significant digits; CSV carries the convergence records only.
inline std::string serialize(const ReportDocument& doc, Format format) {
  if (format == Format::csv) return serialize_csv(doc.convergence_records, doc.context_info.precision_digits);
  return detail::to_json(doc).dump(2) + "\n";
}

/// Inverse of serialize(doc, Format::json); Reals are read at ctx precision.
inline ReportDocument parse_report_json(std::string_view text, const ComputeContext& ctx) {
  using nlohmann::ordered_json;
  auto scope = ctx.scope();
  const ordered_json j = ordered_json::parse(text);
  auto real = [](const ordered_json& v) { return real_from_decimal(v.get<std::string>()); };

  ReportDocument doc;
  doc.toolkit_version = j.at("toolkit_version").get<std::string>();
  doc.timestamp = j.at("timestamp").get<std::string>();
  const auto& info = j.at("context_info");
  doc.context_info.precision_digits = info.at("precision_digits").get<long>();
  doc.context_info.target_tolerance = real(info.at("target_tolerance"));
  doc.context_info.quad_max_level = info.at("quad_max_level").get<int>();
  for (const auto& r : info.at("requested_routes")) doc.context_info.requested_routes.push_back(detail::route_from_json(r));

  for (const auto& o : j.at("estimates")) {
    RouteEstimate e;
    e.route_id = detail::route_from_json(o.at("route_id"));
    e.value = real(o.at("value"));
    e.error_estimate = real(o.at("error_estimate"));
    e.parameters = o.at("parameters").get<std::map<std::string, std::string>>();
    e.evaluations = o.at("evaluations").get<std::size_t>();
    e.elapsed = std::chrono::nanoseconds(o.at("elapsed_ns").get<long long>());
    e.converged = o.at("converged").get<bool>();
    doc.estimates.push_back(std::move(e));
  }
  for (const auto& o : j.at("failures"))
    doc.failures.push_back(Failure{o.at("name").get<std::string>(), o.at("error").get<std::string>()});
  for (const auto& o : j.at("residuals")) {
    const auto id = parse_identity_id(o.at("identity_id").get<std::string>());
    if (!id) throw config_error("unknown identity in report");
    doc.residuals.push_back(IdentityResidual{*id, real(o.at("residual")), real(o.at("tolerance_used"))});
  }
  const auto& matrix = j.at("agreement_matrix");
  for (const auto& r : matrix.at("routes")) doc.agreement_matrix.routes.push_back(detail::route_from_json(r));
  for (const auto& row : matrix.at("entries")) {
    std::vector<Real> values;
    for (const auto& x : row) values.push_back(real(x));
    doc.agreement_matrix.entries.push_back(std::move(values));
  }
  for (const auto& o : j.at("convergence_records")) {
    ConvergenceRecord c;
    c.route_id = detail::route_from_json(o.at("route_id"));
    c.parameter_name = o.at("parameter_name").get<std::string>();
    c.parameter_value = o.at("parameter_value").get<long>();
    const auto est = o.at("estimate").get<std::string>();
    const auto delta = o.at("abs_delta_vs_consensus").get<std::string>();
    c.estimate = est == "nan" ? Real(std::numeric_limits<double>::quiet_NaN()) : real_from_decimal(est);
    c.abs_delta_vs_consensus =
        delta == "nan" ? Real(std::numeric_limits<double>::quiet_NaN()) : real_from_decimal(delta);
    c.error = o.at("error").get<std::string>();
    doc.convergence_records.push_back(std::move(c));
  }
  doc.measurements = j.at("measurements").get<std::map<std::string, std::string>>();
  return doc;
}

}  // namespace glaisher

#endif  // GLAISHER_REPORT_HPP
