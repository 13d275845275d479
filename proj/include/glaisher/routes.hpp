#ifndef GLAISHER_ROUTES_HPP
#define GLAISHER_ROUTES_HPP

#include <gmpxx.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernoulli.hpp"
#include "context.hpp"
#include "loggamma.hpp"
#include "power_series.hpp"
#include "quadrature.hpp"
#include "real.hpp"

namespace glaisher {

// ---------------------------------------------------------------------------
// Identifiers

enum class RouteId { limit, pain1, pain2, feaux, kummer, fourier_series, hasse };

inline constexpr std::array<RouteId, 7> kAllRoutes = {RouteId::limit,  RouteId::pain1,          RouteId::pain2,
                                                      RouteId::feaux,  RouteId::kummer,         RouteId::fourier_series,
                                                      RouteId::hasse};

inline std::string_view to_string(RouteId id) {
  switch (id) {
    case RouteId::limit: return "limit";
    case RouteId::pain1: return "pain1";
    case RouteId::pain2: return "pain2";
    case RouteId::feaux: return "feaux";
    case RouteId::kummer: return "kummer";
    case RouteId::fourier_series: return "fourier_series";
    case RouteId::hasse: return "hasse";
  }
  return "?";
}

inline std::optional<RouteId> parse_route_id(std::string_view name) {
  for (RouteId id : kAllRoutes)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

enum class IdentityId { glaisher_half, gla2, log_sin, res2_measure_check };

inline std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::glaisher_half: return "glaisher_half";
    case IdentityId::gla2: return "gla2";
    case IdentityId::log_sin: return "log_sin";
    case IdentityId::res2_measure_check: return "res2_measure_check";
  }
  return "?";
}

inline std::optional<IdentityId> parse_identity_id(std::string_view name) {
  for (IdentityId id : {IdentityId::glaisher_half, IdentityId::gla2, IdentityId::log_sin, IdentityId::res2_measure_check})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

/// Measure closing the tanh integral: dt/t is the one that reproduces log A;
/// dt is kept only as a negative control.
enum class Res2Measure { dt_over_t, dt };

inline std::string_view to_string(Res2Measure m) { return m == Res2Measure::dt ? "dt" : "dt/t"; }

// ---------------------------------------------------------------------------
// Results

struct RouteEstimate {
  RouteId route_id = RouteId::feaux;
  Real value;
  Real error_estimate;
  std::map<std::string, std::string> parameters;
  std::size_t evaluations = 0;
  std::chrono::nanoseconds elapsed{0};
  bool converged = true;
};

struct IdentityResidual {
  IdentityId identity_id = IdentityId::glaisher_half;
  Real residual;
  Real tolerance_used;

  bool passed() const { return abs(residual) < tolerance_used; }
};

/// The context cannot hold the digits a route cancels away.
class insufficient_precision : public precision_error {
 public:
  using precision_error::precision_error;
};

namespace detail {

class stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline RouteEstimate quadrature_route(RouteId id, const QuadratureResult& q, const Real& value, const Real& scale,
                                      const stopwatch& clock) {
  RouteEstimate r;
  r.route_id = id;
  r.value = value;
  r.error_estimate = abs(scale) * q.error_estimate;
  r.evaluations = q.evaluations;
  r.converged = q.converged;
  r.parameters["levels"] = std::to_string(q.levels_used);
  r.elapsed = clock.elapsed();
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Defining limit

/// Logarithm of the finite-n expression in the defining limit of A:
///   (n/2) log 2pi + (n^2/2 - 1/12) log n - 3n^2/4 + 1/12 - sum_{k=1}^{n-1} log k!.
/// Evaluated at n0 2^i for i = 0..count-1 in one pass over k.
inline std::vector<Real> limit_sequence(long n0, int count, const ComputeContext& ctx) {
  auto scope = ctx.scope();
  const Real& log_2pi = ctx.constants().log_2pi;
  std::vector<long> points;
  for (int i = 0; i < count; ++i) points.push_back(n0 << i);
  std::vector<Real> out;
  Real log_superfactorial = 0;  // sum_{k=1}^{n-1} log k!
  long k = 1;
  for (long n : points) {
    for (; k <= n - 1; ++k) log_superfactorial += log_gamma_ref(Real(k + 1), ctx);
    const Real nn = Real(n);
    const Real n2 = nn * nn;
    out.push_back(nn / 2 * log_2pi + (n2 / 2 - Real::ratio(1, 12)) * log(nn) - 3 * n2 / 4 + Real::ratio(1, 12) -
                  log_superfactorial);
  }
  return out;
}

/// Richardson table for a sequence sampled at n, 2n, 4n, ... whose error
/// expands in even powers of 1/n. Returns the diagonal entry of the given
/// order built from samples [first, first + order].
inline Real richardson_even(const std::vector<Real>& samples, std::size_t first, int order) {
  std::vector<Real> column(samples.begin() + static_cast<std::ptrdiff_t>(first),
                           samples.begin() + static_cast<std::ptrdiff_t>(first) + order + 1);
  for (int j = 1; j <= order; ++j) {
    const long factor = (1L << (2 * j)) - 1;  // 4^j - 1
    for (int i = order; i >= j; --i) column[i] = column[i] + (column[i] - column[i - 1]) / factor;
  }
  return column[order];
}

/// log A from the defining limit with Richardson extrapolation over
/// n, 2n, ..., 2^order n. One more doubling feeds the error estimate.
inline RouteEstimate route_limit(long n, int richardson_order, const ComputeContext& ctx) {
  if (n < 2) throw domain_error("route_limit: n must be >= 2");
  if (richardson_order < 0) throw domain_error("route_limit: richardson_order must be >= 0");
  detail::stopwatch clock;
  auto scope = ctx.scope();
  const std::vector<Real> samples = limit_sequence(n, richardson_order + 2, ctx);
  RouteEstimate r;
  r.route_id = RouteId::limit;
  r.value = richardson_even(samples, 0, richardson_order);
  const Real next = richardson_even(samples, 1, richardson_order);
  // Error of the order-p entry scales as n^{-2(p+1)}.
  const Real shrink = 1 - Real(1) / Real(1L << (2 * (richardson_order + 1)));
  r.error_estimate = abs(r.value - next) / shrink;
  r.parameters = {{"n", std::to_string(n)}, {"richardson_order", std::to_string(richardson_order)}};
  r.evaluations = static_cast<std::size_t>((n << (richardson_order + 1)) - 1);
  r.elapsed = clock.elapsed();
  return r;
}

// ---------------------------------------------------------------------------
// Integral routes

/// (1 - e^{-t/2}) (t coth(t/2) - 2) / t^3.
inline Integrand pain1_integrand(const ComputeContext& ctx) {
  auto scope = ctx.scope();
  auto direct = [](const Real& t) { return -expm1(-t / 2) * (t * coth(t / 2) - 2) / (t * t * t); };
  const std::size_t n = near_zero_series_length(ctx) + 2;
  const Real half = Real::ratio(1, 2);
  const PowerSeries a = (Real(1) - PowerSeries::exp_linear(-half, n)).divide_by_t(1);
  const PowerSeries b = (cosh_series(half, n) / sinh_over_t_series(half, n) - Real(2)).divide_by_t(2);
  return detail::make_series_integrand("pain1", DecayClass::algebraic, direct, a * b);
}

/// ((8 - 3t) e^t - 8 e^{t/2} - t) / (4 t^2 e^t (e^t - 1)).
inline Integrand pain2_integrand(const ComputeContext& ctx) {
  auto scope = ctx.scope();
  auto direct = [](const Real& t) {
    // Numerator and denominator scaled by e^{-2t}.
    const Real num = (8 - 3 * t) * exp(-t) - 8 * exp(-3 * t / 2) - t * exp(-2 * t);
    return num / (-4 * t * t * expm1(-t));
  };
  const std::size_t n = near_zero_series_length(ctx) + 3;
  const PowerSeries e1 = PowerSeries::exp_linear(Real(1), n);
  const PowerSeries t = PowerSeries::variable(n);
  const PowerSeries num = (e1 * Real(8) - t * e1 * Real(3) - PowerSeries::exp_linear(Real::ratio(1, 2), n) * Real(8) - t)
                              .divide_by_t(3);
  const PowerSeries den = e1 * (e1 - Real(1)).divide_by_t(1) * Real(4);
  return detail::make_series_integrand("pain2", DecayClass::exponential, direct, num / den);
}

/// [e^-t/8 - 1/((1+t)^{3/2} log^2(1+t)) - (log(1+t) - 2)/(2 (1+t) log^2(1+t))] / t.
inline Integrand feaux_route_integrand(const ComputeContext& ctx) {
  auto scope = ctx.scope();
  auto direct = [](const Real& t) {
    const Real l = log1p(t);
    const Real l2 = l * l;
    const Real one_plus_t = 1 + t;
    return (exp(-t) / 8 - 1 / (one_plus_t * sqrt(one_plus_t) * l2) - (l - 2) / (2 * one_plus_t * l2)) / t;
  };
  const std::size_t n = near_zero_series_length(ctx) + 3;
  const PowerSeries l = log1p_series(n);
  const PowerSeries ell = l.divide_by_t(1);
  const PowerSeries one_plus_t = PowerSeries::constant(Real(1), n) + PowerSeries::variable(n);
  // (1+t)^{-3/2} + (L - 2)/(2(1+t)) vanishes to second order at t = 0.
  const PowerSeries numerator =
      (pow(one_plus_t, Real::ratio(-3, 2)) + (l - Real(2)) * one_plus_t.reciprocal() * Real::ratio(1, 2)).divide_by_t(2);
  const PowerSeries bracket = PowerSeries::exp_linear(Real(-1), n) * Real::ratio(1, 8) - numerator / (ell * ell);
  return detail::make_series_integrand("feaux_route", DecayClass::algebraic, direct, bracket.divide_by_t(1));
}

/// [tanh(t/4)/t - e^-t/4] / t, or without the final 1/t for the dt control.
inline Integrand kummer_route_integrand(const ComputeContext& ctx, Res2Measure measure = Res2Measure::dt_over_t) {
  auto scope = ctx.scope();
  const bool over_t = measure == Res2Measure::dt_over_t;
  auto direct = [over_t](const Real& t) {
    const Real bracket = tanh(t / 4) / t - exp(-t) / 4;
    return over_t ? bracket / t : bracket;
  };
  const std::size_t n = near_zero_series_length(ctx) + 1;
  const Real quarter = Real::ratio(1, 4);
  const PowerSeries bracket =
      sinh_over_t_series(quarter, n) / cosh_series(quarter, n) - PowerSeries::exp_linear(Real(-1), n) * quarter;
  return detail::make_series_integrand(over_t ? "kummer_route" : "kummer_route_dt", DecayClass::algebraic, direct,
                                       over_t ? bracket.divide_by_t(1) : bracket);
}

/// log A = (I + (1/3) log 2 + 1/8) / 3.
inline RouteEstimate route_pain1(const ComputeContext& ctx) {
  detail::stopwatch clock;
  auto scope = ctx.scope();
  const auto q = integrate_zero_to_inf(pain1_integrand(ctx), ctx.target_tolerance(), ctx);
  const Real value = (q.value + ctx.constants().log2 / 3 + Real::ratio(1, 8)) / 3;
  return detail::quadrature_route(RouteId::pain1, q, value, Real::ratio(1, 3), clock);
}

/// log A = (I + (7/12) log 2 - (log pi)/2 + 1) / 3.
inline RouteEstimate route_pain2(const ComputeContext& ctx) {
  detail::stopwatch clock;
  auto scope = ctx.scope();
  const auto& c = ctx.constants();
  const auto q = integrate_zero_to_inf(pain2_integrand(ctx), ctx.target_tolerance(), ctx);
  const Real value = (q.value + 7 * c.log2 / 12 - c.log_pi / 2 + 1) / 3;
  return detail::quadrature_route(RouteId::pain2, q, value, Real::ratio(1, 3), clock);
}

/// log A = 1/3 + (7/36) log 2 - (log pi)/6 + (2/3) I.
inline RouteEstimate route_feaux(const ComputeContext& ctx) {
  detail::stopwatch clock;
  auto scope = ctx.scope();
  const auto& c = ctx.constants();
  const auto q = integrate_zero_to_inf(feaux_route_integrand(ctx), ctx.target_tolerance(), ctx);
  const Real value = Real::ratio(1, 3) + 7 * c.log2 / 36 - c.log_pi / 6 + 2 * q.value / 3;
  return detail::quadrature_route(RouteId::feaux, q, value, Real::ratio(2, 3), clock);
}

/// log A = (log 2)/36 + (1/3) I.
inline RouteEstimate route_kummer(const ComputeContext& ctx, Res2Measure measure = Res2Measure::dt_over_t) {
  detail::stopwatch clock;
  auto scope = ctx.scope();
  const auto q = integrate_zero_to_inf(kummer_route_integrand(ctx, measure), ctx.target_tolerance(), ctx);
  const Real value = ctx.constants().log2 / 36 + q.value / 3;
  RouteEstimate r = detail::quadrature_route(RouteId::kummer, q, value, Real::ratio(1, 3), clock);
  r.parameters["measure"] = std::string(to_string(measure));
  return r;
}

// ---------------------------------------------------------------------------
// Series routes

namespace detail {

// Terms of the Euler-Maclaurin remainder for f(n) = log(2n+1)/(2n+1)^2:
//   sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_k B_2k/(2k)! f^{(2k-1)}(N).
// With u = 2N+1, f^{(m)}(N) = 2^m u^{-(m+2)} (a_m log u + b_m),
// a_0 = 1, b_0 = 0, a_m = -(m+1) a_{m-1}, b_m = -(m+1) b_{m-1} + a_{m-1}.
struct EulerMaclaurinTail {
  Real value;
  Real last_correction;
  int corrections = 0;
};

inline EulerMaclaurinTail odd_log_square_tail(long first_index, const Real& stop_below, int max_corrections) {
  const Real u = Real(2 * first_index + 1);
  const Real log_u = log(u);
  EulerMaclaurinTail tail;
  tail.value = (log_u + 1) / (2 * u) + log_u / (2 * u * u);
  Real a = 1;
  Real b = 0;
  Real factorial = 1;  // (2k)!
  Real previous_magnitude;
  for (int m = 1; m < 2 * max_corrections; ++m) {
    const Real a_prev = a;
    a = -(m + 1) * a;
    b = -(m + 1) * b + a_prev;
    if (m % 2 == 0) continue;
    const long k = (m + 1) / 2;
    factorial *= (2 * k - 1) * (2 * k);
    const Real derivative = ldexp(pow(u, -(m + 2)) * (a * log_u + b), m);
    const Real correction = bernoulli_b2k_real(static_cast<std::size_t>(k)) / factorial * derivative;
    const Real magnitude = abs(correction);
    if (tail.corrections > 0 && magnitude > previous_magnitude) break;
    tail.value -= correction;
    tail.last_correction = magnitude;
    ++tail.corrections;
    previous_magnitude = magnitude;
    if (magnitude < stop_below) break;
  }
  return tail;
}

}  // namespace detail

/// log A = (log 2)/36 + (gamma + log 2pi)/12 + (2/(3 pi^2)) sum_{n>=0} log(2n+1)/(2n+1)^2,
/// summed to N terms, with an Euler-Maclaurin remainder when `accelerate`.
inline RouteEstimate route_fourier_series(long terms, bool accelerate, const ComputeContext& ctx) {
  if (terms < 1) throw domain_error("route_fourier_series: N must be >= 1");
  detail::stopwatch clock;
  auto scope = ctx.scope();
  const auto& c = ctx.constants();
  Real sum = 0;
  for (long n = 1; n < terms; ++n) {  // the n = 0 term is log 1 = 0
    const Real odd = Real(2 * n + 1);
    sum += log(odd) / (odd * odd);
  }
  const Real head = c.log2 / 36 + (c.euler_gamma + c.log_2pi) / 12;
  const Real scale = 2 / (3 * c.pi * c.pi);
  RouteEstimate r;
  r.route_id = RouteId::fourier_series;
  r.parameters = {{"N", std::to_string(terms)}, {"accelerate", accelerate ? "true" : "false"}};
  r.evaluations = static_cast<std::size_t>(terms);
  const Real floor = Real::pow10(-(ctx.precision_digits() + kGuardDigits));
  if (accelerate) {
    const auto tail = detail::odd_log_square_tail(terms, floor, 60);
    r.value = head + scale * (sum + tail.value);
    r.error_estimate = scale * tail.last_correction + floor;
    r.parameters["em_corrections"] = std::to_string(tail.corrections);
  } else {
    // The omitted remainder itself, to leading order.
    const auto tail = detail::odd_log_square_tail(terms, floor, 0);
    r.value = head + scale * sum;
    r.error_estimate = scale * tail.value;
  }
  r.elapsed = clock.elapsed();
  return r;
}

/// Decimal digits route_hasse needs to sum N outer terms: the binomial
/// alternation cancels about N log10(2) digits.
inline long hasse_required_digits(long terms) {
  return static_cast<long>(std::ceil(0.302 * static_cast<double>(terms))) + 20;
}

/// Partial sums S_0..S_N of
///   1/8 - (1/2) sum_n 1/(n+1) sum_{k=0}^{n} (-1)^k C(n,k) (k+1)^2 log(k+1),
/// with the inner sums carried at P + 0.302 N digits.
inline std::vector<Real> hasse_partial_sums(long terms, const ComputeContext& ctx) {
  if (terms < 0) throw domain_error("hasse: N must be >= 0");
  const long need = hasse_required_digits(terms);
  if (ctx.precision_digits() < need)
    throw insufficient_precision("insufficient precision for hasse N=" + std::to_string(terms) + ": need " +
                                 std::to_string(need) + " digits, context has " +
                                 std::to_string(ctx.precision_digits()));
  const long cancelled = static_cast<long>(std::ceil(0.302 * static_cast<double>(terms)));
  std::vector<Real> sums;
  sums.reserve(static_cast<std::size_t>(terms) + 1);
  precision_scope scope(digits_to_bits(ctx.precision_digits() + kGuardDigits + cancelled));
  std::vector<Real> values;  // (k+1)^2 log(k+1)
  values.reserve(static_cast<std::size_t>(terms) + 1);
  for (long k = 0; k <= terms; ++k) {
    const Real kp1 = Real(k + 1);
    values.push_back(kp1 * kp1 * log(kp1));
  }
  Real s = Real::ratio(1, 8);
  for (long n = 0; n <= terms; ++n) {
    Real inner = 0;
    mpz_class binom = 1;
    for (long k = 0; k <= n; ++k) {
      const Real term = Real::from_mpz(binom.get_mpz_t()) * values[static_cast<std::size_t>(k)];
      if (k % 2 == 0) inner += term; else inner -= term;
      binom = binom * (n - k) / (k + 1);
    }
    s -= inner / (2 * (n + 1));
    sums.push_back(s.rounded(ctx.bits()));
  }
  return sums;
}

/// log A from the Hasse double series truncated after N outer terms. The
/// error proxy is the larger of the last outer term and |S_N - S_{N/2}|.
inline RouteEstimate route_hasse(long terms, const ComputeContext& ctx) {
  if (terms < 1) throw domain_error("route_hasse: N must be >= 1");
  detail::stopwatch clock;
  const std::vector<Real> sums = hasse_partial_sums(terms, ctx);
  auto scope = ctx.scope();
  RouteEstimate r;
  r.route_id = RouteId::hasse;
  r.value = sums.back();
  const Real last_term = abs(sums[sums.size() - 1] - sums[sums.size() - 2]);
  r.error_estimate = max(last_term, abs(sums.back() - sums[static_cast<std::size_t>(terms / 2)]));
  r.parameters = {{"N", std::to_string(terms)}};
  r.evaluations = static_cast<std::size_t>((terms + 1) * (terms + 2) / 2);
  r.elapsed = clock.elapsed();
  return r;
}

/// Smallest N <= max_terms whose Hasse partial sum agrees with `reference`
/// to `digits` significant digits, run at the precision the largest N needs.
inline std::optional<long> hasse_first_agreement(long max_terms, double digits, const Real& reference,
                                                 const ComputeContext& ctx) {
  const ComputeContext work(std::max(ctx.precision_digits(), hasse_required_digits(max_terms)), ctx.quad_max_level());
  const std::vector<Real> sums = hasse_partial_sums(max_terms, work);
  auto scope = work.scope();
  for (long n = 1; n <= max_terms; ++n)
    if (agreeing_digits(sums[static_cast<std::size_t>(n)], reference) >= digits) return n;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Dispatch

struct RouteParams {
  long limit_n = 64;
  int richardson_order = 3;
  long fourier_terms = 100;
  bool fourier_accelerate = true;
  long hasse_terms = 60;
  Res2Measure res2_measure = Res2Measure::dt_over_t;
};

inline RouteEstimate run_route(RouteId id, const RouteParams& p, const ComputeContext& ctx) {
  switch (id) {
    case RouteId::limit: return route_limit(p.limit_n, p.richardson_order, ctx);
    case RouteId::pain1: return route_pain1(ctx);
    case RouteId::pain2: return route_pain2(ctx);
    case RouteId::feaux: return route_feaux(ctx);
    case RouteId::kummer: return route_kummer(ctx, p.res2_measure);
    case RouteId::fourier_series: return route_fourier_series(p.fourier_terms, p.fourier_accelerate, ctx);
    case RouteId::hasse: return route_hasse(p.hasse_terms, ctx);
  }
  throw std::invalid_argument("unknown route");
}

struct Consensus {
  Real value;
  RouteEstimate feaux;
  RouteEstimate kummer;
};

/// The value both main integral routes give when they agree to 10^-(P-10);
/// throws when they do not.
inline Consensus consensus_log_a(const ComputeContext& ctx) {
  Consensus c{Real(), route_feaux(ctx), route_kummer(ctx)};
  auto scope = ctx.scope();
  if (!(relative_difference(c.feaux.value, c.kummer.value) < ctx.target_tolerance()))
    throw std::runtime_error("feaux and kummer routes disagree: no consensus value for log A");
  c.value = c.feaux.value;
  return c;
}

// ---------------------------------------------------------------------------
// Identity residuals

struct ResidualOptions {
  /// Swap a rational coefficient in each identity (7/24 -> 7/25, 5/36 -> 5/37,
  /// 1/2 -> 1/3) so the check must fail.
  bool corrupt_constant = false;
};

/// int_0^{1/2} log Gamma(x+1) dx - [-1/2 - (7/24) log 2 + (log pi)/4 + (3/2) log A].
inline IdentityResidual glaisher_identity_residual(const ComputeContext& ctx, const Real& log_a,
                                                   ResidualOptions options = {}) {
  auto scope = ctx.scope();
  const auto& c = ctx.constants();
  const Approximation left = integral_of_log_gamma(Real::ratio(1, 2), ctx, Real(1));
  const Real coefficient = options.corrupt_constant ? Real::ratio(7, 25) : Real::ratio(7, 24);
  const Real right = Real::ratio(-1, 2) - coefficient * c.log2 + c.log_pi / 4 + 3 * log_a / 2;
  return IdentityResidual{IdentityId::glaisher_half, left.value - right, ctx.target_tolerance()};
}

inline IdentityResidual glaisher_identity_residual(const ComputeContext& ctx, ResidualOptions options = {}) {
  return glaisher_identity_residual(ctx, route_feaux(ctx).value, options);
}

/// (2/3) int_0^{1/2} log Gamma(x) dx - (5/36) log 2 - (log pi)/6 - log A.
inline IdentityResidual gla2_residual(const ComputeContext& ctx, const Real& log_a, ResidualOptions options = {}) {
  auto scope = ctx.scope();
  const auto& c = ctx.constants();
  const Approximation integral = integral_of_log_gamma(Real::ratio(1, 2), ctx);
  const Real coefficient = options.corrupt_constant ? Real::ratio(5, 37) : Real::ratio(5, 36);
  const Real rhs = 2 * integral.value / 3 - coefficient * c.log2 - c.log_pi / 6;
  return IdentityResidual{IdentityId::gla2, rhs - log_a, ctx.target_tolerance()};
}

inline IdentityResidual gla2_residual(const ComputeContext& ctx, ResidualOptions options = {}) {
  return gla2_residual(ctx, route_feaux(ctx).value, options);
}

/// int_0^{1/2} log sin(pi x) dx + (log 2)/2.
inline IdentityResidual log_sin_check(const ComputeContext& ctx, ResidualOptions options = {}) {
  auto scope = ctx.scope();
  Integrand f;
  f.label = "log_sin";
  f.eval = [](const Real& x) { return log(sin_pi(x)); };
  const Approximation integral = detail::from_quadrature(
      integrate_finite(f, Real(0), Real::ratio(1, 2), ctx.target_tolerance(), ctx), f.label);
  const Real coefficient = options.corrupt_constant ? Real::ratio(1, 3) : Real::ratio(1, 2);
  return IdentityResidual{IdentityId::log_sin, integral.value + coefficient * ctx.constants().log2,
                          ctx.target_tolerance()};
}

/// Kummer-route value (measure dt/t) minus the reference log A.
inline IdentityResidual res2_measure_check(const ComputeContext& ctx, const Real& log_a) {
  auto scope = ctx.scope();
  const RouteEstimate k = route_kummer(ctx, Res2Measure::dt_over_t);
  return IdentityResidual{IdentityId::res2_measure_check, k.value - log_a, ctx.target_tolerance()};
}

}  // namespace glaisher

#endif  // GLAISHER_ROUTES_HPP
