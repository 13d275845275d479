#ifndef GLAISHER_LOGGAMMA_HPP
#define GLAISHER_LOGGAMMA_HPP

#include <cmath>
#include <cstddef>
#include <memory>
#include <string>

#include "bernoulli.hpp"
#include "context.hpp"
#include "power_series.hpp"
#include "quadrature.hpp"
#include "real.hpp"

namespace glaisher {

/// A value with the absolute error bound it was computed to.
struct Approximation {
  Real value;
  Real error_estimate;
  std::size_t evaluations = 0;
  bool converged = true;
};

namespace detail {

inline Approximation from_quadrature(const QuadratureResult& q, const std::string& label) {
  if (!q.converged)
    throw quadrature_error(label, "no convergence after " + std::to_string(q.levels_used) +
                                      " levels (estimate " + to_decimal(q.error_estimate, 6) + ")");
  return Approximation{q.value, q.error_estimate, q.evaluations, true};
}

inline Integrand make_series_integrand(std::string label, DecayClass decay,
                                       std::function<Real(const Real&)> direct, PowerSeries series) {
  Integrand f;
  f.label = std::move(label);
  f.decay = decay;
  f.eval = std::move(direct);
  auto s = std::make_shared<const PowerSeries>(std::move(series));
  f.near_zero = [s](const Real& t) { return (*s)(t); };
  return f;
}

}  // namespace detail

/// log Gamma(x) for x > 0 by Stirling's series after shifting the argument up
/// to 10 P / 7 with Gamma(x + 1) = x Gamma(x).
inline Real log_gamma_ref(const Real& x, const ComputeContext& ctx) {
  if (!(x > 0)) throw domain_error("log_gamma_ref: argument must be positive, got " + to_decimal(x, 20));
  auto scope = ctx.scope();
  const Real& log_2pi = ctx.constants().log_2pi;
  const long shift_to = static_cast<long>(std::ceil(10.0 * static_cast<double>(ctx.precision_digits()) / 7.0));
  Real y = x.rounded(ctx.bits());
  Real product = 1;
  bool shifted = false;
  while (y < shift_to) {
    product *= y;
    y += 1L;
    shifted = true;
  }
  Real result = (y - Real::ratio(1, 2)) * log(y) - y + log_2pi / 2;
  const Real floor = Real::pow10(-(ctx.precision_digits() + kGuardDigits)) * max(Real(1), abs(result));
  const Real inv_y2 = 1 / (y * y);
  Real power = 1 / y;  // y^{-(2k-1)}
  Real previous_magnitude;
  for (std::size_t k = 1;; ++k) {
    const long two_k = static_cast<long>(2 * k);
    const Real term = bernoulli_b2k_real(k) * power / (two_k * (two_k - 1));
    const Real magnitude = abs(term);
    // Asymptotic series: stop once terms are negligible or start to grow.
    if (k > 1 && magnitude > previous_magnitude) break;
    result += term;
    if (magnitude < floor) break;
    previous_magnitude = magnitude;
    power *= inv_y2;
  }
  if (shifted) result -= log(product);
  return result;
}

/// Integrand of the Feaux representation
///   log Gamma(x+1) = int_0^inf [x e^-t + ((1+t)^{-x-1} - (1+t)^{-1}) / log(1+t)] dt/t.
inline Integrand feaux_integrand(const Real& x, const ComputeContext& ctx) {
  auto scope = ctx.scope();
  const Real xv = x.rounded(ctx.bits());
  auto direct = [xv](const Real& t) {
    const Real l = log1p(t);
    // (1+t)^{-x-1} - (1+t)^{-1} = expm1(-x l) / (1+t)
    return (xv * exp(-t) + expm1(-xv * l) / ((1 + t) * l)) / t;
  };
  const std::size_t n = near_zero_series_length(ctx) + 2;
  const PowerSeries l = log1p_series(n);
  const PowerSeries one_plus_t = PowerSeries::constant(Real(1), n) + PowerSeries::variable(n);
  const PowerSeries ell = l.divide_by_t(1);
  const PowerSeries e = (exp(l * (-xv)) - Real(1)).divide_by_t(1);
  const PowerSeries bracket = PowerSeries::exp_linear(Real(-1), n) * xv + (e / ell) * one_plus_t.reciprocal();
  return detail::make_series_integrand("feaux", DecayClass::algebraic, direct, bracket.divide_by_t(1));
}

/// log Gamma(x + 1) from the Feaux integral.
inline Approximation feaux_log_gamma1p(const Real& x, const ComputeContext& ctx) {
  if (!(x > -1)) throw domain_error("feaux_log_gamma1p: requires x > -1");
  auto scope = ctx.scope();
  return detail::from_quadrature(integrate_zero_to_inf(feaux_integrand(x, ctx), ctx.target_tolerance(), ctx),
                                 "feaux");
}

/// Integrand of the Kummer representation,
///   [sinh((1/2 - x) t) / sinh(t/2) - (1 - 2x) e^-t] / t.
inline Integrand kummer_integrand(const Real& x, const ComputeContext& ctx) {
  auto scope = ctx.scope();
  const Real xv = x.rounded(ctx.bits());
  const Real a = Real::ratio(1, 2) - xv;
  auto direct = [xv, a](const Real& t) {
    // sinh(a t) / sinh(t/2) = e^{-x t} expm1(-2 a t) / expm1(-t), stable for large t.
    const Real ratio = exp(-xv * t) * expm1(-2 * a * t) / expm1(-t);
    return (ratio - (1 - 2 * xv) * exp(-t)) / t;
  };
  const std::size_t n = near_zero_series_length(ctx) + 1;
  const PowerSeries ratio = sinh_over_t_series(a, n) / sinh_over_t_series(Real::ratio(1, 2), n);
  const PowerSeries bracket = ratio - PowerSeries::exp_linear(Real(-1), n) * (1 - 2 * xv);
  return detail::make_series_integrand("kummer", DecayClass::exponential, direct, bracket.divide_by_t(1));
}

/// log Gamma(x) for 0 < x < 1 from Kummer's integral:
///   (log pi)/2 - (1/2) log sin(pi x) + (1/2) int_0^inf [...] dt/t.
inline Approximation kummer_log_gamma(const Real& x, const ComputeContext& ctx) {
  if (!(x > 0 && x < 1)) throw domain_error("kummer_log_gamma: requires 0 < x < 1");
  auto scope = ctx.scope();
  const auto& c = ctx.constants();
  Approximation integral =
      detail::from_quadrature(integrate_zero_to_inf(kummer_integrand(x, ctx), ctx.target_tolerance(), ctx), "kummer");
  Approximation out;
  out.value = c.log_pi / 2 - log(sin_pi(x.rounded(ctx.bits()))) / 2 + integral.value / 2;
  out.error_estimate = integral.error_estimate / 2;
  out.evaluations = integral.evaluations;
  return out;
}

struct FourierCoefficient {
  long n = 0;
  Real integral_value;
  Real closed_form_value;
  Real integral_error_estimate;
};

/// a_n = (gamma + log(2 pi) + log n) / (2 n pi).
inline Real fourier_a_n_closed_form(long n, const ComputeContext& ctx) {
  auto scope = ctx.scope();
  const auto& c = ctx.constants();
  return (c.euler_gamma + c.log_2pi + log(Real(n))) / (2 * n * c.pi);
}

inline Integrand fourier_a_n_integrand(long n, const ComputeContext& ctx) {
  auto scope = ctx.scope();
  const Real c = 2 * n * ctx.constants().pi;
  auto direct = [c](const Real& t) { return (c / (t * t + c * c) - exp(-t) / c) / t; };
  const std::size_t len = near_zero_series_length(ctx) + 1;
  // c/(t^2 + c^2) = (1/c) sum (-1)^j (t/c)^{2j}
  PowerSeries geometric(len);
  Real q = 1;
  const Real inv_c2 = -1 / (c * c);
  for (std::size_t k = 0; k < len; k += 2) {
    geometric[k] = q;
    q *= inv_c2;
  }
  const PowerSeries bracket = (geometric - PowerSeries::exp_linear(Real(-1), len)) * (1 / c);
  return detail::make_series_integrand("a_n", DecayClass::algebraic, direct, bracket.divide_by_t(1));
}

/// Both forms of the Fourier coefficient a_n of log Gamma.
inline FourierCoefficient fourier_a_n(long n, const ComputeContext& ctx) {
  if (n < 1) throw domain_error("fourier_a_n: n must be >= 1");
  auto scope = ctx.scope();
  const Approximation integral = detail::from_quadrature(
      integrate_zero_to_inf(fourier_a_n_integrand(n, ctx), ctx.target_tolerance(), ctx), "a_n");
  return FourierCoefficient{n, integral.value, fourier_a_n_closed_form(n, ctx), integral.error_estimate};
}

/// Partial Fourier sum
///   (log pi)/2 - (1/2) log sin(pi x) + 2 sum_{n=1}^{N} a_n sin(2 pi n x).
inline Real kummer_fourier_log_gamma(const Real& x, long terms, const ComputeContext& ctx) {
  if (!(x > 0 && x < 1)) throw domain_error("kummer_fourier_log_gamma: requires 0 < x < 1");
  if (terms < 1) throw domain_error("kummer_fourier_log_gamma: requires N >= 1");
  auto scope = ctx.scope();
  const auto& c = ctx.constants();
  const Real xv = x.rounded(ctx.bits());
  const Real base = c.euler_gamma + c.log_2pi;
  const Real two_pi_x = 2 * c.pi * xv;
  Real sum = 0;
  for (long n = 1; n <= terms; ++n) {
    const Real a_n = (base + log(Real(n))) / (2 * n * c.pi);
    sum += a_n * sin(two_pi_x * n);
  }
  return c.log_pi / 2 - log(sin_pi(xv)) / 2 + 2 * sum;
}

/// Dirichlet's integrand (1/(1+t) - e^-t)/t for Euler's constant.
inline Integrand dirichlet_integrand(const ComputeContext& ctx) {
  auto scope = ctx.scope();
  auto direct = [](const Real& t) { return (1 / (1 + t) - exp(-t)) / t; };
  const std::size_t n = near_zero_series_length(ctx) + 1;
  const PowerSeries one_plus_t = PowerSeries::constant(Real(1), n) + PowerSeries::variable(n);
  const PowerSeries bracket = one_plus_t.reciprocal() - PowerSeries::exp_linear(Real(-1), n);
  return detail::make_series_integrand("dirichlet_gamma", DecayClass::algebraic, direct, bracket.divide_by_t(1));
}

/// Euler's constant from Dirichlet's integral; a cross-check on euler_gamma_ref.
inline Approximation dirichlet_gamma(const ComputeContext& ctx) {
  auto scope = ctx.scope();
  return detail::from_quadrature(integrate_zero_to_inf(dirichlet_integrand(ctx), ctx.target_tolerance(), ctx),
                                 "dirichlet_gamma");
}

/// int_0^z log Gamma(x) dx over the Stirling oracle.
inline Approximation integral_of_log_gamma(const Real& z, const ComputeContext& ctx, const Real& shift = Real(0)) {
  auto scope = ctx.scope();
  Integrand f;
  f.label = "log_gamma_integral";
  const Real s = shift.rounded(ctx.bits());
  f.eval = [&ctx, s](const Real& x) { return log_gamma_ref(x + s, ctx); };
  return detail::from_quadrature(integrate_finite(f, Real(0), z.rounded(ctx.bits()), ctx.target_tolerance(), ctx),
                                 f.label);
}

/// log G(1 + z) for 0 < z <= 1 from the Alexejewsky-Barnes formula
///   int_0^z log Gamma = z(1-z)/2 + (z/2) log 2 pi + z log Gamma(z) - log G(1+z).
inline Approximation log_barnes_g(const Real& z, const ComputeContext& ctx) {
  if (!(z > 0 && z <= 1)) throw domain_error("log_barnes_g: requires 0 < z <= 1");
  auto scope = ctx.scope();
  const Real zv = z.rounded(ctx.bits());
  const Approximation integral = integral_of_log_gamma(zv, ctx);
  Approximation out;
  out.value = zv * (1 - zv) / 2 + zv / 2 * ctx.constants().log_2pi + zv * log_gamma_ref(zv, ctx) - integral.value;
  out.error_estimate = integral.error_estimate;
  out.evaluations = integral.evaluations;
  return out;
}

}  // namespace glaisher

#endif  // GLAISHER_LOGGAMMA_HPP
