#ifndef GLAISHER_QUADRATURE_HPP
#define GLAISHER_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "real.hpp"

namespace glaisher {

enum class DecayClass { exponential, algebraic };

/// An integrand on (0, inf) or on a finite interval. `near_zero`, when set,
/// replaces `eval` for arguments below `near_zero_threshold` (distance from
/// the left endpoint on finite intervals).
struct Integrand {
  std::function<Real(const Real&)> eval;
  std::function<Real(const Real&)> near_zero;
  Real near_zero_threshold = ldexp(Real(1), -8);
  DecayClass decay = DecayClass::exponential;
  std::string label;

  Real operator()(const Real& t) const {
    if (near_zero && t < near_zero_threshold) return near_zero(t);
    return eval(t);
  }
};

/// Number of Taylor coefficients a near_zero expansion needs so that its
/// truncation error at t <= 2^-threshold_log2 stays below the working
/// precision, assuming a radius of convergence of at least 1.
inline std::size_t near_zero_series_length(const ComputeContext& ctx, int threshold_log2 = 8) {
  const double bits = static_cast<double>(ctx.bits());
  return static_cast<std::size_t>(std::ceil(bits / threshold_log2)) + 6;
}

struct QuadratureResult {
  Real value;
  Real error_estimate;
  std::size_t evaluations = 0;
  int levels_used = 0;
  bool converged = false;
};

/// Raised when the integrand produces NaN or infinity.
class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& label, const std::string& what)
      : std::runtime_error(label + ": " + what), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

namespace detail {

// Abscissae are u = k h on [-u_left, u_right], h = 2^-level. `node(u)` returns
// the transformed integrand w(u) f(x(u)) or nullopt where x(u) collapses onto
// an endpoint.
template <class Node>
QuadratureResult de_trapezoid(const Node& node, double u_left, double u_right, const Real& tol,
                              const ComputeContext& ctx, int max_level) {
  const Real cutoff = Real::pow10(-(ctx.precision_digits() + 10));
  QuadratureResult result;
  Real scale = 0;
  Real abs_sum = 0;

  auto small = [&](const Real& term) { return abs(term) <= cutoff * scale; };

  // Level 0 fixes the truncation range.
  Real sum = 0;
  long k_right = 0;
  long k_left = 0;
  Real tail = 0;
  {
    const auto centre = node(Real(0));
    ++result.evaluations;
    Real c = centre ? *centre : Real(0);
    scale = abs(c);
    sum = c;
    abs_sum = abs(c);
    for (int side : {1, -1}) {
      const double cap = side > 0 ? u_right : u_left;
      int quiet = 0;
      long k_last = 0;
      Real last = c;
      for (long k = 1; static_cast<double>(k) <= cap; ++k) {
        const auto v = node(Real(side * k));
        ++result.evaluations;
        if (!v) break;
        k_last = k;
        scale = max(scale, abs(*v));
        sum += *v;
        abs_sum += abs(*v);
        last = *v;
        quiet = small(*v) ? quiet + 1 : 0;
        if (quiet >= 2) break;
      }
      if (side > 0) k_right = k_last; else k_left = k_last;
      tail += abs(last);
    }
  }

  const Real eps = ldexp(Real(1), -static_cast<long>(ctx.bits()));
  Real previous = sum;
  result.value = sum;
  result.error_estimate = tail + abs(sum);
  for (int level = 1; level <= max_level; ++level) {
    const long denom = 1L << level;
    const Real h = ldexp(Real(1), -level);
    // New odd-index nodes, summed in index order.
    std::vector<Real> terms;
    terms.reserve(static_cast<std::size_t>((k_left + k_right) * (denom / 2) + 1));
    for (long m = -k_left * denom + 1; m < k_right * denom; m += 2) {
      const auto v = node(ldexp(Real(m), -level));
      ++result.evaluations;
      terms.push_back(v ? *v : Real(0));
    }
    for (const auto& t : terms) {
      sum += t;
      abs_sum += abs(t);
    }
    const Real current = sum * h;
    const Real previous_value = previous;
    previous = current;
    result.value = current;
    result.levels_used = level;
    result.error_estimate = abs(current - previous_value) + tail + eps * abs_sum * h * 10;
    if (level >= 3 && result.error_estimate <= tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

// Largest |u| worth visiting when t = exp(pi/2 sinh u) must span e^{+-ln_range}.
// The extra unit keeps the level-0 integer grid from stopping short of it.
inline double u_cap_for_log_range(double ln_range) { return std::asinh(ln_range * 2.0 / 3.141592653589793) + 1.0; }

inline void check_finite(const Real& v, const Integrand& f, const Real& x) {
  if (!v.is_finite())
    throw quadrature_error(f.label, std::string(v.is_nan() ? "NaN" : "overflow") + " at abscissa " + to_decimal(x, 20));
}

}  // namespace detail

/// Integral of f over (0, inf) by the exp-sinh transform t = exp(pi/2 sinh u)
/// with step halving. The error estimate is the last level difference plus the
/// truncation tail plus a roundoff floor.
inline QuadratureResult integrate_zero_to_inf(const Integrand& f, const Real& tol, const ComputeContext& ctx) {
  auto scope = ctx.scope();
  const Real half_pi = ctx.constants().pi / 2;
  const double ln10 = 2.302585092994046;
  const double digits = static_cast<double>(ctx.precision_digits() + 10);
  const double u_left = detail::u_cap_for_log_range(2.0 * digits * ln10);
  const double u_right = f.decay == DecayClass::algebraic
                             ? detail::u_cap_for_log_range(2.0 * digits * ln10)
                             : detail::u_cap_for_log_range(std::log(100.0 * digits * ln10));
  auto node = [&](const Real& u) -> std::optional<Real> {
    const Real s = half_pi * sinh(u);
    const Real t = exp(s);
    if (t.is_zero()) return std::nullopt;
    const Real v = f(t);
    detail::check_finite(v, f, t);
    if (v.is_zero()) return Real(0);
    return half_pi * cosh(u) * t * v;
  };
  return detail::de_trapezoid(node, u_left, u_right, tol, ctx, ctx.quad_max_level());
}

/// Integral of f over [a, b] by the tanh-sinh transform; integrable endpoint
/// singularities are allowed. Nodes near an endpoint are formed from their
/// distance to it so no digits are lost to 1 - tanh.
inline QuadratureResult integrate_finite(const Integrand& f, const Real& a, const Real& b, const Real& tol,
                                         const ComputeContext& ctx) {
  auto scope = ctx.scope();
  if (!(a < b)) throw std::invalid_argument(f.label + ": integrate_finite needs a < b");
  const Real half_pi = ctx.constants().pi / 2;
  const Real r = (b - a) / 2;
  const double digits = static_cast<double>(ctx.precision_digits() + 10);
  const double u_cap = detail::u_cap_for_log_range(2.0 * digits * 2.302585092994046);
  auto node = [&](const Real& u) -> std::optional<Real> {
    const Real s = half_pi * sinh(u);
    const Real e = exp(-2 * abs(s));
    const Real one_plus_e = 1 + e;
    const Real delta = 2 * e / one_plus_e;  // 1 - tanh|s|
    const Real offset = r * delta;
    if (offset.is_zero()) return std::nullopt;
    const Real x = u.sign() < 0 ? a + offset : b - offset;
    const Real weight = r * half_pi * cosh(u) * 4 * e / (one_plus_e * one_plus_e);
    Real v;
    if (f.near_zero && u.sign() < 0 && offset < f.near_zero_threshold)
      v = f.near_zero(offset);
    else
      v = f.eval(x);
    // A node rounded onto a singular endpoint ends the sweep on that side.
    if (!v.is_finite() && (x == a || x == b)) return std::nullopt;
    detail::check_finite(v, f, x);
    if (v.is_zero()) return Real(0);
    return weight * v;
  };
  return detail::de_trapezoid(node, u_cap, u_cap, tol, ctx, ctx.quad_max_level());
}

/// A test integral with an independently known value; no interval means
/// (0, inf).
struct KnownIntegral {
  Integrand integrand;
  Real exact;
  std::optional<std::pair<Real, Real>> interval;
};

struct ErrorModelEntry {
  std::string label;
  Real value;
  Real exact;
  Real true_error;
  Real error_estimate;
  /// 10 * error_estimate / true_error; at least 1 when the estimate is honest.
  double margin = 0;
  bool ok = false;
};

struct ErrorModelReport {
  std::vector<ErrorModelEntry> entries;
  bool all_ok() const {
    for (const auto& e : entries)
      if (!e.ok) return false;
    return true;
  }
};

/// Checks |value - exact| <= 10 * error_estimate over a corpus of integrals
/// with known values. Violations are reported in the entries.
inline ErrorModelReport error_model_check(const std::vector<KnownIntegral>& known, const ComputeContext& ctx) {
  auto scope = ctx.scope();
  ErrorModelReport report;
  for (const auto& k : known) {
    const QuadratureResult q = k.interval
                                   ? integrate_finite(k.integrand, k.interval->first, k.interval->second,
                                                      ctx.target_tolerance(), ctx)
                                   : integrate_zero_to_inf(k.integrand, ctx.target_tolerance(), ctx);
    ErrorModelEntry e;
    e.label = k.integrand.label;
    e.value = q.value;
    e.exact = k.exact;
    e.true_error = abs(q.value - k.exact);
    e.error_estimate = q.error_estimate;
    e.ok = e.true_error <= 10 * e.error_estimate;
    e.margin = e.true_error.is_zero() ? std::numeric_limits<double>::infinity()
                                      : (10 * e.error_estimate / e.true_error).to_double();
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace glaisher

#endif  // GLAISHER_QUADRATURE_HPP
