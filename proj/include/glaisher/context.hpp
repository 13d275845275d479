#ifndef GLAISHER_CONTEXT_HPP
#define GLAISHER_CONTEXT_HPP

#include <cmath>
#include <atomic>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "real.hpp"

namespace glaisher {

class precision_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ConstantsSet {
  Real pi;
  Real log2;
  Real log_pi;
  Real log_2pi;
  Real euler_gamma;
};

class ComputeContext;
Real euler_gamma_ref(const ComputeContext& ctx);

/// Working precision, tolerance and quadrature limits shared by every
/// computation. Copies share one write-once constants cache.
class ComputeContext {
 public:
  static constexpr long kMinDigits = 20;

  explicit ComputeContext(long precision_digits = 50, int quad_max_level = 12)
      : digits_(precision_digits), quad_max_level_(quad_max_level), cache_(std::make_shared<Cache>()) {
    if (precision_digits < kMinDigits)
      throw precision_error("precision too low: " + std::to_string(precision_digits) + " digits (minimum " +
                            std::to_string(kMinDigits) + ")");
    if (quad_max_level < 1) throw std::invalid_argument("quad_max_level must be positive");
    bits_ = digits_to_bits(digits_ + kGuardDigits);
    precision_scope scope(bits_);
    tolerance_ = Real::pow10(-(digits_ - 10));
  }

  long precision_digits() const { return digits_; }
  mpfr_prec_t bits() const { return bits_; }
  int quad_max_level() const { return quad_max_level_; }
  const Real& target_tolerance() const { return tolerance_; }

  /// Tolerance override; must satisfy 10^-P <= tol.
  void set_target_tolerance(const Real& tol) {
    precision_scope scope(bits_);
    if (!(tol > 0) || tol < Real::pow10(-digits_))
      throw std::invalid_argument("target tolerance must lie in [10^-P, inf)");
    tolerance_ = tol.rounded(bits_);
  }

  precision_scope scope() const { return precision_scope(bits_); }

  /// Lazily computed constants at this context's precision.
  const ConstantsSet& constants() const {
    std::call_once(cache_->once, [this] {
      precision_scope s(bits_);
      ConstantsSet c;
      c.pi = Real::pi();
      c.log2 = Real::log2();
      c.log_pi = log(c.pi);
      c.log_2pi = c.log2 + c.log_pi;
      c.euler_gamma = euler_gamma_ref(*this);
      cache_->values = std::make_unique<ConstantsSet>(std::move(c));
      cache_->ready.store(true, std::memory_order_release);
    });
    return *cache_->values;
  }

  bool constants_cached() const { return cache_->ready.load(std::memory_order_acquire); }

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<ConstantsSet> values;
    std::atomic<bool> ready{false};
  };

  long digits_;
  int quad_max_level_;
  mpfr_prec_t bits_ = 0;
  Real tolerance_;
  std::shared_ptr<Cache> cache_;
};

inline ComputeContext make_context(long precision_digits) { return ComputeContext(precision_digits); }

/// Euler's constant by the Brent-McMillan Bessel-function scheme:
///   gamma = U/V,  U = sum A_k, V = sum B_k,  A_0 = -log m, B_0 = 1,
///   B_k = B_{k-1} m^2/k^2, A_k = (A_{k-1} m^2/k + B_k)/k,
/// with truncation error about pi e^{-4m}. Independent of any quadrature.
inline Real euler_gamma_ref(const ComputeContext& ctx) {
  const long digits = ctx.precision_digits() + kGuardDigits;
  const long m = static_cast<long>(std::ceil(digits * 2.302585092994046 / 4.0)) + 2;
  // U mixes signs for k < m; a few digits absorb it.
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  Real result;
  {
    precision_scope scope(bits);
    const long terms = static_cast<long>(std::ceil(3.5911 * static_cast<double>(m))) + 1;
    const Real m2 = Real(m) * Real(m);
    Real a = -log(Real(m));
    Real b = 1;
    Real u = a;
    Real v = b;
    for (long k = 1; k <= terms; ++k) {
      b *= m2;
      b /= k * k;
      a *= m2;
      a /= k;
      a += b;
      a /= k;
      u += a;
      v += b;
    }
    result = u / v;
  }
  return result.rounded(ctx.bits());
}

}  // namespace glaisher

#endif  // GLAISHER_CONTEXT_HPP
