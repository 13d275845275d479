#ifndef GLAISHER_POWER_SERIES_HPP
#define GLAISHER_POWER_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "real.hpp"

namespace glaisher {

/// Truncated Taylor series c_0 + c_1 t + ... + c_{n-1} t^{n-1} with Real
/// coefficients. Used to build the small-t expansions of integrands whose
/// direct evaluation cancels near t = 0. Binary operations truncate to the
/// shorter operand.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::size_t length) : c_(length) {}
  explicit PowerSeries(std::vector<Real> coefficients) : c_(std::move(coefficients)) {}

  static PowerSeries constant(const Real& value, std::size_t length) {
    PowerSeries s(length);
    if (length > 0) s.c_[0] = value;
    return s;
  }

  /// The series of t.
  static PowerSeries variable(std::size_t length) {
    PowerSeries s(length);
    if (length > 1) s.c_[1] = 1;
    return s;
  }

  /// exp(a t).
  static PowerSeries exp_linear(const Real& a, std::size_t length) {
    PowerSeries s(length);
    Real term = 1;
    for (std::size_t k = 0; k < length; ++k) {
      s.c_[k] = term;
      term = term * a / static_cast<long>(k + 1);
    }
    return s;
  }

  std::size_t size() const { return c_.size(); }
  const Real& operator[](std::size_t k) const { return c_[k]; }
  Real& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Real>& coefficients() const { return c_; }

  /// Horner evaluation at t.
  Real operator()(const Real& t) const {
    if (c_.empty()) return Real(0);
    Real acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
      acc *= t;
      acc += c_[k];
    }
    return acc;
  }

  /// (series - c_0 - ... - c_{k-1} t^{k-1}) / t^k. Callers use this where the
  /// dropped coefficients vanish analytically.
  PowerSeries divide_by_t(std::size_t k) const {
    if (k > c_.size()) throw std::length_error("divide_by_t beyond series length");
    return PowerSeries(std::vector<Real>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  PowerSeries truncated(std::size_t length) const {
    std::vector<Real> v(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(length, c_.size())));
    return PowerSeries(std::move(v));
  }

  /// f(a t).
  PowerSeries scaled_argument(const Real& a) const {
    PowerSeries s(*this);
    Real p = 1;
    for (auto& c : s.c_) {
      c *= p;
      p *= a;
    }
    return s;
  }

  PowerSeries reciprocal() const {
    if (c_.empty() || c_[0].is_zero()) throw std::domain_error("reciprocal of series with zero constant term");
    const std::size_t n = c_.size();
    PowerSeries r(n);
    r.c_[0] = 1 / c_[0];
    for (std::size_t k = 1; k < n; ++k) {
      Real acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc * r.c_[0];
    }
    return r;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    truncate_to(o.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    truncate_to(o.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  PowerSeries& operator*=(const Real& a) {
    for (auto& c : c_) c *= a;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Real& b) { return a *= b; }
  friend PowerSeries operator*(const Real& b, PowerSeries a) { return a *= b; }
  friend PowerSeries operator-(PowerSeries a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend PowerSeries operator+(PowerSeries a, const Real& b) {
    if (a.size() > 0) a.c_[0] += b;
    return a;
  }
  friend PowerSeries operator-(PowerSeries a, const Real& b) {
    if (a.size() > 0) a.c_[0] -= b;
    return a;
  }
  friend PowerSeries operator-(const Real& b, const PowerSeries& a) { return -a + b; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.size(), b.size());
    PowerSeries r(n);
    for (std::size_t k = 0; k < n; ++k) {
      Real acc = 0;
      for (std::size_t j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
      r.c_[k] = std::move(acc);
    }
    return r;
  }

  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.reciprocal(); }

  /// exp(s) via E' = s' E.
  friend PowerSeries exp(const PowerSeries& s) {
    const std::size_t n = s.size();
    PowerSeries e(n);
    if (n == 0) return e;
    e.c_[0] = exp(s.c_[0]);
    for (std::size_t k = 1; k < n; ++k) {
      Real acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc += static_cast<long>(j) * s.c_[j] * e.c_[k - j];
      e.c_[k] = acc / static_cast<long>(k);
    }
    return e;
  }

  /// log(s) via s L' = s'; requires c_0 > 0.
  friend PowerSeries log(const PowerSeries& s) {
    const std::size_t n = s.size();
    if (n == 0) return PowerSeries();
    if (!(s.c_[0] > 0)) throw std::domain_error("log of series with non-positive constant term");
    PowerSeries l(n);
    l.c_[0] = log(s.c_[0]);
    for (std::size_t k = 1; k < n; ++k) {
      Real acc = static_cast<long>(k) * s.c_[k];
      for (std::size_t j = 1; j < k; ++j) acc -= static_cast<long>(j) * l.c_[j] * s.c_[k - j];
      l.c_[k] = acc / (static_cast<long>(k) * s.c_[0]);
    }
    return l;
  }

  /// s^alpha for c_0 > 0.
  friend PowerSeries pow(const PowerSeries& s, const Real& alpha) { return exp(log(s) * alpha); }

 private:
  void truncate_to(std::size_t n) {
    if (n < c_.size()) c_.resize(n);
  }

  std::vector<Real> c_;
};

/// sinh(a t)/t as a series, from its odd Taylor coefficients.
inline PowerSeries sinh_over_t_series(const Real& a, std::size_t length) {
  PowerSeries s(length);
  // sinh(a t) = sum a^{2j+1} t^{2j+1} / (2j+1)!
  Real term = a;
  for (std::size_t k = 0; k < length; k += 2) {
    s[k] = term;
    term = term * a * a / static_cast<long>((k + 2) * (k + 3));
  }
  return s;
}

/// cosh(a t).
inline PowerSeries cosh_series(const Real& a, std::size_t length) {
  PowerSeries s(length);
  Real term = 1;
  for (std::size_t k = 0; k < length; k += 2) {
    s[k] = term;
    term = term * a * a / static_cast<long>((k + 1) * (k + 2));
  }
  return s;
}

/// log(1 + t).
inline PowerSeries log1p_series(std::size_t length) {
  PowerSeries s(length);
  for (std::size_t k = 1; k < length; ++k) s[k] = Real::ratio(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
  return s;
}

}  // namespace glaisher

#endif  // GLAISHER_POWER_SERIES_HPP
