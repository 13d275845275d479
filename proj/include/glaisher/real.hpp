#ifndef GLAISHER_REAL_HPP
#define GLAISHER_REAL_HPP

#include <mpfr.h>

#include <cmath>
#include <compare>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace glaisher {

/// Decimal string that could not be read back as a Real. `position()` is the
/// zero-based offset of the first offending character.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline constexpr long kGuardDigits = 10;

/// Bits needed to carry `digits` significant decimal digits.
inline mpfr_prec_t digits_to_bits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 1;
}

inline long bits_to_digits(mpfr_prec_t bits) {
  return static_cast<long>(std::floor(static_cast<double>(bits - 1) * 0.30102999566398120));
}

namespace detail {
inline mpfr_prec_t& thread_working_bits() {
  thread_local mpfr_prec_t bits = digits_to_bits(50 + kGuardDigits);
  return bits;
}
}  // namespace detail

inline mpfr_prec_t working_bits() { return detail::thread_working_bits(); }

/// Sets the precision used by newly created Reals on this thread for the
/// lifetime of the scope.
class precision_scope {
 public:
  explicit precision_scope(mpfr_prec_t bits) : saved_(detail::thread_working_bits()) {
    detail::thread_working_bits() = bits;
  }
  ~precision_scope() { detail::thread_working_bits() = saved_; }
  precision_scope(const precision_scope&) = delete;
  precision_scope& operator=(const precision_scope&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Arbitrary-precision real. Values carry their own precision; binary
/// operations round to the wider operand's precision. Rounding is always to
/// nearest, so results are reproducible bit for bit.
class Real {
 public:
  Real() { mpfr_init2(v_, working_bits()); mpfr_set_zero(v_, 1); }
  Real(int x) { mpfr_init2(v_, working_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long x) { mpfr_init2(v_, working_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long long x) { mpfr_init2(v_, working_bits()); mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }
  Real(unsigned long x) { mpfr_init2(v_, working_bits()); mpfr_set_ui(v_, x, MPFR_RNDN); }
  Real(unsigned x) : Real(static_cast<unsigned long>(x)) {}
  explicit Real(double x) { mpfr_init2(v_, working_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  /// p/q rounded once at the working precision.
  static Real ratio(long p, long q) {
    Real r(p);
    mpfr_div_si(r.v_, r.v_, q, MPFR_RNDN);
    return r;
  }

  static Real pow10(long e) {
    Real r(10);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  static Real pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  static Real log2() {
    Real r;
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
  }

  static Real from_mpz(mpz_srcptr z) {
    Real r;
    mpfr_set_z(r.v_, z, MPFR_RNDN);
    return r;
  }

  static Real from_mpq(mpq_srcptr q) {
    Real r;
    mpfr_set_q(r.v_, q, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  /// Copy rounded to `bits`.
  Real rounded(mpfr_prec_t bits) const {
    Real r = Real::with_bits(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Base-2 exponent e with 0.5 <= |x|/2^e < 1; meaningless for zero.
  long exponent2() const { return static_cast<long>(mpfr_get_exp(v_)); }

  /// Bitwise identity: same precision, same sign, same mantissa.
  bool identical(const Real& o) const {
    if (precision() != o.precision()) return false;
    if (is_nan() || o.is_nan()) return is_nan() && o.is_nan();
    return mpfr_equal_p(v_, o.v_) != 0 && mpfr_signbit(v_) == mpfr_signbit(o.v_);
  }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real operator-() const {
    Real r = with_bits(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { return assign_binary(o, mpfr_add); }
  Real& operator-=(const Real& o) { return assign_binary(o, mpfr_sub); }
  Real& operator*=(const Real& o) { return assign_binary(o, mpfr_mul); }
  Real& operator/=(const Real& o) { return assign_binary(o, mpfr_div); }
  Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator-(long a, const Real& b) {
    Real r = with_bits(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r = with_bits(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(Real a, int b) { return a += static_cast<long>(b); }
  friend Real operator-(Real a, int b) { return a -= static_cast<long>(b); }
  friend Real operator*(Real a, int b) { return a *= static_cast<long>(b); }
  friend Real operator/(Real a, int b) { return a /= static_cast<long>(b); }
  friend Real operator+(int a, Real b) { return b += static_cast<long>(a); }
  friend Real operator*(int a, Real b) { return b *= static_cast<long>(a); }
  friend Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
  friend Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0 && !a.is_nan(); }
  friend std::partial_ordering operator<=>(const Real& a, long b) {
    if (a.is_nan()) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
  friend std::partial_ordering operator<=>(const Real& a, int b) { return a <=> static_cast<long>(b); }

  // Elementary functions. Each returns a value at the argument's precision.
  friend Real abs(const Real& x) { return unary(x, mpfr_abs); }
  friend Real sqrt(const Real& x) { return unary_r(x, mpfr_sqrt); }
  friend Real exp(const Real& x) { return unary_r(x, mpfr_exp); }
  friend Real expm1(const Real& x) { return unary_r(x, mpfr_expm1); }
  friend Real log(const Real& x) { return unary_r(x, mpfr_log); }
  friend Real log1p(const Real& x) { return unary_r(x, mpfr_log1p); }
  friend Real sin(const Real& x) { return unary_r(x, mpfr_sin); }
  friend Real cos(const Real& x) { return unary_r(x, mpfr_cos); }
  friend Real sinh(const Real& x) { return unary_r(x, mpfr_sinh); }
  friend Real cosh(const Real& x) { return unary_r(x, mpfr_cosh); }
  friend Real tanh(const Real& x) { return unary_r(x, mpfr_tanh); }
  friend Real coth(const Real& x) { return unary_r(x, mpfr_coth); }
  /// sin(pi x).
  friend Real sin_pi(const Real& x) {
    Real r = with_bits(x.precision());
    mpfr_const_pi(r.v_, MPFR_RNDN);
    mpfr_mul(r.v_, r.v_, x.v_, MPFR_RNDN);
    mpfr_sin(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& x, const Real& y) { return binary(x, y, mpfr_pow); }
  friend Real pow(const Real& x, long n) {
    Real r = with_bits(x.precision());
    mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
    return r;
  }
  /// x * 2^e, exact.
  friend Real ldexp(const Real& x, long e) {
    Real r = with_bits(x.precision());
    mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
  friend Real min(const Real& a, const Real& b) { return b < a ? b : a; }

  friend std::ostream& operator<<(std::ostream& os, const Real& x);

 private:
  using binary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using unary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  static Real with_bits(mpfr_prec_t bits) {
    precision_scope scope(bits);
    return Real();
  }
  static Real binary(const Real& a, const Real& b, binary_fn fn) {
    Real r = with_bits(std::max(a.precision(), b.precision()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static Real unary_r(const Real& x, unary_fn fn) {
    Real r = with_bits(x.precision());
    fn(r.v_, x.v_, MPFR_RNDN);
    return r;
  }
  static Real unary(const Real& x, unary_fn fn) { return unary_r(x, fn); }
  Real& assign_binary(const Real& o, binary_fn fn) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    fn(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

/// `digits` significant decimal digits. Moderate magnitudes are printed in
/// positional form ("0.50000"), others as mantissa and exponent
/// ("1.2500e-12").
inline std::string to_decimal(const Real& x, long digits) {
  if (digits < 1) digits = 1;
  if (x.is_nan()) return "nan";
  if (!x.is_finite()) return x.sign() < 0 ? "-inf" : "inf";
  if (x.is_zero()) {
    std::string s = "0";
    if (digits > 1) s += "." + std::string(static_cast<std::size_t>(digits - 1), '0');
    return s;
  }
  mpfr_exp_t e10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &e10, 10, static_cast<std::size_t>(digits), x.get(), MPFR_RNDN), mpfr_free_str);
  std::string m(raw.get());
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  // value = 0.m * 10^e10
  const long e = static_cast<long>(e10);
  if (e >= -4 && e <= 21) {
    if (e <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
    if (static_cast<std::size_t>(e) >= m.size()) return sign + m + std::string(static_cast<std::size_t>(e) - m.size(), '0');
    return sign + m.substr(0, static_cast<std::size_t>(e)) + "." + m.substr(static_cast<std::size_t>(e));
  }
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(e - 1);
  return out;
}

/// Parses `[+-]digits[.digits][(e|E)[+-]digits]` (a leading or trailing point
/// is accepted as long as one digit is present) at the working precision.
inline Real real_from_decimal(std::string_view s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  if (n == 0) throw parse_error("empty decimal string", 0);
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t mantissa_digits = 0;
  while (i < n && s[i] >= '0' && s[i] <= '9') { ++i; ++mantissa_digits; }
  if (i < n && s[i] == '.') {
    ++i;
    while (i < n && s[i] >= '0' && s[i] <= '9') { ++i; ++mantissa_digits; }
  }
  if (mantissa_digits == 0) throw parse_error("expected digit", i < n ? i : n);
  if (i < n && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < n && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < n && s[i] >= '0' && s[i] <= '9') { ++i; ++exp_digits; }
    if (exp_digits == 0) throw parse_error("expected exponent digit", i);
  }
  if (i != n) throw parse_error("unexpected character", i);
  Real r;
  const std::string buf(s);
  mpfr_set_str(r.get(), buf.c_str(), 10, MPFR_RNDN);
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const Real& x) {
  const auto p = os.precision();
  return os << to_decimal(x, p > 0 ? static_cast<long>(p) : bits_to_digits(x.precision()));
}

/// |a - b| / max(|a|, |b|), or |a - b| when both are zero-scale.
inline Real relative_difference(const Real& a, const Real& b) {
  const Real scale = max(abs(a), abs(b));
  const Real d = abs(a - b);
  return scale.is_zero() ? d : d / scale;
}

/// Number of matching significant digits, -log10(relative difference), capped.
inline double agreeing_digits(const Real& a, const Real& b, double cap = 1000.0) {
  const Real rel = relative_difference(a, b);
  if (rel.is_zero()) return cap;
  const double d = -log(rel).to_double() / 2.302585092994046;
  return d > cap ? cap : d;
}

}  // namespace glaisher

#endif  // GLAISHER_REAL_HPP
