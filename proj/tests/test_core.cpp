#include <gtest/gtest.h>

#include <gmp.h>
#include <mpfr.h>

#include <string>

#include <glaisher/glaisher.hpp>

#include "oracle.hpp"

using namespace glaisher;

TEST(Context, DefaultTolerance) {
  const auto c50 = make_context(50);
  auto s = c50.scope();
  EXPECT_TRUE(c50.target_tolerance() == Real::pow10(-40));
  const auto c20 = make_context(20);
  auto s20 = c20.scope();
  EXPECT_TRUE(c20.target_tolerance() == Real::pow10(-10));
  EXPECT_EQ(c50.quad_max_level(), 12);
}

TEST(Context, RejectsLowPrecision) {
  try {
    make_context(19);
    FAIL() << "no exception";
  } catch (const precision_error& e) {
    EXPECT_NE(std::string(e.what()).find("precision too low"), std::string::npos);
  }
}

TEST(Context, ToleranceBounds) {
  ComputeContext ctx(30);
  auto s = ctx.scope();
  EXPECT_THROW(ctx.set_target_tolerance(Real::pow10(-31)), std::invalid_argument);
  EXPECT_THROW(ctx.set_target_tolerance(Real(0)), std::invalid_argument);
  ctx.set_target_tolerance(Real::pow10(-30));
  EXPECT_TRUE(ctx.target_tolerance() == Real::pow10(-30));
}

TEST(Constants, LazyAndIdempotent) {
  const ComputeContext a(60);
  EXPECT_FALSE(a.constants_cached());
  const auto& first = a.constants();
  EXPECT_TRUE(a.constants_cached());
  EXPECT_EQ(&first, &a.constants());
  const ComputeContext b(60);
  EXPECT_TRUE(b.constants().euler_gamma.identical(first.euler_gamma));
  EXPECT_TRUE(b.constants().log_pi.identical(first.log_pi));
}

TEST(Constants, AgainstMpfr) {
  for (long p : {20L, 50L, 120L}) {
    const ComputeContext ctx(p);
    auto s = ctx.scope();
    const auto& c = ctx.constants();
    EXPECT_GE(agreeing_digits(c.euler_gamma, oracle::euler_gamma()), p + 5) << p;
    EXPECT_GE(agreeing_digits(c.pi, Real::pi()), p + 5);
    EXPECT_TRUE(c.log_2pi == c.log2 + c.log_pi);
    EXPECT_GE(agreeing_digits(c.log_2pi, log(2 * c.pi)), p + 5);
  }
}

TEST(Real, DecimalRoundTrip) {
  gmp_randstate_t rng;
  gmp_randinit_default(rng);
  gmp_randseed_ui(rng, 20240611);
  for (long p : {20L, 50L, 100L}) {
    const ComputeContext ctx(p);
    auto s = ctx.scope();
    const Real bound = Real::pow10(-(p - 2));
    for (int i = 0; i < 200; ++i) {
      Real u;
      mpfr_urandomb(u.get(), rng);
      const Real x = (u - Real::ratio(1, 2)) * exp(Real((i % 41) - 20) * 3);
      const std::string text = to_decimal(x, p);
      EXPECT_TRUE(relative_difference(real_from_decimal(text), x) < bound) << text;
    }
  }
  gmp_randclear(rng);
}

TEST(Real, DecimalFormat) {
  precision_scope s(digits_to_bits(30));
  EXPECT_EQ(to_decimal(Real(0), 5), "0.0000");
  EXPECT_EQ(to_decimal(Real::ratio(1, 4), 5), "0.25000");
  EXPECT_EQ(to_decimal(Real(-3), 3), "-3.00");
  EXPECT_EQ(to_decimal(Real::pow10(-40), 3), "1.00e-40");
}

TEST(Real, ParseErrorsCarryPosition) {
  auto position = [](std::string_view text) -> long {
    try {
      real_from_decimal(text);
    } catch (const parse_error& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position(""), 0);
  EXPECT_EQ(position("abc"), 0);
  EXPECT_EQ(position("-"), 1);
  EXPECT_EQ(position("1.2x"), 3);
  EXPECT_EQ(position("1e"), 2);
  EXPECT_EQ(position("1e+5 "), 4);
  EXPECT_EQ(position("0.5"), -1);
  EXPECT_EQ(position("-.5E-3"), -1);
}

TEST(Real, DeterministicArithmetic) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  auto f = [] {
    Real x = Real::ratio(1, 3);
    for (int i = 0; i < 50; ++i) x = sin(x) + exp(-x) * log1p(x);
    return x;
  };
  EXPECT_TRUE(f().identical(f()));
  EXPECT_TRUE(route_feaux(ctx).value.identical(route_feaux(ctx).value));
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli_b2k(0), mpq_class(1));
  EXPECT_EQ(bernoulli_b2k(1), mpq_class(1, 6));
  EXPECT_EQ(bernoulli_b2k(2), mpq_class(-1, 30));
  EXPECT_EQ(bernoulli_b2k(6), mpq_class(-691, 2730));
  EXPECT_EQ(bernoulli_b2k(10), mpq_class(-174611, 330));
}

TEST(PowerSeries, ExpLogInverse) {
  precision_scope s(digits_to_bits(60));
  const std::size_t n = 30;
  const PowerSeries one_plus_t = PowerSeries::constant(Real(1), n) + PowerSeries::variable(n);
  const PowerSeries back = exp(log(one_plus_t));
  EXPECT_LT(abs(back[0] - 1).to_double(), 1e-55);
  EXPECT_LT(abs(back[1] - 1).to_double(), 1e-55);
  for (std::size_t k = 2; k < n; ++k) EXPECT_LT(abs(back[k]).to_double(), 1e-55) << k;
  const PowerSeries q = one_plus_t.reciprocal() * one_plus_t;
  for (std::size_t k = 1; k < n; ++k) EXPECT_LT(abs(q[k]).to_double(), 1e-55);
  const Real t = Real::ratio(1, 100);
  EXPECT_LT(abs(sinh_over_t_series(Real(3), n)(t) - sinh(3 * t) / t).to_double(), 1e-55);
}
