#include <gtest/gtest.h>

#include <vector>

#include <glaisher/glaisher.hpp>

#include "oracle.hpp"

using namespace glaisher;

namespace {

std::vector<Real> unit_points() { return {Real::ratio(1, 4), Real::ratio(1, 3), Real::ratio(1, 2)}; }

}  // namespace

TEST(LogGamma, StirlingMatchesMpfr) {
  for (long p : {20L, 50L, 100L}) {
    const ComputeContext ctx(p);
    auto s = ctx.scope();
    for (const Real& x : {Real::ratio(1, 100), Real::ratio(1, 4), Real::ratio(1, 2), Real(1), Real(2),
                          Real::ratio(15, 2), Real(100), Real(12345)}) {
      const Real want = oracle::log_gamma(x);
      EXPECT_TRUE(abs(log_gamma_ref(x, ctx) - want) <= Real::pow10(-(p + 3)) * max(abs(want), Real(1)))
          << p << " x=" << to_decimal(x, 6);
    }
    EXPECT_THROW(log_gamma_ref(Real(0), ctx), domain_error);
  }
}

TEST(LogGamma, FeauxAgainstOracle) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  for (const Real& x : {Real::ratio(-1, 2), Real::ratio(1, 4), Real::ratio(1, 3), Real::ratio(1, 2), Real(3)}) {
    const Approximation a = feaux_log_gamma1p(x, ctx);
    const Real err = abs(a.value - oracle::log_gamma(x + 1));
    EXPECT_TRUE(err < ctx.target_tolerance()) << to_decimal(x, 5) << " " << to_decimal(err, 3);
    EXPECT_TRUE(err <= 10 * a.error_estimate + Real::pow10(-55));
  }
  EXPECT_THROW(feaux_log_gamma1p(Real(-1), ctx), domain_error);
}

TEST(LogGamma, KummerAgainstOracle) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  for (const Real& x : {Real::ratio(1, 10), Real::ratio(1, 4), Real::ratio(1, 2), Real::ratio(9, 10)}) {
    const Approximation a = kummer_log_gamma(x, ctx);
    EXPECT_TRUE(abs(a.value - oracle::log_gamma(x)) < ctx.target_tolerance()) << to_decimal(x, 5);
  }
  EXPECT_THROW(kummer_log_gamma(Real(0), ctx), domain_error);
  EXPECT_THROW(kummer_log_gamma(Real(1), ctx), domain_error);
}

TEST(LogGamma, RepresentationsAgree) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  for (const Real& x : unit_points()) {
    const Real stirling = log_gamma_ref(x, ctx);
    const Real feaux = feaux_log_gamma1p(x, ctx).value - log(x);
    const Real kummer = kummer_log_gamma(x, ctx).value;
    EXPECT_GE(agreeing_digits(feaux, kummer), 30.0);
    EXPECT_GE(agreeing_digits(feaux, stirling), 30.0);
    EXPECT_GE(agreeing_digits(kummer, stirling), 30.0);
  }
}

TEST(LogGamma, Recurrence) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  const Real floor = Real::pow10(-55);
  for (const Real& x : unit_points()) {
    const Approximation up = feaux_log_gamma1p(x, ctx);
    const Approximation here = kummer_log_gamma(x, ctx);
    EXPECT_TRUE(abs(up.value - here.value - log(x)) <= 10 * (up.error_estimate + here.error_estimate) + floor);
  }
}

TEST(LogGamma, Reflection) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  const Real floor = Real::pow10(-55);
  for (const Real& x : unit_points()) {
    const Approximation a = kummer_log_gamma(x, ctx);
    const Approximation b = kummer_log_gamma(1 - x, ctx);
    const Real want = ctx.constants().log_pi - log(sin_pi(x));
    EXPECT_TRUE(abs(a.value + b.value - want) <= 10 * (a.error_estimate + b.error_estimate) + floor);
  }
}

TEST(LogGamma, FourierCoefficientForms) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  for (long n = 1; n <= 5; ++n) {
    const FourierCoefficient a = fourier_a_n(n, ctx);
    EXPECT_TRUE(abs(a.integral_value - a.closed_form_value) <= 10 * a.integral_error_estimate) << n;
  }
  EXPECT_THROW(fourier_a_n(0, ctx), domain_error);
}

TEST(LogGamma, FourierSeriesConverges) {
  const ComputeContext ctx(30);
  auto s = ctx.scope();
  const Real x = Real::ratio(1, 4);
  const Real want = oracle::log_gamma(x);
  Real previous = Real(1);
  for (long n : {10L, 100L, 1000L, 10000L}) {
    const Real err = abs(kummer_fourier_log_gamma(x, n, ctx) - want);
    EXPECT_TRUE(err < previous) << n;
    previous = err;
  }
  EXPECT_THROW(kummer_fourier_log_gamma(Real(1), 10, ctx), domain_error);
}

TEST(LogGamma, DirichletGamma) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  const Approximation g = dirichlet_gamma(ctx);
  EXPECT_TRUE(abs(g.value - euler_gamma_ref(ctx)) <= 10 * ctx.target_tolerance());
  EXPECT_TRUE(abs(g.value - oracle::euler_gamma()) <= 10 * g.error_estimate + Real::pow10(-55));
}

TEST(LogGamma, BarnesG) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  // G(2) = 1.
  EXPECT_TRUE(abs(log_barnes_g(Real(1), ctx).value) < ctx.target_tolerance());
  // G(3/2) = A^{-3/2} pi^{1/4} e^{1/8} 2^{1/24}.
  const Real want = -3 * oracle::log_a() / 2 + ctx.constants().log_pi / 4 + Real::ratio(1, 8) +
                    ctx.constants().log2 / 24;
  EXPECT_TRUE(abs(log_barnes_g(Real::ratio(1, 2), ctx).value - want) < ctx.target_tolerance());
  EXPECT_THROW(log_barnes_g(Real(0), ctx), domain_error);
}
