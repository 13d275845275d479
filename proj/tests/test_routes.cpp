#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include <glaisher/glaisher.hpp>

#include "oracle.hpp"

using namespace glaisher;

TEST(Routes, OracleSelfCheck) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  // Wide-precision central difference must not depend on the working precision.
  Real wide;
  {
    precision_scope w(digits_to_bits(90));
    wide = oracle::log_a();
  }
  EXPECT_TRUE(abs(oracle::log_a() - wide) < Real::pow10(-58));
}

TEST(Routes, IntegralRoutesMatchOracle) {
  for (long p : {20L, 50L}) {
    const ComputeContext ctx(p);
    auto s = ctx.scope();
    const Real want = oracle::log_a();
    for (RouteId id : {RouteId::pain1, RouteId::pain2, RouteId::feaux, RouteId::kummer}) {
      const RouteEstimate r = run_route(id, {}, ctx);
      EXPECT_TRUE(r.converged) << to_string(id);
      EXPECT_EQ(r.route_id, id);
      EXPECT_TRUE(abs(r.value - want) < ctx.target_tolerance()) << p << " " << to_string(id);
      EXPECT_GT(r.evaluations, 0u);
    }
  }
}

TEST(Routes, IntegralRoutesAgreePairwise) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  std::vector<RouteEstimate> all;
  for (RouteId id : {RouteId::pain1, RouteId::pain2, RouteId::feaux, RouteId::kummer}) all.push_back(run_route(id, {}, ctx));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_GE(agreeing_digits(all[i].value, all[j].value), 25.0);
}

TEST(Routes, ConsensusAndRes2Control) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  const Consensus c = consensus_log_a(ctx);
  EXPECT_TRUE(abs(c.value - oracle::log_a()) < ctx.target_tolerance());

  const RouteEstimate dt = route_kummer(ctx, Res2Measure::dt);
  EXPECT_FALSE(dt.converged);
  EXPECT_TRUE(abs(dt.value - c.value) > Real::ratio(1, 100));
  EXPECT_EQ(dt.parameters.at("measure"), "dt");
  const RouteEstimate dt_over_t = route_kummer(ctx, Res2Measure::dt_over_t);
  EXPECT_GE(agreeing_digits(dt_over_t.value, c.value), 25.0);
}

TEST(Routes, RichardsonRemovesEvenPowers) {
  precision_scope s(digits_to_bits(40));
  std::vector<Real> samples;
  for (long n : {4L, 8L, 16L, 32L}) {
    const Real inv = Real(1) / (Real(n) * Real(n));
    samples.push_back(Real::ratio(7, 3) + 5 * inv - 11 * inv * inv + 2 * inv * inv * inv);
  }
  EXPECT_TRUE(abs(richardson_even(samples, 0, 3) - Real::ratio(7, 3)) < Real::pow10(-35));
  EXPECT_TRUE(abs(richardson_even(samples, 0, 0) - samples[0]) == 0);
}

TEST(Routes, LimitConvergesAndExtrapolates) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  const Real want = oracle::log_a();
  Real previous = Real(1);
  for (long n : {16L, 32L, 64L, 128L}) {
    const Real err = abs(route_limit(n, 0, ctx).value - want);
    EXPECT_TRUE(err < previous) << n;
    previous = err;
  }
  const RouteEstimate raw = route_limit(64, 0, ctx);
  const RouteEstimate extrapolated = route_limit(64, 3, ctx);
  EXPECT_TRUE(abs(extrapolated.value - want) < abs(raw.value - want) * Real::pow10(-10));
  EXPECT_TRUE(abs(extrapolated.value - want) <= 10 * extrapolated.error_estimate);
  EXPECT_TRUE(abs(raw.value - want) <= 10 * raw.error_estimate);
  EXPECT_THROW(route_limit(1, 0, ctx), domain_error);
}

TEST(Routes, FourierSeries) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  const Real want = oracle::log_a();
  const RouteEstimate fast = route_fourier_series(100, true, ctx);
  EXPECT_GE(agreeing_digits(fast.value, want), 20.0);
  EXPECT_TRUE(abs(fast.value - want) <= 10 * fast.error_estimate);

  // Raw error behaves like log N / N: decreasing, with a steady normalised ratio.
  std::vector<double> normalised;
  Real previous = Real(1);
  for (long n : {100L, 1000L, 10000L}) {
    const RouteEstimate raw = route_fourier_series(n, false, ctx);
    const Real err = abs(raw.value - want);
    EXPECT_TRUE(err < previous);
    EXPECT_TRUE(abs(raw.value - want) <= 10 * raw.error_estimate);
    previous = err;
    normalised.push_back(err.to_double() * static_cast<double>(n) / std::log(static_cast<double>(n)));
  }
  for (std::size_t i = 1; i < normalised.size(); ++i) {
    EXPECT_GT(normalised[i] / normalised[i - 1], 0.5);
    EXPECT_LT(normalised[i] / normalised[i - 1], 2.0);
  }
}

TEST(Routes, FourierSingleTermIsHead) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  const auto& c = ctx.constants();
  const RouteEstimate one = route_fourier_series(1, false, ctx);
  EXPECT_TRUE(one.value == c.log2 / 36 + (c.euler_gamma + c.log_2pi) / 12);
  EXPECT_THROW(route_fourier_series(0, false, ctx), domain_error);
}

TEST(Routes, Hasse) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  const std::vector<Real> sums = hasse_partial_sums(10, ctx);
  ASSERT_EQ(sums.size(), 11u);
  EXPECT_TRUE(sums[0] == Real::ratio(1, 8));

  const Real want = oracle::log_a();
  const RouteEstimate r = route_hasse(60, ctx);
  EXPECT_TRUE(abs(r.value - want) <= 10 * r.error_estimate);
  EXPECT_TRUE(abs(route_hasse(60, ctx).value - want) < abs(route_hasse(20, ctx).value - want));
  EXPECT_EQ(hasse_required_digits(60), 39);

  const ComputeContext low(30);
  EXPECT_THROW(route_hasse(60, low), insufficient_precision);
  EXPECT_THROW(route_hasse(60, low), precision_error);
}

TEST(Routes, IdentityResiduals) {
  const ComputeContext ctx(50);
  auto s = ctx.scope();
  const Real log_a = consensus_log_a(ctx).value;
  const std::vector<IdentityResidual> good = {glaisher_identity_residual(ctx, log_a), gla2_residual(ctx, log_a),
                                              log_sin_check(ctx), res2_measure_check(ctx, log_a)};
  for (const auto& r : good) {
    EXPECT_TRUE(r.passed()) << to_string(r.identity_id);
    EXPECT_TRUE(abs(r.residual) < Real::pow10(-40));
  }
  EXPECT_TRUE(glaisher_identity_residual(ctx).passed());
  EXPECT_TRUE(gla2_residual(ctx).passed());

  const ResidualOptions corrupt{true};
  EXPECT_FALSE(glaisher_identity_residual(ctx, log_a, corrupt).passed());
  EXPECT_FALSE(gla2_residual(ctx, log_a, corrupt).passed());
  EXPECT_FALSE(log_sin_check(ctx, corrupt).passed());
}

TEST(Routes, ResidualsAtLowPrecision) {
  const ComputeContext ctx(20);
  auto s = ctx.scope();
  EXPECT_TRUE(glaisher_identity_residual(ctx).passed());
  EXPECT_TRUE(gla2_residual(ctx).passed());
  EXPECT_TRUE(log_sin_check(ctx).passed());
}

TEST(Routes, NamesRoundTrip) {
  for (RouteId id : kAllRoutes) EXPECT_EQ(parse_route_id(to_string(id)), id);
  for (IdentityId id : {IdentityId::glaisher_half, IdentityId::gla2, IdentityId::log_sin, IdentityId::res2_measure_check})
    EXPECT_EQ(parse_identity_id(to_string(id)), id);
  EXPECT_FALSE(parse_route_id("nosuch"));
}
