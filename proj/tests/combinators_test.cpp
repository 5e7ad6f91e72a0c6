#include <gtest/gtest.h>

#include <cmath>

#include "psicert/combinators.hpp"

namespace {

using namespace psicert;

// exp(t^2) is log-convex with f(0) = 1, so ln g(t) = a (1 - a) t^2.
const auto gauss = [](double t) { return std::exp(t * t); };

TEST(NeumanCheck, ClosedFormAboveOne) {
  // min(2 (y^2 - x^2), 2 x^2) for a = 2
  EXPECT_NEAR(neuman_check(gauss, 2.0, 1.0, 2.0, 1.0), 2.0, 1e-14);
  EXPECT_NEAR(neuman_check(gauss, 2.0, 1.0, 1.1, 1.0), 2.0 * (1.21 - 1.0), 1e-14);
}

TEST(NeumanCheck, ClosedFormBelowOne) {
  // min(0.25 (y^2 - x^2), 0.25 x^2) for a = 1/2
  EXPECT_NEAR(neuman_check(gauss, 0.5, 1.0, 2.0, 1.0), 0.25, 1e-14);
}

TEST(NeumanCheck, WithoutBoundUsesMonotonePartOnly) {
  EXPECT_NEAR(neuman_check(gauss, 2.0, 1.0, 2.0), 6.0, 1e-13);
  EXPECT_NEAR(neuman_check(gauss, 2.0, 1.0, 2.0, std::numeric_limits<double>::infinity()), 6.0, 1e-13);
}

TEST(NeumanCheck, LogConcaveInputGivesNegativeMargin) {
  const auto bump = [](double t) { return std::exp(-t * t); };
  EXPECT_LT(neuman_check(bump, 2.0, 1.0, 2.0), 0.0);
}

TEST(NeumanCheck, RejectsBadArguments) {
  EXPECT_THROW((void)neuman_check(gauss, 0.0, 1.0, 2.0), EvalError);
  EXPECT_THROW((void)neuman_check(gauss, 2.0, 2.0, 1.0), EvalError);
  EXPECT_THROW((void)neuman_check([](double) { return -1.0; }, 2.0, 1.0, 2.0), EvalError);
}

// ln f(e^x) = e^x is convex for f = exp.
const auto expo = [](double t) { return std::exp(t); };
// ln f(e^x) = -e^(-x) is concave for f(t) = exp(-1/t).
const auto inv_expo = [](double t) { return std::exp(-1.0 / t); };

TEST(PowerRatioCheck, ConvexDirectionTable) {
  EXPECT_GT(power_ratio_check(expo, 2.0, 1.5, 2.0, Curvature::Convex), 0.0);
  EXPECT_GT(power_ratio_check(expo, 2.0, 0.2, 0.6, Curvature::Convex), 0.0);
  EXPECT_GT(power_ratio_check(expo, 0.5, 0.2, 0.6, Curvature::Convex), 0.0);
  EXPECT_GT(power_ratio_check(expo, 0.5, 1.5, 3.0, Curvature::Convex), 0.0);
  EXPECT_GT(power_ratio_check(expo, -1.0, 1.5, 3.0, Curvature::Convex), 0.0);
  EXPECT_GT(power_ratio_check(expo, -1.0, 0.2, 0.6, Curvature::Convex), 0.0);
}

TEST(PowerRatioCheck, ExactValue) {
  // g(x) = exp(x^2 - 2x); increasing on (1, inf)
  EXPECT_NEAR(power_ratio_check(expo, 2.0, 1.5, 2.0, Curvature::Convex), 1.0 - std::exp(-0.75), 1e-15);
}

TEST(PowerRatioCheck, ConcaveSwapsDirection) {
  EXPECT_GT(power_ratio_check(inv_expo, 2.0, 1.5, 3.0, Curvature::Concave), 0.0);
  EXPECT_LT(power_ratio_check(inv_expo, 2.0, 1.5, 3.0, Curvature::Convex), 0.0);
}

TEST(PowerRatioCheck, RejectsStraddlingOne) {
  EXPECT_THROW((void)power_ratio_check(expo, 2.0, 0.5, 1.5, Curvature::Convex), EvalError);
  EXPECT_THROW((void)power_ratio_check(expo, 0.0, 1.5, 2.0, Curvature::Convex), EvalError);
}

TEST(GrunbaumCheck, IdentityGivesOne) {
  const auto id = [](double t) { return t; };
  EXPECT_EQ(grunbaum_check(id, 1.0, 2.0), 1.0);
  EXPECT_EQ(grunbaum_check(id, 3.0, 4.0), 1.0);
}

TEST(GrunbaumCheck, DirectionAndThreshold) {
  // f(t) = 1 + t^2: g(t) = t increasing, h(x) = 1 + x^4
  const auto f = [](double t) { return 1.0 + t * t; };
  EXPECT_NEAR(grunbaum_check(f, 1.0, 1.0), 1.0 + 5.0 - 2.0 - 2.0, 1e-15);
  EXPECT_NEAR(grunbaum_check(f, 1.0, 1.0, 0.0, Monotone::Decreasing), -2.0, 1e-15);
  EXPECT_THROW((void)grunbaum_check(f, 0.5, 2.0, 1.0), EvalError);
}

}  // namespace
