#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fucik/eigenfunction.hpp"
#include "fucik/errors.hpp"
#include "fucik/fourier.hpp"
#include "fucik/quadrature.hpp"
#include "test_support.hpp"

using namespace fucik;
using fucik::support::kPi;

TEST(Coefficient, LimitAtFour) {
  EXPECT_DOUBLE_EQ(coefficient({4.0, 2}), 1.0);
  for (int k : {1, 3, 4, 5, 10}) EXPECT_DOUBLE_EQ(coefficient({4.0, k}), 0.0) << k;
}

// Values frozen from a 40-digit evaluation of the closed form.
TEST(Coefficient, FrozenValuesAtSixPointTwoFive) {
  EXPECT_NEAR(coefficient({6.25, 1}), -0.37541008365111955, 1e-13);
  EXPECT_NEAR(coefficient({6.25, 2}), 0.7874488920779792, 1e-13);
  EXPECT_NEAR(coefficient({6.25, 3}), 0.12655428622681802, 1e-13);
}

TEST(Coefficient, DomainErrors) {
  EXPECT_THROW(coefficient({3.9, 1}), DomainError);
  EXPECT_THROW(coefficient({9.0, 1}), DomainError);
  EXPECT_THROW(coefficient({6.0, 0}), DomainError);
}

TEST(Coefficient, MatchesQuadratureOnGrid) {
  for (double gamma : support::gamma_grid(4.25, 8.75, 0.25)) {
    const auto p = gamma2_point(gamma);
    for (int k = 1; k <= 20; ++k) {
      EXPECT_NEAR(coefficient({gamma, k}), quadrature_coefficient(p, k), 1e-9) << gamma << ' ' << k;
    }
  }
}

TEST(Coefficient, ReflectedBranch) {
  for (double gamma : {4.5, 6.25, 8.0}) {
    const auto q = gamma2_point(gamma, Branch::beta_major);
    EXPECT_DOUBLE_EQ(q.beta, gamma);
    for (int k = 1; k <= 12; ++k) {
      const double a = coefficient({gamma, k});
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      EXPECT_DOUBLE_EQ(coefficient({gamma, k, Branch::beta_major}), sign * a);
      EXPECT_NEAR(coefficient({gamma, k, Branch::beta_major}), quadrature_coefficient(q, k), 1e-9);
    }
  }
}

TEST(Coefficient, ContinuousAtFour) {
  for (int k = 1; k <= 8; ++k) {
    const double limit = k == 2 ? 1.0 : 0.0;
    const double near = coefficient({4.0 + 1e-6, k}) - limit;
    const double far = coefficient({4.0 + 1e-4, k}) - limit;
    EXPECT_NEAR(near, 0.0, 1e-6) << k;
    // linear in gamma - 4, quadratic for even k != 2 where sin(k pi/2) also vanishes
    const double ratio = k % 2 == 0 && k != 2 ? 1e4 : 1e2;
    EXPECT_NEAR(far, ratio * near, 1e-2 * std::abs(far) + 1e-15) << k;
  }
}

TEST(Gamma2Point, OnCurve) {
  const auto p = gamma2_point(6.25);
  EXPECT_EQ(p.n, 2);
  EXPECT_DOUBLE_EQ(p.alpha, 6.25);
  EXPECT_NEAR(p.beta, 6.25 / 2.25, 1e-14);
  EXPECT_NO_THROW(validate(p));
  EXPECT_TRUE(gamma2_point(4.0) == (FucikPoint{2, 4.0, 4.0}));
}

TEST(ApplyDilation, MapsSinesToSines) {
  // sin(n y) is pi-periodic only for even n
  for (int n = 2; n <= 8; n += 2) {
    for (int k = 1; k <= 7; ++k) {
      const auto t = apply_dilation(k, [n](double y) { return std::sin(n * y); });
      for (double x = 0.0; x <= kPi; x += 0.05) {
        EXPECT_NEAR(t(x), std::sin(k * n * x / 2.0), 1e-12) << n << ' ' << k << ' ' << x;
      }
    }
  }
  const auto t2 = apply_dilation(2, [](double y) { return y; });
  EXPECT_DOUBLE_EQ(t2(1.0), 1.0);
  EXPECT_THROW(apply_dilation(0, [](double y) { return y; }), DomainError);
}

TEST(ApplyDilation, PeriodicExtension) {
  const auto t = apply_dilation(4, [](double y) { return y; });
  EXPECT_NEAR(t(0.25 * kPi), 0.5 * kPi, 1e-15);
  EXPECT_NEAR(t(0.75 * kPi), 0.5 * kPi, 1e-14);  // 3 pi/2 wraps to pi/2
  EXPECT_NEAR(t(kPi), kPi, 1e-15);
}

TEST(DilationNormBound, Values) {
  EXPECT_DOUBLE_EQ(dilation_norm_bound(2), 1.0);
  EXPECT_DOUBLE_EQ(dilation_norm_bound(8), 1.0);
  EXPECT_DOUBLE_EQ(dilation_norm_bound(1), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(dilation_norm_bound(3), std::sqrt(4.0 / 3.0));
  EXPECT_THROW(dilation_norm_bound(0), DomainError);
}

namespace {

// ||T_k f||^2 / ||f||^2 with panels cut where the periodic extension wraps.
double rayleigh(int k, const RealFunction& f, const std::vector<double>& f_breaks) {
  std::vector<double> cuts;
  const double period = 2.0 * kPi / k;
  for (int m = 0; m * period <= kPi + 1e-15; ++m) {
    for (double z : f_breaks) {
      const double x = (2.0 / k) * (m * kPi + z);
      if (x > 0.0 && x < kPi) cuts.push_back(x);
    }
    if (m > 0 && m * period < kPi) cuts.push_back(m * period);
  }
  std::sort(cuts.begin(), cuts.end());
  const auto t = apply_dilation(k, f);
  const double num = integrate([&](double x) { return t(x) * t(x); }, 0.0, kPi, 1e-13, cuts);
  const double den = integrate([&](double x) { return f(x) * f(x); }, 0.0, kPi, 1e-13, f_breaks);
  return num / den;
}

}  // namespace

TEST(DilationNormBound, RayleighQuotientsStayBelow) {
  const auto g = build(gamma2_point(7.0));
  const RealFunction gf = [&g](double y) { return g(y); };
  const std::vector<double> g_breaks = g.junctions();
  // all samples are continuous across the wrap of the periodic extension
  const std::vector<std::pair<RealFunction, std::vector<double>>> samples{
      {[](double) { return 1.0; }, {}},
      {[](double y) { return y * (kPi - y); }, {}},
      {[](double y) { return std::sin(y); }, {}},
      {[](double y) { return std::exp(-3.0 * y) * std::sin(y); }, {}},
      {[](double y) { return std::cos(2.0 * y) + 0.3; }, {}},
      {gf, g_breaks},
  };
  for (int k = 1; k <= 9; ++k) {
    const double bound = dilation_norm_bound(k);
    for (const auto& [f, breaks] : samples) {
      EXPECT_LE(std::sqrt(rayleigh(k, f, breaks)), bound + 1e-9) << k;
    }
  }
  // even k is an isometry on phi_2
  const RealFunction phi2 = [](double y) { return basis_function(2, y); };
  for (int k : {2, 4, 6}) EXPECT_NEAR(rayleigh(k, phi2, {}), 1.0, 1e-10);
  // mass on [0, pi/2] attains the odd-k bound
  const RealFunction left = [](double y) {
    const double s = std::sin(2.0 * y);
    return y <= 0.5 * kPi ? s * s : 0.0;
  };
  for (int k : {1, 3, 5}) {
    EXPECT_NEAR(std::sqrt(rayleigh(k, left, {0.5 * kPi})), dilation_norm_bound(k), 1e-9);
  }
}
