#include <cmath>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "fucik/certify.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/envelope.hpp"
#include "fucik/errors.hpp"
#include "fucik/gram.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/system_io.hpp"
#include "test_support.hpp"

using namespace fucik;

namespace {

std::string spec_path(const std::string& name) { return std::string(FUCIK_SPECS_DIR) + "/" + name; }

}  // namespace

TEST(GramMatrix, DiagonalSystemIsIdentity) {
  const auto m = gram_matrix(load_system_spec(spec_path("diag.json")), 8, false);
  ASSERT_EQ(m.rows(), 8);
  EXPECT_LE((m - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(GramMatrix, SinglePerturbationTouchesOneRowAndColumn) {
  SystemSpec spec;
  spec.entries[2] = support::even_point(2, 6.0);
  const auto m = gram_matrix(spec, 10, false);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      if (i == 1 || j == 1) continue;
      EXPECT_NEAR(m(i, j), i == j ? 1.0 : 0.0, 1e-12) << i << ' ' << j;
    }
  }
  EXPECT_GT(std::abs(m(0, 1)), 1e-3);
  EXPECT_DOUBLE_EQ(m(0, 1), m(1, 0));
  EXPECT_LT(m(1, 1), 1.0);  // sup-normalized, so the L^2 norm shrinks
}

TEST(GramMatrix, RescaleOnlyAffectsDefectSet) {
  SystemSpec spec;
  spec.entries[2] = support::even_point(2, 6.0);
  spec.entries[3] = point_on_curve(3, 10.5);
  spec.split = {SplitKind::explicit_list, {2}};
  const auto cert = certify_theorem1(spec);
  const auto plain = gram_matrix(spec, 6, false, &cert);
  const auto scaled = gram_matrix(spec, 6, true, &cert);
  const double rho3 = cert.per_index[1].rho;
  EXPECT_NEAR(scaled(1, 1), plain(1, 1), 1e-15);
  EXPECT_NEAR(scaled(2, 2), rho3 * rho3 * plain(2, 2), 1e-14);
  EXPECT_NEAR(scaled(1, 2), rho3 * plain(1, 2), 1e-14);
}

TEST(GramMatrix, Errors) {
  EXPECT_THROW(gram_matrix(SystemSpec{}, 0, false), DomainError);
}

TEST(ExtremalEigs, Examples) {
  Eigen::MatrixXd m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  const auto [lo, hi] = extremal_eigs(m);
  EXPECT_NEAR(lo, 1.0, 1e-14);
  EXPECT_NEAR(hi, 3.0, 1e-14);
  const auto [a, b] = extremal_eigs(Eigen::MatrixXd::Identity(5, 5));
  EXPECT_DOUBLE_EQ(a, 1.0);
  EXPECT_DOUBLE_EQ(b, 1.0);
  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 0.5, 0.0, 1.0;
  EXPECT_THROW(extremal_eigs(bad), DomainError);
}

TEST(GramWitness, CertifiedSystemsStayInsideWindow) {
  const auto spec = load_system_spec(spec_path("evens_gamma5.json"));
  for (int n : {16, 32}) {
    const auto w = gram_witness(spec, n);
    EXPECT_EQ(w.size, n);
    EXPECT_TRUE(w.certified);
    EXPECT_GT(w.min_eig, 0.0);
    EXPECT_GE(w.min_eig, w.lower_window);
    EXPECT_LE(w.max_eig, w.upper_window);
    EXPECT_TRUE(w.inside_window);
    EXPECT_NEAR(w.theta, std::sqrt(certify_theorem1(spec).total), 1e-15);
  }
}

// Every even g^n is a compressed copy of g^2 and keeps its nonzero mean, so
// for a fixed gamma off the diagonal the spectrum widens with the truncation.
// Reference values from an independent dense midpoint-rule computation.
TEST(GramMatrix, ConstantGammaSpectrumWidensWithTruncation) {
  SystemSpec spec;
  for (int n = 2; n <= 64; n += 2) spec.entries[n] = support::even_point(n, 5.0);
  const auto g2 = build(spec.entries.at(2));
  const double mean2 = integrate([&](double x) { return g2(x); }, 0.0, support::kPi, 1e-13, g2.junctions());
  EXPECT_GT(std::abs(mean2), 0.1);
  for (int n : {4, 16, 64}) {
    const auto g = build(spec.entries.at(n));
    const double mean = integrate([&](double x) { return g(x); }, 0.0, support::kPi, 1e-13, g.junctions());
    EXPECT_NEAR(mean, mean2, 1e-11) << n;
  }
  const std::vector<std::tuple<int, double, double>> expected{
      {16, 0.5247064522, 1.5309338159}, {32, 0.4316086600, 1.8604130690}, {64, 0.3296351624, 2.4354811445}};
  double prev_hi = 0.0;
  for (const auto& [n, lo_ref, hi_ref] : expected) {
    const auto [lo, hi] = extremal_eigs(gram_matrix(spec, n, false));
    EXPECT_NEAR(lo, lo_ref, 1e-6) << n;
    EXPECT_NEAR(hi, hi_ref, 1e-6) << n;
    EXPECT_GT(hi, prev_hi);
    prev_hi = hi;
  }
  const double e5 = envelope_E(5.0).value;
  EXPECT_GT(prev_hi, (1.0 + e5) * (1.0 + e5) + kWitnessCushion);
}
