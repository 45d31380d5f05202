#include "fucik/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fucik/eigenfunction.hpp"
#include "fucik/errors.hpp"

namespace fucik {
namespace {

constexpr double kPi = std::numbers::pi;

void require_gamma(double gamma) {
  if (!(gamma >= 4.0 && gamma < 9.0)) throw DomainError("gamma must lie in [4, 9)");
}

double alpha_major_coefficient(double gamma, int k) {
  if (gamma == 4.0) return k == 2 ? 1.0 : 0.0;
  const double r = std::sqrt(gamma);
  const double kk = static_cast<double>(k) * k;
  const double pre = 2.0 / kPi * gamma * gamma / (r - 1.0);
  // k^2 (r-1)^2 - gamma factored as ((k-1) r - k)((k+1) r - k)
  const double denom = (kk - gamma) * ((k - 1) * r - k) * ((k + 1) * r - k);
  return pre * (2.0 - r) * std::sin(k * kPi / r) / denom;
}

}  // namespace

double coefficient(const CoefficientQuery& q) {
  require_gamma(q.gamma);
  if (q.k < 1) throw DomainError("coefficient index must be >= 1");
  const double a = alpha_major_coefficient(q.gamma, q.k);
  if (q.branch == Branch::alpha_major) return a;
  return q.k % 2 == 0 ? a : -a;
}

FucikPoint gamma2_point(double gamma, Branch branch) {
  require_gamma(gamma);
  const double r = std::sqrt(gamma);
  const double other = gamma / ((r - 1.0) * (r - 1.0));
  if (branch == Branch::alpha_major) return {2, gamma, other};
  return {2, other, gamma};
}

double quadrature_coefficient(const FucikPoint& p, int k) {
  if (k < 1) throw DomainError("coefficient index must be >= 1");
  return inner_with_basis(build(p), k);
}

RealFunction apply_dilation(int k, RealFunction g) {
  if (k < 1) throw DomainError("dilation index must be >= 1");
  return [k, g = std::move(g)](double x) {
    const double y = 0.5 * k * x;
    double shifted = y - kPi * std::floor(y / kPi);
    // the right end of a period belongs to that period, not the next
    if (shifted == 0.0 && y > 0.0) shifted = kPi;
    return g(std::min(shifted, kPi));
  };
}

double dilation_norm_bound(int k) {
  if (k < 1) throw DomainError("dilation index must be >= 1");
  if (k % 2 == 0) return 1.0;
  return std::sqrt(1.0 + 1.0 / k);
}

}  // namespace fucik
