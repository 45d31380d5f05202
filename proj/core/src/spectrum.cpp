#include "fucik/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "fucik/errors.hpp"

namespace fucik {
namespace {

constexpr double kPi = std::numbers::pi;

// Weights (w_alpha, w_beta) so that Gamma_n reads w_alpha/sqrt(alpha) + w_beta/sqrt(beta) = 1.
struct CurveWeights {
  double alpha;
  double beta;
};

CurveWeights weights(int n) {
  if (n % 2 == 0) return {n / 2.0, n / 2.0};
  return {(n + 1) / 2.0, (n - 1) / 2.0};
}

void require_index(int n) {
  if (n <= 0) throw DomainError("spectrum index n must be positive, got " + std::to_string(n));
}

void require_positive(const FucikPoint& p) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
    throw DomainError("Fucik eigenvalues must be positive");
  }
}

std::string describe(const FucikPoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(n=" << p.n << ", alpha=" << p.alpha << ", beta=" << p.beta << ")";
  return os.str();
}

// 1/sqrt(x) where x solves w_other/sqrt(other) + w/sqrt(x) = 1.
double solve_inverse_root(double w_other, double other, double w) {
  const double rest = 1.0 - w_other / std::sqrt(other);
  if (!(rest > 0.0)) throw DomainError("no point on the curve for this coordinate");
  return rest / w;
}

}  // namespace

double curve_residual(const FucikPoint& p) {
  require_index(p.n);
  require_positive(p);
  if (p.n == 1) return std::min(std::abs(p.alpha - 1.0), std::abs(p.beta - 1.0));
  const auto w = weights(p.n);
  return w.alpha * kPi / std::sqrt(p.alpha) + w.beta * kPi / std::sqrt(p.beta) - kPi;
}

double reflected_curve_residual(const FucikPoint& p) {
  require_index(p.n);
  require_positive(p);
  if (p.n < 3 || p.n % 2 == 0) throw DomainError("reflected curve exists for odd n >= 3 only");
  const auto w = weights(p.n);
  return w.beta * kPi / std::sqrt(p.alpha) + w.alpha * kPi / std::sqrt(p.beta) - kPi;
}

double solve_beta(int n, double alpha) {
  require_index(n);
  if (n == 1) throw DomainError("n = 1 has no curve; use the point (1, 1)");
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  const auto w = weights(n);
  // even n: sqrt(alpha) > n/2; odd n: sqrt(alpha) > (n+1)/2
  if (!(std::sqrt(alpha) > w.alpha)) {
    throw DomainError("solve_beta: need sqrt(alpha) > " + std::to_string(w.alpha) +
                      " for n = " + std::to_string(n));
  }
  const double inv_root = solve_inverse_root(w.alpha, alpha, w.beta);
  return 1.0 / (inv_root * inv_root);
}

double solve_alpha(int n, double beta) {
  require_index(n);
  if (n == 1) throw DomainError("n = 1 has no curve; use the point (1, 1)");
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  const auto w = weights(n);
  if (!(std::sqrt(beta) > w.beta)) {
    throw DomainError("solve_alpha: need sqrt(beta) > " + std::to_string(w.beta) +
                      " for n = " + std::to_string(n));
  }
  const double inv_root = solve_inverse_root(w.beta, beta, w.alpha);
  return 1.0 / (inv_root * inv_root);
}

void validate(const FucikPoint& p) {
  require_index(p.n);
  require_positive(p);
  if (p.n == 1) {
    if (std::abs(p.alpha - 1.0) > kCurveTolerance || std::abs(p.beta - 1.0) > kCurveTolerance) {
      throw OffCurveError("n = 1 is represented only by (1, 1); got " + describe(p));
    }
    return;
  }
  if (std::abs(curve_residual(p)) <= kCurveTolerance) return;
  if (p.n % 2 == 1 && std::abs(reflected_curve_residual(p)) <= kCurveTolerance) {
    throw ReflectedCurveError("point " + describe(p) +
                              " lies on the reflected curve; swap alpha and beta and negate");
  }
  throw OffCurveError("point " + describe(p) + " is not on Gamma_" + std::to_string(p.n));
}

FucikPoint point_on_curve(int n, double alpha) {
  if (n == 1) return {1, 1.0, 1.0};
  return {n, alpha, solve_beta(n, alpha)};
}

bool is_symmetric(const FucikPoint& p) {
  const double sq = static_cast<double>(p.n) * p.n;
  constexpr double rel = 1e-12;
  return std::abs(p.alpha - sq) <= rel * sq && std::abs(p.beta - sq) <= rel * sq;
}

double dilation_parameter(const FucikPoint& p) {
  require_index(p.n);
  if (p.n % 2 != 0) throw DomainError("dilation parameter is defined for even n only");
  require_positive(p);
  const double sq = static_cast<double>(p.n) * p.n;
  return 4.0 * std::max(p.alpha, p.beta) / sq;
}

}  // namespace fucik
