#pragma once

// Closed-form Fucik spectrum curves of -u'' = alpha u+ - beta u- on (0, pi)
// with Dirichlet conditions.
//
// For even n the curve Gamma_n is
//     (n/2) pi/sqrt(alpha) + (n/2) pi/sqrt(beta) = pi,
// for odd n >= 3
//     ((n+1)/2) pi/sqrt(alpha) + ((n-1)/2) pi/sqrt(beta) = pi.
// n = 1 is represented by the single point (1, 1).

namespace fucik {

inline constexpr double kCurveTolerance = 1e-10;

struct FucikPoint {
  int n = 1;
  double alpha = 1.0;
  double beta = 1.0;

  friend bool operator==(const FucikPoint&, const FucikPoint&) = default;
};

/// LHS - pi of the Gamma_n equation. For n = 1 returns
/// min(|alpha - 1|, |beta - 1|), the distance to the trivial lines.
double curve_residual(const FucikPoint& p);

/// Residual of the reflected odd curve (swapped weights); odd n >= 3 only.
double reflected_curve_residual(const FucikPoint& p);

/// Unique beta with (n, alpha, beta) on Gamma_n.
double solve_beta(int n, double alpha);

/// Unique alpha with (n, alpha, beta) on Gamma_n.
double solve_alpha(int n, double beta);

/// Throws OffCurveError / ReflectedCurveError unless p is a valid point.
void validate(const FucikPoint& p);

/// Point on Gamma_n with the given alpha (n = 1 ignores alpha and yields (1, 1)).
FucikPoint point_on_curve(int n, double alpha);

/// True when alpha = beta = n^2, i.e. the eigenfunction is phi_n itself.
bool is_symmetric(const FucikPoint& p);

/// gamma_n = 4 max(alpha, beta) / n^2 for even n.
double dilation_parameter(const FucikPoint& p);

}  // namespace fucik
