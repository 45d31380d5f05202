#pragma once

#include <span>
#include <vector>

#include "fucik/spectrum.hpp"

namespace fucik {

inline constexpr double kJunctionTolerance = 1e-9;

/// One half-period sine arch: sign * amplitude * sin(frequency (x - start))
/// on [start, end] with end - start = pi / frequency.
struct Bump {
  int sign = 1;
  double start = 0.0;
  double end = 0.0;
  double frequency = 1.0;
  double amplitude = 0.0;

  double value(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;
  bool contains(double x) const { return start <= x && x <= end; }
};

/// Normalized Fucik eigenfunction g^n_{alpha,beta}: alternating sine bumps,
/// positive first, C^1 at every zero, sup norm sqrt(2/pi).
class PiecewiseEigenfunction {
 public:
  /// Validates p and assembles the bumps. (n, n^2, n^2) reproduces phi_n.
  static PiecewiseEigenfunction build(const FucikPoint& p);

  const FucikPoint& point() const { return point_; }
  std::span<const Bump> bumps() const { return bumps_; }

  /// Interior zeros, in increasing order.
  std::vector<double> junctions() const;

  /// Index of the bump containing x; left bump wins at a junction.
  std::size_t locate(double x) const;

  double operator()(double x) const;

  /// One-sided first derivative; `from_right` selects the bump to the right
  /// of a junction.
  double derivative(double x, bool from_right = true) const;

 private:
  PiecewiseEigenfunction(FucikPoint p, std::vector<Bump> bumps)
      : point_(p), bumps_(std::move(bumps)) {}

  FucikPoint point_;
  std::vector<Bump> bumps_;
};

inline PiecewiseEigenfunction build(const FucikPoint& p) { return PiecewiseEigenfunction::build(p); }

/// Value at x in [0, pi]; throws DomainError outside.
double evaluate(const PiecewiseEigenfunction& f, double x);

/// -f''(x) - alpha f+(x) + beta f-(x) from the analytic second derivative.
/// Throws JunctionError within kJunctionTolerance of a bump boundary.
double ode_residual(const PiecewiseEigenfunction& f, double x);

/// phi_k(x) = sqrt(2/pi) sin(kx).
double basis_function(int k, double x);

}  // namespace fucik
