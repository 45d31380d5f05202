#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fucik/eigenfunction.hpp"

namespace fucik {

using RealFunction = std::function<double(double)>;

inline constexpr double kQuadratureTolerance = 1e-12;
inline constexpr int kQuadratureMaxDepth = 40;

/// Adaptive Simpson on [a, b] with Richardson correction. The interval is
/// first cut at `breakpoints`, so f only has to be analytic between them.
/// The absolute tolerance is shared between panels in proportion to width.
/// Throws QuadratureError if a panel does not converge within max_depth.
double integrate(const RealFunction& f, double a, double b, double tol = kQuadratureTolerance,
                 std::span<const double> breakpoints = {}, int max_depth = kQuadratureMaxDepth);

// L^2(0, pi) products of eigenfunctions. Panels are the union of the bump
// boundaries (and the zeros of phi_k), so every integrand is a product of two
// single sines on each panel.
double inner_product(const PiecewiseEigenfunction& f, const PiecewiseEigenfunction& g,
                     double tol = kQuadratureTolerance);
double inner_with_basis(const PiecewiseEigenfunction& f, int k, double tol = kQuadratureTolerance);
double norm_squared(const PiecewiseEigenfunction& f, double tol = kQuadratureTolerance);

/// ||f - phi_k||^2 integrated directly, not assembled from the other two products.
double distance_squared_to_basis(const PiecewiseEigenfunction& f, int k,
                                 double tol = kQuadratureTolerance);

}  // namespace fucik
