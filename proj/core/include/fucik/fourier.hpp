#pragma once

#include "fucik/quadrature.hpp"
#include "fucik/spectrum.hpp"

namespace fucik {

/// alpha_major: the Gamma_2 point (gamma, gamma/(sqrt(gamma)-1)^2), coefficients A_k.
/// beta_major: the mirrored point (delta/(sqrt(delta)-1)^2, delta), coefficients (-1)^k A_k.
enum class Branch { alpha_major, beta_major };

struct CoefficientQuery {
  double gamma = 4.0;
  int k = 1;
  Branch branch = Branch::alpha_major;
};

/// Closed-form <g^2, phi_k> for the Gamma_2 point with dilation parameter
/// gamma in [4, 9). gamma = 4 returns the exact limit (1 for k = 2, else 0).
double coefficient(const CoefficientQuery& q);

/// The Gamma_2 point whose larger eigenvalue equals gamma.
FucikPoint gamma2_point(double gamma, Branch branch = Branch::alpha_major);

/// <g^n_{alpha,beta}, phi_k> by adaptive quadrature over the bump panels.
double quadrature_coefficient(const FucikPoint& p, int k);

/// x -> g*(k x / 2), where g* is the pi-periodic extension of g from [0, pi].
RealFunction apply_dilation(int k, RealFunction g);

/// Operator norm of the dilation above: 1 for even k, sqrt(1 + 1/k) for odd k.
double dilation_norm_bound(int k);

}  // namespace fucik
