#pragma once

#include <utility>

#include <Eigen/Dense>

#include "fucik/certify.hpp"

namespace fucik {

/// Allowance for truncation effects on the Paley-Wiener window. Not a
/// property of the criterion itself.
inline constexpr double kWitnessCushion = 0.02;

struct GramWitness {
  int size = 0;
  double min_eig = 1.0;
  double max_eig = 1.0;
  double theta = 0.0;          // sqrt(total) of the certificate
  double lower_window = 1.0;   // (1 - theta)^2 - cushion
  double upper_window = 1.0;   // (1 + theta)^2 + cushion
  double cushion = kWitnessCushion;
  bool certified = false;
  bool inside_window = false;
};

/// Matrix of <h_i, h_j>, i, j = 1..n_trunc, with h_n = g^n (phi_n for indices
/// without an entry). With `rescale`, members of N* are multiplied by
/// rho_n = <g, phi_n>/||g||^2 as in the Paley-Wiener argument; the split is
/// taken from `cert` when given, otherwise from certify_theorem1(spec).
Eigen::MatrixXd gram_matrix(const SystemSpec& spec, int n_trunc, bool rescale,
                            const Certificate* cert = nullptr);

/// (smallest, largest) eigenvalue of a symmetric matrix.
std::pair<double, double> extremal_eigs(const Eigen::MatrixXd& m);

/// Certifies spec, assembles the rescaled Gram matrix and checks its spectrum
/// against [(1 - theta)^2, (1 + theta)^2] widened by the cushion.
GramWitness gram_witness(const SystemSpec& spec, int n_trunc);

}  // namespace fucik
