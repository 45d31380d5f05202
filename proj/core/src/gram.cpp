#include "fucik/gram.hpp"

#include <cmath>
#include <map>
#include <optional>

#include "fucik/eigenfunction.hpp"
#include "fucik/errors.hpp"
#include "fucik/quadrature.hpp"
#include "parallel.hpp"

namespace fucik {
namespace {

constexpr double kSymmetryTolerance = 1e-11;

}  // namespace

Eigen::MatrixXd gram_matrix(const SystemSpec& spec, int n_trunc, bool rescale,
                            const Certificate* cert) {
  if (n_trunc < 1) throw DomainError("Gram truncation must be >= 1");
  validate(spec);

  std::vector<PiecewiseEigenfunction> funcs;
  funcs.reserve(static_cast<std::size_t>(n_trunc));
  for (int n = 1; n <= n_trunc; ++n) {
    auto it = spec.entries.find(n);
    const FucikPoint p = it != spec.entries.end() ? it->second
                                                  : FucikPoint{n, double(n) * n, double(n) * n};
    funcs.push_back(build(p));
  }

  std::vector<double> scale(static_cast<std::size_t>(n_trunc), 1.0);
  if (rescale) {
    std::optional<Certificate> owned;
    if (cert == nullptr) {
      owned = certify_theorem1(spec);
      cert = &*owned;
    }
    for (const auto& c : cert->per_index) {
      if (c.n <= n_trunc && c.set == IndexSet::defect) scale[static_cast<std::size_t>(c.n - 1)] = c.rho;
    }
  }

  // upper triangle, row-major pair list so the parallel split is deterministic
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_trunc; ++i) {
    for (int j = i; j < n_trunc; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> values(pairs.size());
  detail::parallel_for(pairs.size(), [&](std::size_t idx) {
    const auto [i, j] = pairs[idx];
    values[idx] = inner_product(funcs[static_cast<std::size_t>(i)], funcs[static_cast<std::size_t>(j)]);
  });

  Eigen::MatrixXd m(n_trunc, n_trunc);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto [i, j] = pairs[idx];
    const double v = scale[static_cast<std::size_t>(i)] * scale[static_cast<std::size_t>(j)] * values[idx];
    m(i, j) = v;
    m(j, i) = v;
  }
  return m;
}

std::pair<double, double> extremal_eigs(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DomainError("extremal_eigs needs a square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale) {
    throw DomainError("extremal_eigs needs a symmetric matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen-solver failed");
  const auto& ev = solver.eigenvalues();  // ascending
  return {ev(0), ev(ev.size() - 1)};
}

GramWitness gram_witness(const SystemSpec& spec, int n_trunc) {
  const Certificate cert = certify_theorem1(spec);
  const auto m = gram_matrix(spec, n_trunc, true, &cert);
  const auto [lo, hi] = extremal_eigs(m);

  GramWitness w;
  w.size = n_trunc;
  w.min_eig = lo;
  w.max_eig = hi;
  w.certified = cert.pass;
  w.theta = std::sqrt(std::max(0.0, cert.total));
  w.lower_window = (1.0 - w.theta) * (1.0 - w.theta) - w.cushion;
  w.upper_window = (1.0 + w.theta) * (1.0 + w.theta) + w.cushion;
  w.inside_window = lo >= w.lower_window && hi <= w.upper_window;
  return w;
}

}  // namespace fucik
