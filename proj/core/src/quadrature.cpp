#include "fucik/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fucik/errors.hpp"

namespace fucik {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMinDepth = 2;

template <class F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth, int max_depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double both = left + right;
  const double delta = both - whole;
  if (depth >= kMinDepth && std::abs(delta) <= 15.0 * tol) return both + delta / 15.0;
  if (depth >= max_depth) {
    throw QuadratureError("adaptive Simpson did not converge on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

template <class F>
double simpson_panel(const F& f, double a, double b, double tol, int max_depth) {
  if (b <= a) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 0, max_depth);
}

std::vector<double> panel_edges(double a, double b, std::span<const double> breakpoints) {
  std::vector<double> edges;
  edges.reserve(breakpoints.size() + 2);
  // cuts closer than this would leave slivers that cannot meet their share of the tolerance
  const double merge = 1e-14 * (b - a);
  std::vector<double> inner;
  for (double x : breakpoints) {
    if (x > a + merge && x < b - merge) inner.push_back(x);
  }
  std::sort(inner.begin(), inner.end());
  edges.push_back(a);
  for (double x : inner) {
    if (x - edges.back() > merge) edges.push_back(x);
  }
  edges.push_back(b);
  return edges;
}

std::vector<double> bump_edges(const PiecewiseEigenfunction& f) {
  std::vector<double> out;
  for (const auto& b : f.bumps()) out.push_back(b.start);
  return out;
}

std::vector<double> basis_zeros(int k) {
  std::vector<double> out;
  for (int j = 1; j < k; ++j) out.push_back(j * kPi / k);
  return out;
}

// Integrates fn(x, bump_f, bump_g) over the merged panel structure. Both bumps
// are fixed on each panel, which keeps the evaluation free of searches.
template <class F>
double integrate_bumpwise(const PiecewiseEigenfunction& f, const PiecewiseEigenfunction& g,
                          std::vector<double> extra, double tol, const F& fn) {
  auto cuts = bump_edges(f);
  const auto gcuts = bump_edges(g);
  cuts.insert(cuts.end(), gcuts.begin(), gcuts.end());
  cuts.insert(cuts.end(), extra.begin(), extra.end());
  const auto edges = panel_edges(0.0, kPi, cuts);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i];
    const double b = edges[i + 1];
    const double mid = 0.5 * (a + b);
    const Bump& bf = f.bumps()[f.locate(mid)];
    const Bump& bg = g.bumps()[g.locate(mid)];
    const double panel_tol = tol * (b - a) / kPi;
    total += simpson_panel([&](double x) { return fn(x, bf, bg); }, a, b, panel_tol,
                           kQuadratureMaxDepth);
  }
  return total;
}

}  // namespace

double integrate(const RealFunction& f, double a, double b, double tol,
                 std::span<const double> breakpoints, int max_depth) {
  if (!(a < b)) throw DomainError("integrate requires a < b");
  if (!(tol > 0.0)) throw DomainError("integrate requires a positive tolerance");
  const auto edges = panel_edges(a, b, breakpoints);
  const double width = b - a;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    total += simpson_panel(f, lo, hi, tol * (hi - lo) / width, max_depth);
  }
  return total;
}

double inner_product(const PiecewiseEigenfunction& f, const PiecewiseEigenfunction& g, double tol) {
  return integrate_bumpwise(f, g, {}, tol, [](double x, const Bump& bf, const Bump& bg) {
    return bf.value(x) * bg.value(x);
  });
}

double norm_squared(const PiecewiseEigenfunction& f, double tol) { return inner_product(f, f, tol); }

double inner_with_basis(const PiecewiseEigenfunction& f, int k, double tol) {
  if (k < 1) throw DomainError("basis index must be >= 1");
  return integrate_bumpwise(f, f, basis_zeros(k), tol, [k](double x, const Bump& bf, const Bump&) {
    return bf.value(x) * basis_function(k, x);
  });
}

double distance_squared_to_basis(const PiecewiseEigenfunction& f, int k, double tol) {
  if (k < 1) throw DomainError("basis index must be >= 1");
  return integrate_bumpwise(f, f, basis_zeros(k), tol, [k](double x, const Bump& bf, const Bump&) {
    const double d = bf.value(x) - basis_function(k, x);
    return d * d;
  });
}

}  // namespace fucik
