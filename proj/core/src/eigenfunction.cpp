#include "fucik/eigenfunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fucik/errors.hpp"

namespace fucik {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSupNorm = std::sqrt(2.0 / kPi);

void require_interval(double x) {
  if (!(x >= 0.0 && x <= kPi)) throw DomainError("x must lie in [0, pi]");
}

}  // namespace

// The arch is symmetric about its midpoint, so the sine is taken of the
// distance to the nearer end. Both endpoints then evaluate to exactly 0.
double Bump::value(double x) const {
  const double d = std::min(x - start, end - x);
  return sign * amplitude * std::sin(frequency * d);
}

double Bump::derivative(double x) const {
  return sign * amplitude * frequency * std::cos(frequency * (x - start));
}

double Bump::second_derivative(double x) const {
  const double d = std::min(x - start, end - x);
  return -sign * amplitude * frequency * frequency * std::sin(frequency * d);
}

PiecewiseEigenfunction PiecewiseEigenfunction::build(const FucikPoint& p) {
  validate(p);
  std::vector<Bump> bumps;
  if (p.n == 1) {
    bumps.push_back({1, 0.0, kPi, 1.0, kSupNorm});
    return {FucikPoint{1, 1.0, 1.0}, std::move(bumps)};
  }

  const double root_alpha = std::sqrt(p.alpha);
  const double root_beta = std::sqrt(p.beta);
  // slope matching at zeros: a+ sqrt(alpha) = a- sqrt(beta); the taller bump sets the sup norm
  const double amp_pos = kSupNorm * std::min(1.0, root_beta / root_alpha);
  const double amp_neg = kSupNorm * std::min(1.0, root_alpha / root_beta);

  bumps.reserve(static_cast<std::size_t>(p.n));
  double x = 0.0;
  for (int i = 0; i < p.n; ++i) {
    const bool positive = i % 2 == 0;
    const double freq = positive ? root_alpha : root_beta;
    const double width = kPi / freq;
    bumps.push_back({positive ? 1 : -1, x, x + width, freq, positive ? amp_pos : amp_neg});
    x += width;
  }
  // absorb the on-curve residual (<= kCurveTolerance) so the last zero is exactly pi
  bumps.back().end = kPi;
  return {p, std::move(bumps)};
}

std::vector<double> PiecewiseEigenfunction::junctions() const {
  std::vector<double> out;
  out.reserve(bumps_.size());
  for (std::size_t i = 1; i < bumps_.size(); ++i) out.push_back(bumps_[i].start);
  return out;
}

std::size_t PiecewiseEigenfunction::locate(double x) const {
  // first bump whose end is >= x
  auto it = std::lower_bound(bumps_.begin(), bumps_.end(), x,
                             [](const Bump& b, double v) { return b.end < v; });
  if (it == bumps_.end()) --it;
  return static_cast<std::size_t>(it - bumps_.begin());
}

double PiecewiseEigenfunction::operator()(double x) const { return bumps_[locate(x)].value(x); }

double PiecewiseEigenfunction::derivative(double x, bool from_right) const {
  std::size_t i = locate(x);
  if (from_right && i + 1 < bumps_.size() && x >= bumps_[i].end) ++i;
  return bumps_[i].derivative(x);
}

double evaluate(const PiecewiseEigenfunction& f, double x) {
  require_interval(x);
  return f(x);
}

double ode_residual(const PiecewiseEigenfunction& f, double x) {
  require_interval(x);
  const auto bumps = f.bumps();
  for (const auto& b : bumps) {
    if (std::abs(x - b.start) < kJunctionTolerance || std::abs(x - b.end) < kJunctionTolerance) {
      throw JunctionError("ode_residual is undefined at a bump boundary");
    }
  }
  const Bump& b = bumps[f.locate(x)];
  const double u = b.value(x);
  const double u_pp = b.second_derivative(x);
  const double pos = std::max(u, 0.0);
  const double neg = std::max(-u, 0.0);
  const FucikPoint& p = f.point();
  return -u_pp - p.alpha * pos + p.beta * neg;
}

double basis_function(int k, double x) { return kSupNorm * std::sin(k * x); }

}  // namespace fucik
