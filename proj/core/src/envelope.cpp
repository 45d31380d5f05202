#include "fucik/envelope.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "fucik/errors.hpp"

namespace fucik {
namespace {

constexpr double kPi = std::numbers::pi;
const double kTailWeight = std::sqrt(6.0 / 5.0);

// Closed-form tail only inside this window; near the ends the cot poles at
// sqrt(gamma) = 2, 3 cancel against the k = 2, 3 corrections (about 1e-9 lost
// at gamma = 4.001) and the direct sum is the accurate route.
constexpr double kClosedFormLow = 4.05;
constexpr double kClosedFormHigh = 8.95;
constexpr long kDirectTailTerms = 100000;

void require_gamma(double gamma) {
  if (!(gamma >= 4.0 && gamma <= kGammaMax)) {
    throw DomainError("gamma must lie in [4, 9 - 1e-9]");
  }
}

// 2/pi gamma^2 (sqrt(gamma) - 2) / (sqrt(gamma) - 1)
double common_prefactor(double gamma) {
  const double r = std::sqrt(gamma);
  return 2.0 / kPi * gamma * gamma * (r - 2.0) / (r - 1.0);
}

double rational_denominator(int k, double gamma) {
  const double r = std::sqrt(gamma);
  return (static_cast<double>(k) * k - gamma) * ((k - 1) * r - k) * ((k + 1) * r - k);
}

// Sum of 1/rational_denominator over k = 5..K, smallest terms first.
double tail_direct_sum(double gamma, long K) {
  double sum = 0.0;
  for (long k = K; k >= 5; --k) sum += 1.0 / rational_denominator(static_cast<int>(k), gamma);
  return sum;
}

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

double bound_B(int k, double gamma) {
  require_gamma(gamma);
  if (k < 1) throw DomainError("bound index must be >= 1");
  const double r = std::sqrt(gamma);
  switch (k) {
    case 1:
      return common_prefactor(gamma) * std::sin(kPi / r) / rational_denominator(1, gamma);
    case 2:
      return ((3.0 + kPi * kPi) * gamma + (9.0 - 2.0 * kPi * kPi) * r - 6.0) * (r - 2.0) /
             (3.0 * (r - 1.0) * (r + 2.0) * (3.0 * r - 2.0));
    case 3: {
      // -sin(3 pi / r) = sin(pi t) with t = 3/r - 1 = (9 - gamma) / (r (3 + r))
      const double nine_minus = 9.0 - gamma;
      const double t = nine_minus / (r * (3.0 + r));
      const double tail = (2.0 * r - 3.0) * (4.0 * r - 3.0);
      // sin(pi t) / (9 - gamma) stays finite as gamma -> 9
      const double ratio = nine_minus > 0.0 ? std::sin(kPi * t) / nine_minus : 0.0;
      return common_prefactor(gamma) * ratio / tail;
    }
    default:
      return common_prefactor(gamma) / rational_denominator(k, gamma);
  }
}

double cot_sum(double a) {
  if (!(a > 0.0)) throw DomainError("cot_sum requires a > 0");
  if (std::abs(a - std::round(a)) < 1e-12) throw PoleError("cot_sum has a pole at integer a");
  return 1.0 / (2.0 * a * a) - kPi * cot(kPi * a) / (2.0 * a);
}

double envelope_tail_closed_form(double gamma) {
  if (!(gamma > 4.0 && gamma < 9.0)) throw DomainError("closed-form tail requires gamma in (4, 9)");
  const double r = std::sqrt(gamma);
  const double c = r / (r - 1.0);
  // sum_{k>=1} [1/(k^2 - gamma) - 1/(k^2 - c^2)], then drop k = 1..4
  const double full = cot_sum(r) - cot_sum(c);
  double head = 0.0;
  for (int k = 1; k <= 4; ++k) head += 1.0 / rational_denominator(k, gamma);
  return kTailWeight * (2.0 / kPi * r / (r - 1.0) * full - common_prefactor(gamma) * head);
}

double envelope_tail_series(double gamma, long K) {
  if (!(gamma > 4.0 && gamma < 9.0)) throw DomainError("tail series requires gamma in (4, 9)");
  if (K < 5) throw DomainError("tail series needs K >= 5");
  return kTailWeight * common_prefactor(gamma) * tail_direct_sum(gamma, K);
}

EnvelopeEval envelope_E(double gamma) {
  require_gamma(gamma);
  EnvelopeEval out;
  out.gamma = gamma;
  out.summands[0] = std::sqrt(2.0) * bound_B(1, gamma);
  out.summands[1] = bound_B(2, gamma);
  out.summands[2] = std::sqrt(4.0 / 3.0) * bound_B(3, gamma);
  out.summands[3] = bound_B(4, gamma);
  if (gamma >= kClosedFormLow && gamma <= kClosedFormHigh) {
    out.summands[4] = envelope_tail_closed_form(gamma);
    out.tail_method = TailMethod::closed_form;
  } else {
    out.summands[4] = kTailWeight * common_prefactor(gamma) * tail_direct_sum(gamma, kDirectTailTerms);
    out.tail_method = TailMethod::truncated_series;
  }
  out.value = std::accumulate(out.summands.begin(), out.summands.end(), 0.0);
  return out;
}

double root_of_E() {
  double lo = 6.0;
  double hi = 7.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (envelope_E(mid).value < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace fucik
