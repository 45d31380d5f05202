#pragma once

#include <array>

namespace fucik {

/// Upper end of the working range [4, 9); the pole of B_3 at 9 is removable
/// only analytically.
inline constexpr double kGammaMax = 9.0 - 1e-9;

enum class TailMethod { closed_form, truncated_series };

struct EnvelopeEval {
  double gamma = 4.0;
  /// sqrt(2) B1, B2, sqrt(4/3) B3, B4, sqrt(6/5) sum_{k>=5} B_k
  std::array<double, 5> summands{};
  double value = 0.0;
  TailMethod tail_method = TailMethod::closed_form;
};

/// Bound on |A_k(gamma) - [k = 2]|. Exact for k = 1 and k = 3.
double bound_B(int k, double gamma);

/// E(gamma), the envelope controlling the dilated-coefficient defect.
EnvelopeEval envelope_E(double gamma);

/// Weighted tail sqrt(6/5) sum_{k>=5} B_k(gamma) through the cotangent
/// identity. Valid on (4, 9); loses digits near either end.
double envelope_tail_closed_form(double gamma);

/// The same tail truncated after K terms. gamma in (4, 9), K >= 5.
double envelope_tail_series(double gamma, long K);

/// sum_{k>=1} 1/(k^2 - a^2) = 1/(2a^2) - pi cot(pi a)/(2a).
double cot_sum(double a);

/// gamma* with E(gamma*) = 1, by bisection on [6, 7].
double root_of_E();

}  // namespace fucik
