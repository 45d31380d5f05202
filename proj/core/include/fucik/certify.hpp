#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fucik/spectrum.hpp"

namespace fucik {

enum class Mode {
  theorem1,  // N* terms are 1 - <g, phi>^2 / ||g||^2 by quadrature
  remark,    // N* terms are the explicit bounds on ||g - phi||^2
};

enum class SplitKind {
  deviating_evens,  // N = even entries off the diagonal with gamma_n < 9
  automatic,        // best threshold split over the even entries
  explicit_list,
};

struct SplitRule {
  SplitKind kind = SplitKind::deviating_evens;
  std::set<int> indices;  // used by explicit_list only
};

/// A Fucik system. Indices missing from `entries` follow the identity tail
/// rule g^n = phi_n and contribute nothing.
struct SystemSpec {
  std::map<int, FucikPoint> entries;
  SplitRule split;
  Mode mode = Mode::theorem1;
};

/// Throws InputError / DomainError when entries are inconsistent or off-curve.
void validate(const SystemSpec& spec);

enum class IndexSet { envelope, defect };  // N and N*

enum class ContributionMethod {
  identity,        // g^n = phi_n
  quadrature,      // 1 - <g, phi>^2 / ||g||^2
  explicit_bound,  // closed-form bound on ||g - phi||^2
  envelope,        // member of N, covered by E(sup gamma)
};

struct Contribution {
  int n = 1;
  FucikPoint point;
  IndexSet set = IndexSet::defect;
  ContributionMethod method = ContributionMethod::identity;
  double value = 0.0;  // added to lambda_star_sq (0 for N members)
  double gamma = 0.0;  // dilation parameter, even n only
  double rho = 1.0;    // <g, phi_n> / ||g||^2
};

struct Certificate {
  Mode mode = Mode::theorem1;
  double lambda_star_sq = 0.0;
  double sup_gamma = 4.0;
  double envelope_sq = 0.0;
  double total = 0.0;
  bool pass = true;
  std::vector<Contribution> per_index;  // ascending n

  std::set<int> envelope_indices() const;
  double margin() const { return 1.0 - total; }
  /// A fail does not rule out the Riesz property; the criterion is sufficient only.
  std::string verdict() const;
};

struct LambdaStarTerm {
  double value = 0.0;          // 1 - <g, phi>^2 / ||g||^2
  double via_distance = 0.0;   // ||g - phi||^2 - (||g||^2 - <g, phi>)^2 / ||g||^2
  double inner = 1.0;          // <g, phi_n>
  double norm_sq = 1.0;        // ||g||^2
  double distance_sq = 0.0;    // ||g - phi_n||^2
  double rho = 1.0;
};

/// Both forms of the defect term, each from its own quadrature.
LambdaStarTerm lambda_star_detail(const FucikPoint& p);

/// 1 - <g, phi_n>^2 / ||g||^2. Throws std::logic_error if the two computed
/// forms disagree by more than 1e-10.
double lambda_star_term(const FucikPoint& p);

/// Closed-form upper bound on ||g^n - phi_n||^2 (even n; odd n with
/// alpha >= n^2; odd n with beta > n^2).
double explicit_bound_Bn(const FucikPoint& p);

Certificate certify_theorem1(const SystemSpec& spec);

struct OperatorTerm {
  double coefficient_bound = 0.0;  // c_k
  double norm_bound = 0.0;         // t_k
};

struct CriterionResult {
  double value = 0.0;
  bool pass = false;
};

/// Lambda*^2 + sum_m (sum_k c_k t_k)^2 against 1 (strict).
CriterionResult generic_criterion(double lambda_star,
                                  std::span<const std::vector<OperatorTerm>> families);

/// Admissible sup for c_n in the odd-index corollary:
/// (1 - E(s)^2) / (45 ((1 - 2^-(1+eps)) zeta(1+eps) - 1)).
double corollary_cn_bound(double epsilon, double sup_even_gamma);

/// Riemann zeta for real s > 1.
double zeta(double s);

std::string to_string(Mode m);
std::string to_string(ContributionMethod m);

}  // namespace fucik
