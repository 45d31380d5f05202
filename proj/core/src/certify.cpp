#include "fucik/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fucik/eigenfunction.hpp"
#include "fucik/envelope.hpp"
#include "fucik/errors.hpp"
#include "fucik/quadrature.hpp"
#include "parallel.hpp"

namespace fucik {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityCheckTolerance = 1e-10;
constexpr long kZetaTerms = 1000000;

// Everything certify needs to know about one explicit entry, before the split.
struct EntryEvaluation {
  Contribution record;
  double defect = 0.0;  // value this entry adds if it ends up in N*
  bool even_candidate = false;
};

EntryEvaluation evaluate_entry(const FucikPoint& p, Mode mode) {
  EntryEvaluation e;
  e.record.n = p.n;
  e.record.point = p;
  if (p.n % 2 == 0) e.record.gamma = dilation_parameter(p);
  if (p.n == 1 || is_symmetric(p)) {
    e.record.gamma = p.n % 2 == 0 ? 4.0 : 0.0;
    return e;
  }
  const auto detail = lambda_star_detail(p);
  e.record.rho = detail.rho;
  if (mode == Mode::theorem1) {
    e.defect = detail.value;
    e.record.method = ContributionMethod::quadrature;
  } else {
    e.defect = explicit_bound_Bn(p);
    e.record.method = ContributionMethod::explicit_bound;
  }
  e.even_candidate = p.n % 2 == 0 && e.record.gamma <= kGammaMax;
  return e;
}

double envelope_squared(double sup_gamma) {
  const double e = envelope_E(sup_gamma).value;
  return e * e;
}

// Indices (into evals) forming N for the automatic split. N is always
// {gamma_n <= threshold}: anything above the threshold must leave N, and
// anything below it only adds a nonnegative term if moved. Scanning the
// thresholds therefore finds the optimum over all subsets of the candidates.
std::set<int> automatic_split(const std::vector<EntryEvaluation>& evals) {
  std::vector<const EntryEvaluation*> cands;
  for (const auto& e : evals) {
    if (e.even_candidate) cands.push_back(&e);
  }
  std::stable_sort(cands.begin(), cands.end(), [](const auto* a, const auto* b) {
    return a->record.gamma > b->record.gamma;
  });

  std::size_t best_j = 0;
  double best_total = 0.0;
  double moved = 0.0;
  for (std::size_t j = 0; j <= cands.size(); ++j) {
    const double env = j < cands.size() ? envelope_squared(cands[j]->record.gamma) : 0.0;
    const double total = moved + env;
    if (j == 0 || total < best_total) {
      best_total = total;
      best_j = j;
    }
    if (j < cands.size()) moved += cands[j]->defect;
  }
  std::set<int> out;
  for (std::size_t j = best_j; j < cands.size(); ++j) out.insert(cands[j]->record.n);
  return out;
}

}  // namespace

void validate(const SystemSpec& spec) {
  for (const auto& [n, p] : spec.entries) {
    if (n != p.n) throw InputError("entry key " + std::to_string(n) + " does not match its point");
    validate(p);
  }
  if (spec.split.kind != SplitKind::explicit_list) return;
  for (int n : spec.split.indices) {
    if (n < 2 || n % 2 != 0) {
      throw InputError("split index " + std::to_string(n) + " is not an even index >= 2");
    }
    auto it = spec.entries.find(n);
    if (it == spec.entries.end()) {
      throw InputError("split index " + std::to_string(n) + " has no entry");
    }
    if (dilation_parameter(it->second) > kGammaMax) {
      throw DomainError("split index " + std::to_string(n) + " has dilation parameter >= 9");
    }
  }
}

std::set<int> Certificate::envelope_indices() const {
  std::set<int> out;
  for (const auto& c : per_index) {
    if (c.set == IndexSet::envelope) out.insert(c.n);
  }
  return out;
}

std::string Certificate::verdict() const {
  if (pass) return "certified: Riesz basis of L^2(0, pi)";
  return "not certified: sufficient criterion not met (no conclusion about basisness)";
}

LambdaStarTerm lambda_star_detail(const FucikPoint& p) {
  validate(p);
  LambdaStarTerm t;
  if (p.n == 1 || is_symmetric(p)) return t;
  const auto g = build(p);
  t.inner = inner_with_basis(g, p.n);
  t.norm_sq = norm_squared(g);
  t.distance_sq = distance_squared_to_basis(g, p.n);
  t.value = 1.0 - t.inner * t.inner / t.norm_sq;
  const double gap = t.norm_sq - t.inner;
  t.via_distance = t.distance_sq - gap * gap / t.norm_sq;
  t.rho = t.inner / t.norm_sq;
  return t;
}

double lambda_star_term(const FucikPoint& p) {
  const auto t = lambda_star_detail(p);
  if (std::abs(t.value - t.via_distance) > kIdentityCheckTolerance) {
    throw std::logic_error("defect identity violated for n = " + std::to_string(p.n));
  }
  return t.value;
}

double explicit_bound_Bn(const FucikPoint& p) {
  validate(p);
  if (p.n == 1) return 0.0;
  const double n = p.n;
  const double n2 = n * n;
  if (p.n % 2 == 0) {
    const double d = std::max(std::sqrt(p.alpha), std::sqrt(p.beta)) - n;
    return 8.0 * (3.0 + kPi * kPi) / 9.0 * d * d / n2;
  }
  if (p.alpha >= n2) {
    const double d = std::sqrt(p.alpha) - n;
    return 8.0 * n2 * (n2 + 1.0) / std::pow(n - 1.0, 4) * d * d / n2;
  }
  const double d = std::sqrt(p.beta) - n;
  return 10.0 * n2 * (n2 + 1.0) / std::pow(n + 1.0, 4) * d * d / n2;
}

Certificate certify_theorem1(const SystemSpec& spec) {
  validate(spec);

  std::vector<FucikPoint> points;
  points.reserve(spec.entries.size());
  for (const auto& [n, p] : spec.entries) points.push_back(p);

  std::vector<EntryEvaluation> evals(points.size());
  detail::parallel_for(points.size(),
                       [&](std::size_t i) { evals[i] = evaluate_entry(points[i], spec.mode); });

  std::set<int> envelope_set;
  switch (spec.split.kind) {
    case SplitKind::deviating_evens:
      for (const auto& e : evals) {
        if (e.even_candidate) envelope_set.insert(e.record.n);
      }
      break;
    case SplitKind::explicit_list:
      envelope_set = spec.split.indices;
      break;
    case SplitKind::automatic:
      envelope_set = automatic_split(evals);
      break;
  }

  Certificate cert;
  cert.mode = spec.mode;
  cert.per_index.reserve(evals.size());
  for (auto& e : evals) {  // ascending n
    Contribution c = e.record;
    if (envelope_set.contains(c.n)) {
      c.set = IndexSet::envelope;
      c.method = ContributionMethod::envelope;
      c.value = 0.0;
      cert.sup_gamma = std::max(cert.sup_gamma, c.gamma);
    } else {
      c.set = IndexSet::defect;
      c.value = e.defect;
      cert.lambda_star_sq += c.value;
    }
    cert.per_index.push_back(c);
  }
  cert.envelope_sq = envelope_squared(cert.sup_gamma);
  cert.total = cert.lambda_star_sq + cert.envelope_sq;
  cert.pass = cert.total < 1.0;
  return cert;
}

CriterionResult generic_criterion(double lambda_star,
                                  std::span<const std::vector<OperatorTerm>> families) {
  CriterionResult r;
  r.value = lambda_star * lambda_star;
  for (const auto& family : families) {
    double lambda_m = 0.0;
    for (const auto& term : family) {
      if (term.coefficient_bound < 0.0 || term.norm_bound < 0.0) {
        throw DomainError("operator bounds must be nonnegative");
      }
      lambda_m += term.coefficient_bound * term.norm_bound;
    }
    r.value += lambda_m * lambda_m;
  }
  r.pass = r.value < 1.0;
  return r;
}

double zeta(double s) {
  if (!(s > 1.0)) throw DomainError("zeta requires s > 1");
  const double big_n = static_cast<double>(kZetaTerms);
  double sum = 0.0;
  for (long k = kZetaTerms - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  // Euler-Maclaurin remainder for sum_{k >= N} k^-s
  const double n_s = std::pow(big_n, -s);
  sum += big_n * n_s / (s - 1.0) + 0.5 * n_s + s * n_s / (12.0 * big_n) -
         s * (s + 1.0) * (s + 2.0) * n_s / (720.0 * big_n * big_n * big_n);
  return sum;
}

double corollary_cn_bound(double epsilon, double sup_even_gamma) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  static const double root = root_of_E();
  if (!(sup_even_gamma >= 4.0 && sup_even_gamma < root)) {
    throw DomainError("sup of even dilation parameters must lie in [4, gamma*)");
  }
  const double e = envelope_E(sup_even_gamma).value;
  const double s = 1.0 + epsilon;
  const double odd_sum = (1.0 - std::pow(2.0, -s)) * zeta(s) - 1.0;
  return (1.0 - e * e) / (45.0 * odd_sum);
}

std::string to_string(Mode m) { return m == Mode::theorem1 ? "theorem1" : "remark"; }

std::string to_string(ContributionMethod m) {
  switch (m) {
    case ContributionMethod::identity:
      return "identity";
    case ContributionMethod::quadrature:
      return "quadrature";
    case ContributionMethod::explicit_bound:
      return "explicit-bound";
    case ContributionMethod::envelope:
      return "envelope";
  }
  return "unknown";
}

}  // namespace fucik
