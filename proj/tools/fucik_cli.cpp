// fucik: certification, envelope and figure-data tool for normalized Fucik
// systems of the Dirichlet Laplacian on (0, pi).
//
// Exit codes: 0 success / certified, 1 not certified, 2 input error.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fucik/certify.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/envelope.hpp"
#include "fucik/errors.hpp"
#include "fucik/fourier.hpp"
#include "fucik/gram.hpp"
#include "fucik/region.hpp"
#include "fucik/system_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitInputError = 2;

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fucik::InputError("cannot write '" + path + "'");
  out << content;
}

void emit(const std::string& csv_path, const std::string& content) {
  if (csv_path.empty()) {
    std::cout << content;
  } else {
    write_file(csv_path, content);
  }
}

struct Options {
  std::string spec;
  std::string mode;
  std::string split;
  std::string csv;
  std::string svg;
  double gamma = 0.0;
  double sup = 0.0;
  double epsilon = 0.5;
  int figure = 2;
  int nmax = 20;
  int resolution = 64;
  int n = 0;
  std::optional<double> alpha;
  std::optional<double> beta;
  bool matrix = false;
};

fucik::SystemSpec load_with_overrides(const Options& o) {
  auto spec = fucik::load_system_spec(o.spec);
  if (!o.mode.empty()) spec.mode = fucik::parse_mode(o.mode);
  if (!o.split.empty()) spec.split = fucik::parse_split(o.split);
  fucik::validate(spec);
  return spec;
}

int run_certify(const Options& o) {
  const auto cert = fucik::certify_theorem1(load_with_overrides(o));
  std::cout << fucik::serialize(cert).dump(2) << '\n';
  return cert.pass ? kExitOk : kExitNotCertified;
}

int run_eval_e(const Options& o) {
  const auto e = fucik::envelope_E(o.gamma);
  static const char* names[] = {"sqrt2_B1", "B2", "sqrt4_3_B3", "B4", "sqrt6_5_tail"};
  std::cout << "gamma " << num(e.gamma) << '\n';
  for (std::size_t i = 0; i < e.summands.size(); ++i) std::cout << names[i] << ' ' << num(e.summands[i]) << '\n';
  std::cout << "tail_method " << (e.tail_method == fucik::TailMethod::closed_form ? "closed-form" : "truncated-series")
            << '\n';
  std::cout << "E " << num(e.value) << '\n';
  return kExitOk;
}

int run_root_e() {
  std::cout << num(fucik::root_of_E()) << '\n';
  return kExitOk;
}

int run_coeffs(const Options& o) {
  if (o.nmax < 1) throw fucik::InputError("--nmax must be >= 1");
  const auto point = fucik::gamma2_point(o.gamma, fucik::Branch::alpha_major);
  std::ostringstream os;
  os << "k,A_k,At_k,quadrature,abs_diff\n";
  for (int k = 1; k <= o.nmax; ++k) {
    const double a = fucik::coefficient({o.gamma, k, fucik::Branch::alpha_major});
    const double at = fucik::coefficient({o.gamma, k, fucik::Branch::beta_major});
    const double q = fucik::quadrature_coefficient(point, k);
    os << k << ',' << num(a) << ',' << num(at) << ',' << num(q) << ',' << num(std::abs(a - q)) << '\n';
  }
  emit(o.csv, os.str());
  return kExitOk;
}

int run_gram(const Options& o) {
  if (o.n < 1) throw fucik::InputError("--n must be >= 1");
  const auto spec = load_with_overrides(o);
  const auto w = fucik::gram_witness(spec, o.n);
  std::cout << fucik::serialize(w).dump(2) << '\n';
  if (!o.csv.empty()) {
    const auto m = fucik::gram_matrix(spec, o.n, true);
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << num(m(i, j));
      os << '\n';
    }
    write_file(o.csv, os.str());
  }
  return kExitOk;
}

int run_region(const Options& o) {
  fucik::RegionRequest req;
  if (o.figure == 1) {
    req.figure = fucik::Figure::odd_segments;
  } else if (o.figure == 2) {
    req.figure = fucik::Figure::even_sector;
  } else {
    throw fucik::InputError("--figure must be 1 or 2");
  }
  req.sup_even_gamma = o.sup;
  req.epsilon = o.epsilon;
  req.n_max = o.nmax;
  req.resolution = o.resolution;
  const auto data = fucik::emit_region(req);
  emit(o.csv, fucik::region_csv(data));
  if (!o.svg.empty()) write_file(o.svg, fucik::region_svg(data));
  return kExitOk;
}

int run_dump(const Options& o) {
  fucik::FucikPoint p{o.n, 1.0, 1.0};
  if (o.n < 1) throw fucik::InputError("--n must be >= 1");
  if (o.n > 1) {
    if (o.alpha && o.beta) {
      p.alpha = *o.alpha;
      p.beta = *o.beta;
    } else if (o.alpha) {
      p = fucik::point_on_curve(o.n, *o.alpha);
    } else if (o.beta) {
      p.beta = *o.beta;
      p.alpha = fucik::solve_alpha(o.n, *o.beta);
    } else {
      throw fucik::InputError("dump needs --alpha or --beta for n > 1");
    }
  }
  std::cout << fucik::serialize(fucik::build(p)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fucik eigenfunction systems: Riesz-basis certification, envelope E(gamma), figure data"};
  app.require_subcommand(1);
  Options o;
  int (*dispatch)(const Options&) = nullptr;

  auto* certify = app.add_subcommand("certify", "Certify a Fucik system (exit 0 certified, 1 not certified)");
  certify->add_option("--spec", o.spec, "System spec JSON file")->required();
  certify->add_option("--mode", o.mode, "theorem1 | remark (overrides the spec)");
  certify->add_option("--split", o.split, "default | auto | comma-separated even indices");
  certify->callback([&] { dispatch = run_certify; });

  auto* eval_e = app.add_subcommand("eval-e", "Print the five summands of E(gamma) and the total");
  eval_e->add_option("--gamma", o.gamma, "Dilation parameter in [4, 9)")->required();
  eval_e->callback([&] { dispatch = run_eval_e; });

  auto* root_e = app.add_subcommand("root-e", "Print gamma* with E(gamma*) = 1");
  root_e->callback([&] { dispatch = [](const Options&) { return run_root_e(); }; });

  auto* coeffs = app.add_subcommand("coeffs", "CSV of k, A_k, reflected A_k and the quadrature check");
  coeffs->add_option("--gamma", o.gamma, "Dilation parameter in [4, 9)")->required();
  coeffs->add_option("--nmax", o.nmax, "Number of coefficients")->capture_default_str();
  coeffs->add_option("--csv", o.csv, "Output path (stdout if omitted)");
  coeffs->callback([&] { dispatch = run_coeffs; });

  auto* gram = app.add_subcommand("gram", "Truncated Gram-matrix witness of the Riesz bounds");
  gram->add_option("--spec", o.spec, "System spec JSON file")->required();
  gram->add_option("--n", o.n, "Truncation size")->required();
  gram->add_option("--csv", o.csv, "Also write the rescaled matrix as CSV");
  gram->add_option("--mode", o.mode, "theorem1 | remark (overrides the spec)");
  gram->add_option("--split", o.split, "default | auto | comma-separated even indices");
  gram->callback([&] { dispatch = run_gram; });

  auto* region = app.add_subcommand("region", "Region figure data (CSV, optional SVG)");
  region->add_option("--figure", o.figure, "2: even sector only; 1: with odd segments")->capture_default_str();
  region->add_option("--sup", o.sup, "sup of 4 max(alpha, beta)/n^2 over even n")->required();
  region->add_option("--epsilon", o.epsilon, "Decay exponent for odd segments (figure 1)")->capture_default_str();
  region->add_option("--nmax", o.nmax, "Largest index drawn")->capture_default_str();
  region->add_option("--resolution", o.resolution, "Points per arc")->capture_default_str();
  region->add_option("--csv", o.csv, "CSV output path (stdout if omitted)");
  region->add_option("--svg", o.svg, "SVG output path");
  region->callback([&] { dispatch = run_region; });

  auto* dump = app.add_subcommand("dump", "Bump list of a normalized eigenfunction as JSON");
  dump->add_option("--n", o.n, "Curve index")->required();
  dump->add_option("--alpha", o.alpha, "alpha (beta solved if omitted)");
  dump->add_option("--beta", o.beta, "beta (alpha solved if omitted)");
  dump->callback([&] { dispatch = run_dump; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return dispatch(o);
  } catch (const fucik::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const fucik::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
  } catch (const fucik::QuadratureError& e) {
    std::cerr << "quadrature error: " << e.what() << '\n';
  }
  return kExitInputError;
}
