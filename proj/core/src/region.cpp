#include "fucik/region.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "fucik/certify.hpp"
#include "fucik/envelope.hpp"
#include "fucik/errors.hpp"
#include "fucik/spectrum.hpp"

namespace fucik {
namespace {

void append_arc(std::vector<RegionPoint>& out, const std::string& id, int n, double alpha_lo,
                double alpha_hi, int resolution) {
  if (!(alpha_hi > alpha_lo)) {
    const double sq = double(n) * n;
    out.push_back({id, sq, sq});
    return;
  }
  for (int i = 0; i < resolution; ++i) {
    const double t = static_cast<double>(i) / (resolution - 1);
    // hit both ends exactly
    const double alpha = i == resolution - 1 ? alpha_hi : alpha_lo + t * (alpha_hi - alpha_lo);
    out.push_back({id, alpha, solve_beta(n, alpha)});
  }
}

std::string fmt12(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

RegionData emit_region(const RegionRequest& req) {
  static const double root = root_of_E();
  const double s = req.sup_even_gamma;
  if (!(s >= 4.0 && s <= root)) throw DomainError("sup_even_gamma must lie in [4, gamma*]");
  if (req.n_max < 2) throw DomainError("n_max must be >= 2");
  if (req.resolution < 2) throw DomainError("resolution must be >= 2");
  if (req.figure == Figure::odd_segments && !(req.epsilon > 0.0)) {
    throw DomainError("epsilon must be positive");
  }

  RegionData data;
  data.request = req;
  const double r = std::sqrt(s);
  data.sector_slope = 1.0 / ((r - 1.0) * (r - 1.0));

  std::vector<RegionPoint> arcs;
  double extent = 0.0;
  for (int n = 2; n <= req.n_max; n += 2) {
    // endpoints of the clipped arc are (s n^2/4, slope * s n^2/4) and its mirror
    const double a_hi = s * n * n / 4.0;
    const double a_lo = a_hi * data.sector_slope;
    append_arc(arcs, "gamma_" + std::to_string(n), n, a_lo, a_hi, req.resolution);
    extent = std::max(extent, a_hi);
  }
  if (req.figure == Figure::odd_segments) {
    const double c = corollary_cn_bound(req.epsilon, s);
    data.odd_cn = c;
    for (int n = 3; n <= req.n_max; n += 2) {
      const double cap = std::pow(n + std::sqrt(c) * std::pow(double(n), (1.0 - req.epsilon) / 2.0), 2);
      // beta = cap at the lower end, alpha = cap at the upper end
      append_arc(arcs, "odd_" + std::to_string(n), n, solve_alpha(n, cap), cap, req.resolution);
      extent = std::max(extent, cap);
    }
  }

  extent *= 1.1;
  if (s == 4.0) {
    data.points.push_back({"sector_lower", 0.0, 0.0});
    data.points.push_back({"sector_lower", extent, extent});
    data.points.push_back({"sector_upper", 0.0, 0.0});
    data.points.push_back({"sector_upper", extent, extent});
  } else {
    data.points.push_back({"sector_lower", 0.0, 0.0});
    data.points.push_back({"sector_lower", extent, extent * data.sector_slope});
    data.points.push_back({"sector_upper", 0.0, 0.0});
    data.points.push_back({"sector_upper", extent * data.sector_slope, extent});
  }
  data.points.insert(data.points.end(), arcs.begin(), arcs.end());
  return data;
}

std::string region_csv(const RegionData& data) {
  std::ostringstream os;
  os << "curve_id,alpha,beta\n";
  for (const auto& p : data.points) os << p.curve_id << ',' << fmt12(p.alpha) << ',' << fmt12(p.beta) << '\n';
  return os.str();
}

std::string region_svg(const RegionData& data) {
  constexpr double size = 480.0;
  constexpr double margin = 40.0;
  double extent = 1.0;
  for (const auto& p : data.points) extent = std::max({extent, p.alpha, p.beta});
  const auto sx = [&](double a) { return margin + a / extent * (size - 2 * margin); };
  const auto sy = [&](double b) { return size - margin - b / extent * (size - 2 * margin); };

  std::vector<std::string> order;
  std::map<std::string, std::vector<const RegionPoint*>> curves;
  for (const auto& p : data.points) {
    if (!curves.contains(p.curve_id)) order.push_back(p.curve_id);
    curves[p.curve_id].push_back(&p);
  }

  std::ostringstream os;
  os << std::setprecision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(extent) << "\" y2=\"" << sy(0)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(extent)
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << size - margin << "\" y=\"" << size - margin / 3 << "\">alpha</text>\n";
  os << "<text x=\"" << margin / 4 << "\" y=\"" << margin - 8 << "\">beta</text>\n";

  // shaded sector between the two boundary lines
  if (curves.contains("sector_lower") && curves.contains("sector_upper")) {
    const auto* lo = curves["sector_lower"].back();
    const auto* hi = curves["sector_upper"].back();
    os << "<polygon points=\"" << sx(0) << ',' << sy(0) << ' ' << sx(lo->alpha) << ',' << sy(lo->beta)
       << ' ' << sx(hi->alpha) << ',' << sy(hi->beta) << "\" fill=\"#dddddd\" stroke=\"none\"/>\n";
  }
  for (const auto& id : order) {
    const auto& pts = curves[id];
    const bool boundary = id.rfind("sector", 0) == 0;
    if (pts.size() == 1) {
      os << "<circle cx=\"" << sx(pts[0]->alpha) << "\" cy=\"" << sy(pts[0]->beta)
         << "\" r=\"3\" fill=\"black\"><title>" << id << "</title></circle>\n";
      continue;
    }
    os << "<polyline fill=\"none\" stroke=\"" << (boundary ? "#555555" : "black") << "\" stroke-width=\""
       << (boundary ? 1 : 2.5) << "\" points=\"";
    for (const auto* p : pts) os << sx(p->alpha) << ',' << sy(p->beta) << ' ';
    os << "\"><title>" << id << "</title></polyline>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fucik
