#pragma once

#include <string>
#include <vector>

namespace fucik {

enum class Figure {
  even_sector,   // even indices in the sector, odd indices fixed at phi_n
  odd_segments,  // additionally admissible odd segments around (n^2, n^2)
};

struct RegionRequest {
  Figure figure = Figure::even_sector;
  double sup_even_gamma = 4.0;
  double epsilon = 0.5;  // odd_segments only
  int n_max = 6;
  int resolution = 64;
};

struct RegionPoint {
  std::string curve_id;
  double alpha = 0.0;
  double beta = 0.0;
};

struct RegionData {
  RegionRequest request;
  double sector_slope = 1.0;  // (sqrt(s) - 1)^-2
  double odd_cn = 0.0;        // c_n bound used for the odd segments
  std::vector<RegionPoint> points;
};

/// Sector boundaries beta = slope * alpha and alpha = slope * beta, the
/// Gamma_n arcs of even n <= n_max clipped to the sector, and for
/// odd_segments the odd arcs with max(alpha, beta) <= (n + sqrt(c) n^((1-eps)/2))^2.
/// s = 4 yields the degenerate points (n^2, n^2).
RegionData emit_region(const RegionRequest& req);

/// Columns: curve_id,alpha,beta; 12 significant digits.
std::string region_csv(const RegionData& data);

/// Static polyline plot of the same data.
std::string region_svg(const RegionData& data);

}  // namespace fucik
