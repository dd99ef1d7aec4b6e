#pragma once

#include "projlab/cloud.hpp"
#include "projlab/tube.hpp"

namespace projlab {

std::vector<std::array<double, 2>> project_cloud(const NumericFamily& nf,
                                                 const PointCloud& cloud, double t);
std::vector<std::array<double, 2>> project_cloud(const FamilySpec& f,
                                                 const PointCloud& cloud, double t);

/// Box-counting dimension estimate over a dyadic scale ladder.
struct DimEstimate {
  double t = 0.0;
  std::vector<std::pair<double, std::int64_t>> counts;  // (scale, occupied boxes)
  double slope = 0.0;   // clamped to [0, 2]
  double r2 = 1.0;
  bool dropped_finest = false;
};

/// Least-squares slope of log(occupied dyadic squares) against log(1/scale);
/// needs >= 4 scales (TooFewScales otherwise). The finest scale is dropped
/// from the fit when its count saturates at the point count.
DimEstimate box_dimension(const std::vector<std::array<double, 2>>& pts,
                          const std::vector<double>& scales);

/// Default dyadic scale ladder 2^-3 .. 2^-k_max.
std::vector<double> dyadic_scales(int k_min, int k_max);

struct ExceptionReport {
  double a_threshold = 0.0;
  std::vector<double> t_samples;
  std::vector<double> slopes;            // per sample
  std::vector<std::uint8_t> flagged;     // slope < a
  double measure_estimate = 0.0;         // spacing * #flagged
};

/// Projects the cloud at each t on a grid of the given spacing, estimates the
/// box dimension, and flags samples below the threshold a.
ExceptionReport exceptional_scan(const FamilySpec& f, const PointCloud& cloud, double a,
                                 double t_spacing, const std::vector<double>& scales);

}  // namespace projlab
