#include "projlab/projscan.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "projlab/errors.hpp"
#include "projlab/experiment.hpp"

namespace projlab {

std::vector<std::array<double, 2>> project_cloud(const NumericFamily& nf,
                                                 const PointCloud& cloud, double t) {
  std::vector<std::array<double, 2>> out(cloud.points.size());
  const std::int64_t n = static_cast<std::int64_t>(cloud.points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = nf.phi(cloud.points[static_cast<std::size_t>(i)], t);
  return out;
}

std::vector<std::array<double, 2>> project_cloud(const FamilySpec& f,
                                                 const PointCloud& cloud, double t) {
  return project_cloud(NumericFamily(f), cloud, t);
}

std::vector<double> dyadic_scales(int k_min, int k_max) {
  std::vector<double> s;
  for (int k = k_min; k <= k_max; ++k) s.push_back(std::ldexp(1.0, -k));
  return s;
}

namespace {

std::int64_t occupied_boxes(const std::vector<std::array<double, 2>>& pts, double scale) {
  std::unordered_set<std::int64_t> boxes;
  boxes.reserve(pts.size());
  for (const auto& p : pts) {
    // Shift by 4 units so projections slightly outside [0,1]^2 stay countable.
    auto ix = static_cast<std::int64_t>(std::floor((p[0] + 4.0) / scale));
    auto iy = static_cast<std::int64_t>(std::floor((p[1] + 4.0) / scale));
    boxes.insert((ix << 26) ^ iy);
  }
  return static_cast<std::int64_t>(boxes.size());
}

}  // namespace

DimEstimate box_dimension(const std::vector<std::array<double, 2>>& pts,
                          const std::vector<double>& scales) {
  if (scales.size() < 4)
    throw Error(ErrorCode::TooFewScales, "box_dimension needs at least 4 scales");
  DimEstimate est;
  for (double s : scales) est.counts.emplace_back(s, occupied_boxes(pts, s));
  std::sort(est.counts.begin(), est.counts.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<std::array<double, 2>> xy;
  for (std::size_t i = 0; i < est.counts.size(); ++i) {
    auto [s, c] = est.counts[i];
    if (i + 1 == est.counts.size() && c == static_cast<std::int64_t>(pts.size()) &&
        est.counts.size() > 4) {
      est.dropped_finest = true;  // saturated tail carries no scaling signal
      continue;
    }
    xy.push_back({std::log(1.0 / s), std::log(static_cast<double>(std::max<std::int64_t>(c, 1)))});
  }
  ScalingFit fit = fit_linear(xy);
  est.slope = std::min(2.0, std::max(0.0, fit.slope));
  est.r2 = fit.r2;
  return est;
}

ExceptionReport exceptional_scan(const FamilySpec& f, const PointCloud& cloud, double a,
                                 double t_spacing, const std::vector<double>& scales) {
  if (a < 0.0 || a > 2.0)
    throw Error(ErrorCode::InvariantViolation, "threshold a must lie in [0, 2]");
  NumericFamily nf(f);
  ExceptionReport rep;
  rep.a_threshold = a;
  const int samples = std::max(1, static_cast<int>(std::floor(1.0 / t_spacing + 1e-9)));
  rep.t_samples.resize(static_cast<std::size_t>(samples));
  rep.slopes.resize(static_cast<std::size_t>(samples));
  rep.flagged.resize(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j)
    rep.t_samples[static_cast<std::size_t>(j)] = (j + 0.5) * t_spacing;

#pragma omp parallel for schedule(dynamic, 1)
  for (int j = 0; j < samples; ++j) {
    double t = rep.t_samples[static_cast<std::size_t>(j)];
    std::vector<std::array<double, 2>> img(cloud.points.size());
    for (std::size_t i = 0; i < cloud.points.size(); ++i) img[i] = nf.phi(cloud.points[i], t);
    DimEstimate est = box_dimension(img, scales);
    rep.slopes[static_cast<std::size_t>(j)] = est.slope;
    rep.flagged[static_cast<std::size_t>(j)] = est.slope < a ? 1 : 0;
  }
  std::int64_t nf_count = 0;
  for (auto fl : rep.flagged) nf_count += fl;
  rep.measure_estimate = t_spacing * static_cast<double>(nf_count);
  return rep;
}

}  // namespace projlab
