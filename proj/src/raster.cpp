#include "projlab/raster.hpp"

#include <algorithm>
#include <cmath>

#include "projlab/errors.hpp"

namespace projlab {

namespace {

std::vector<std::pair<int, int>> disc_mask(double radius_cells) {
  std::vector<std::pair<int, int>> offs;
  int r = static_cast<int>(std::floor(radius_cells)) + 1;
  double r2 = radius_cells * radius_cells;
  for (int a = -r; a <= r; ++a)
    for (int b = -r; b <= r; ++b)
      if (a * a + b * b <= r2) offs.emplace_back(a, b);
  return offs;
}

template <class Emit>
void walk_tube_cells(const NumericFamily& nf, const Tube& tube, double delta_grid,
                     Emit&& emit) {
  const int n = grid_dims(delta_grid);
  const auto z = tube.label.z4();
  const double speed = nf.speed_bound(z);
  const double stride = delta_grid / std::max(4.0, speed);
  const auto mask = disc_mask((tube.delta + 1.75 * delta_grid) / delta_grid);

  const double t_end = tube.alpha0 + tube.lambda;
  int last_it = -1, last_i1 = 0, last_i2 = 0;
  bool have_last = false;
  double t = tube.alpha0;
  while (true) {
    auto y = nf.phi(z, t);
    int it = static_cast<int>(std::floor(t / delta_grid));
    if (t >= 1.0) it = n - 1;  // the closed endpoint t = 1 belongs to the last cell
    int i1 = static_cast<int>(std::floor(y[0] / delta_grid));
    int i2 = static_cast<int>(std::floor(y[1] / delta_grid));
    if (!have_last || it != last_it || i1 != last_i1 || i2 != last_i2) {
      have_last = true;
      last_it = it;
      last_i1 = i1;
      last_i2 = i2;
      if (it >= 0 && it < n) {
        for (auto [a, b] : mask) {
          int c1 = i1 + a, c2 = i2 + b;
          if (c1 >= 0 && c1 < n && c2 >= 0 && c2 < n)
            emit((static_cast<std::int64_t>(it) * n + c1) * n + c2);
        }
      }
    }
    if (t >= t_end) break;
    t = std::min(t + stride, t_end);
  }
}

}  // namespace

std::vector<std::int64_t> rasterize_tube(const NumericFamily& nf, const Tube& tube,
                                         double delta_grid) {
  std::vector<std::int64_t> cells;
  walk_tube_cells(nf, tube, delta_grid, [&](std::int64_t c) { cells.push_back(c); });
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

Grid3 accumulate_field_serial(const NumericFamily& nf, const std::vector<Tube>& tubes,
                              double delta) {
  for (const Tube& t : tubes)
    if (t.delta != delta)
      throw Error(ErrorCode::MixedDelta, "tube delta differs from the field delta");
  Grid3 g(delta);
  for (const Tube& t : tubes)
    for (std::int64_t c : rasterize_tube(nf, t, delta))
      ++g.counts[static_cast<std::size_t>(c)];
  return g;
}

Grid3 accumulate_field(const NumericFamily& nf, const std::vector<Tube>& tubes,
                       double delta) {
  for (const Tube& t : tubes)
    if (t.delta != delta)
      throw Error(ErrorCode::MixedDelta, "tube delta differs from the field delta");
  Grid3 g(delta);
  const std::int64_t m = static_cast<std::int64_t>(tubes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < m; ++i) {
    auto cells = rasterize_tube(nf, tubes[static_cast<std::size_t>(i)], delta);
    for (std::int64_t c : cells) {
#pragma omp atomic
      ++g.counts[static_cast<std::size_t>(c)];
    }
  }
  return g;
}

FieldIndex build_field_index(const NumericFamily& nf, const std::vector<Tube>& tubes,
                             double delta) {
  FieldIndex idx;
  idx.delta = delta;
  idx.n = grid_dims(delta);
  const std::int64_t m = static_cast<std::int64_t>(tubes.size());

  std::vector<std::vector<std::int64_t>> rasters(tubes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < m; ++i)
    rasters[static_cast<std::size_t>(i)] = rasterize_tube(nf, tubes[static_cast<std::size_t>(i)], delta);

  std::vector<std::pair<std::int64_t, std::int32_t>> pairs;
  std::size_t total = 0;
  for (const auto& r : rasters) total += r.size();
  pairs.reserve(total);
  for (std::size_t i = 0; i < rasters.size(); ++i)
    for (std::int64_t c : rasters[i]) pairs.emplace_back(c, static_cast<std::int32_t>(i));
  std::sort(pairs.begin(), pairs.end());

  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j].first == pairs[i].first) ++j;
    idx.cells.push_back(pairs[i].first);
    idx.offsets.push_back(static_cast<std::int32_t>(idx.tube_ids.size()));
    for (std::size_t k = i; k < j; ++k) idx.tube_ids.push_back(pairs[k].second);
    i = j;
  }
  idx.offsets.push_back(static_cast<std::int32_t>(idx.tube_ids.size()));

  // Tangent cache: unit-speed direction of each tube's center curve at each
  // t-slice midpoint (wedge uses normalized vectors anyway).
  idx.tangents.assign(tubes.size(), {});
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    auto& row = idx.tangents[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(idx.n));
    const auto z = tubes[static_cast<std::size_t>(i)].label.z4();
    for (int s = 0; s < idx.n; ++s)
      row[static_cast<std::size_t>(s)] = nf.tangent(z, (s + 0.5) * delta);
  }
  return idx;
}

}  // namespace projlab
