#include "projlab/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "projlab/errors.hpp"
#include "projlab/grid.hpp"

namespace projlab {

namespace {

std::uint64_t pack_cell(const std::array<int, 4>& c) {
  std::uint64_t k = 0;
  for (int i = 0; i < 4; ++i)
    k = (k << 16) | static_cast<std::uint64_t>(static_cast<std::uint16_t>(c[static_cast<std::size_t>(i)] + 8));
  return k;
}

PointCloud uniform_cloud(double delta, double s, std::uint64_t seed) {
  if (s <= 0.0 || s > 4.0)
    throw Error(ErrorCode::InfeasibleExponent, "uniform generator needs s in (0,4]");
  const double h = std::pow(delta, s / 4.0);
  const int m = std::max(1, static_cast<int>(std::floor(1.0 / h + 1e-9)));
  double jitter = std::max(0.0, std::min(0.1 * h, (h - delta) / 2.0));
  Rng rng(seed);
  PointCloud cloud;
  cloud.delta = delta;
  cloud.s_target = s;
  cloud.seed = seed;
  cloud.generator = "uniform";
  cloud.points.reserve(static_cast<std::size_t>(m) * m * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          std::array<double, 4> p{(a + 0.5) * h, (b + 0.5) * h, (c + 0.5) * h,
                                  (d + 0.5) * h};
          for (auto& x : p) x += jitter * (2.0 * rng.u01() - 1.0);
          cloud.points.push_back(p);
        }
  return cloud;
}

PointCloud plane_cloud(const PlaneGen& g, double delta, std::uint64_t seed,
                       const char* tag) {
  // Orthonormalize the spanning pair so in-plane separation transfers to R^4.
  auto dot = [](const std::array<double, 4>& x, const std::array<double, 4>& y) {
    double s = 0;
    for (int i = 0; i < 4; ++i) s += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    return s;
  };
  std::array<double, 4> u = g.u, w = g.w;
  double nu = std::sqrt(dot(u, u));
  if (nu == 0.0) throw Error(ErrorCode::InfeasibleExponent, "plane with zero spanning vector");
  for (auto& x : u) x /= nu;
  double proj = dot(w, u);
  for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(i)] -= proj * u[static_cast<std::size_t>(i)];
  double nw = std::sqrt(dot(w, w));
  if (nw < 1e-12) throw Error(ErrorCode::InfeasibleExponent, "plane spanning vectors collinear");
  for (auto& x : w) x /= nw;

  PointCloud cloud;
  cloud.delta = delta;
  cloud.s_target = 2.0;
  cloud.seed = seed;
  cloud.generator = tag;
  // Exact in-plane grid: separation transfers as exactly delta, keeping the
  // cloud's pairwise-separation invariant sharp.
  const int m = static_cast<int>(std::floor(2.0 / delta));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      double ca = (a + 0.5) * delta - 1.0;
      double cb = (b + 0.5) * delta - 1.0;
      std::array<double, 4> p;
      bool in = true;
      for (int i = 0; i < 4; ++i) {
        p[static_cast<std::size_t>(i)] = g.anchor[static_cast<std::size_t>(i)] +
                                         ca * u[static_cast<std::size_t>(i)] +
                                         cb * w[static_cast<std::size_t>(i)];
        if (p[static_cast<std::size_t>(i)] < 0.0 || p[static_cast<std::size_t>(i)] > 1.0) in = false;
      }
      if (in) cloud.points.push_back(p);
    }
  if (cloud.points.empty())
    throw Error(ErrorCode::InfeasibleExponent, "plane misses the unit cube");
  return cloud;
}

PointCloud cantor_cloud(const CantorGen& g, double delta, double s, std::uint64_t seed) {
  if (g.ratio <= 0.0 || g.ratio >= 0.5)
    throw Error(ErrorCode::InfeasibleExponent, "cantor ratio must lie in (0, 1/2)");
  double implied = 4.0 * std::log(2.0) / std::log(1.0 / g.ratio);
  if (std::abs(implied - s) > 0.05)
    throw Error(ErrorCode::InfeasibleExponent, "cantor ratio incompatible with s");
  // Level k with 2^(4k) ~ delta^(-s) points; per-axis separation then stays
  // rho^(k-1)(1 - rho) >= delta.
  int k = std::max(1, static_cast<int>(std::floor(s * std::log(1.0 / delta) /
                                                  (4.0 * std::log(2.0)) + 1e-9)));
  std::vector<double> axis{0.0};
  double len = 1.0;
  for (int lvl = 0; lvl < k; ++lvl) {
    std::vector<double> next;
    next.reserve(axis.size() * 2);
    for (double x : axis) {
      next.push_back(x);
      next.push_back(x + len * (1.0 - g.ratio));
    }
    axis = std::move(next);
    len *= g.ratio;
  }
  for (double& x : axis) x += len / 2.0;  // interval centers
  PointCloud cloud;
  cloud.delta = delta;
  cloud.s_target = s;
  cloud.seed = seed;
  cloud.generator = "cantor";
  for (double a : axis)
    for (double b : axis)
      for (double c : axis)
        for (double d : axis) cloud.points.push_back({a, b, c, d});
  return cloud;
}

}  // namespace

PointCloud generate_cloud(const CloudGenerator& gen, double delta, double s,
                          std::uint64_t seed) {
  if (delta <= 0.0 || delta > 0.25)
    throw Error(ErrorCode::InfeasibleExponent, "delta must lie in (0, 1/4]");
  if (std::holds_alternative<UniformGen>(gen)) return uniform_cloud(delta, s, seed);
  if (std::holds_alternative<PlaneGen>(gen)) {
    if (std::abs(s - 2.0) > 1e-9)
      throw Error(ErrorCode::InfeasibleExponent, "plane generator builds s = 2 clouds");
    return plane_cloud(std::get<PlaneGen>(gen), delta, seed, "plane");
  }
  if (std::holds_alternative<WisewellPlaneGen>(gen)) {
    if (std::abs(s - 2.0) > 1e-9)
      throw Error(ErrorCode::InfeasibleExponent, "plane generator builds s = 2 clouds");
    // Grid over [0,1]^2 directly: points (a, 0, 0, b).
    PointCloud cloud;
    cloud.delta = delta;
    cloud.s_target = 2.0;
    cloud.seed = seed;
    cloud.generator = "wisewell_plane";
    const int m = grid_dims(delta);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        cloud.points.push_back({(a + 0.5) * delta, 0.0, 0.0, (b + 0.5) * delta});
    return cloud;
  }
  return cantor_cloud(std::get<CantorGen>(gen), delta, s, seed);
}

DeltaSReport verify_delta_s(const PointCloud& cloud, double c_f_max) {
  DeltaSReport rep;
  rep.worst_ratio = 0.0;
  if (cloud.points.empty()) {
    rep.ok = true;
    return rep;
  }
  for (double r = 1.0; r >= cloud.delta * 0.999; r /= 2.0) {
    std::unordered_map<std::uint64_t, std::int32_t> cells;
    cells.reserve(cloud.points.size() * 2);
    auto cell_of = [&](const std::array<double, 4>& p) {
      std::array<int, 4> c;
      for (int i = 0; i < 4; ++i)
        c[static_cast<std::size_t>(i)] =
            static_cast<int>(std::floor(p[static_cast<std::size_t>(i)] / r));
      return c;
    };
    for (const auto& p : cloud.points) ++cells[pack_cell(cell_of(p))];
    const double budget = std::pow(r / cloud.delta, cloud.s_target);
    for (const auto& [key, cnt] : cells) {
      (void)cnt;
      // Count the 3^4 block around the cell: any ball B(x, r) with x in the
      // cell is contained in it.
      std::array<int, 4> base;
      std::uint64_t k = key;
      for (int i = 3; i >= 0; --i) {
        base[static_cast<std::size_t>(i)] = static_cast<int>(k & 0xFFFF) - 8;
        k >>= 16;
      }
      std::int64_t total = 0;
      std::array<int, 4> off;
      for (off[0] = -1; off[0] <= 1; ++off[0])
        for (off[1] = -1; off[1] <= 1; ++off[1])
          for (off[2] = -1; off[2] <= 1; ++off[2])
            for (off[3] = -1; off[3] <= 1; ++off[3]) {
              std::array<int, 4> c;
              for (int i = 0; i < 4; ++i)
                c[static_cast<std::size_t>(i)] =
                    base[static_cast<std::size_t>(i)] + off[static_cast<std::size_t>(i)];
              auto it = cells.find(pack_cell(c));
              if (it != cells.end()) total += it->second;
            }
      double ratio = static_cast<double>(total) / budget;
      if (ratio > rep.worst_ratio) {
        rep.worst_ratio = ratio;
        for (int i = 0; i < 4; ++i)
          rep.worst_center[static_cast<std::size_t>(i)] =
              (base[static_cast<std::size_t>(i)] + 0.5) * r;
        rep.worst_r = r;
      }
    }
  }
  rep.ok = rep.worst_ratio <= c_f_max;
  return rep;
}

}  // namespace projlab
