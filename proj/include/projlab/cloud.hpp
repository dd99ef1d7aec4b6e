#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "projlab/rng.hpp"

namespace projlab {

/// Generator tags for (delta, s)-set construction.
struct UniformGen {};  // jittered 4D grid at spacing delta^(s/4)
struct PlaneGen {      // (delta,2)-set inside the plane anchor + span(u, w)
  std::array<double, 4> u{1, 0, 0, 0};
  std::array<double, 4> w{0, 0, 0, 1};
  std::array<double, 4> anchor{0, 0, 0, 0};
};
struct WisewellPlaneGen {};  // span(e1, e4): points (a, 0, 0, b)
struct CantorGen {           // 4-fold product of ratio-Cantor sets
  double ratio = 0.0625;
};
using CloudGenerator = std::variant<UniformGen, PlaneGen, WisewellPlaneGen, CantorGen>;

/// Delta-separated (delta,s)-set in [0,1]^4 with generator provenance.
struct PointCloud {
  std::vector<std::array<double, 4>> points;
  double delta = 0.0;
  double s_target = 0.0;
  std::string generator;
  std::uint64_t seed = 0;
};

/// Builds a cloud with #points >= c * delta^(-s); throws InfeasibleExponent
/// when s is incompatible with the generator (range or Cantor-ratio mismatch).
PointCloud generate_cloud(const CloudGenerator& gen, double delta, double s,
                          std::uint64_t seed);

struct DeltaSReport {
  bool ok = false;
  double worst_ratio = 0.0;
  std::array<double, 4> worst_center{};
  double worst_r = 0.0;
};

/// Exhaustive dyadic ball-counting check of the (delta,s) bound down to scale
/// delta: counts 3^4 cell blocks (covering any ball anchored in the cell)
/// against (r/delta)^s. ok iff worst_ratio <= c_f_max.
DeltaSReport verify_delta_s(const PointCloud& cloud, double c_f_max);

}  // namespace projlab
