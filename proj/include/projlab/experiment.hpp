#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "projlab/functionals.hpp"
#include "projlab/rng.hpp"

namespace projlab {

/// Least-squares fit of y against x (used on log-log ladders).
struct ScalingFit {
  std::vector<std::array<double, 2>> points;  // (x, y)
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
};
ScalingFit fit_linear(const std::vector<std::array<double, 2>>& points);

struct LabelSampleOptions {
  double v_jitter = 0.0;  // fraction of delta; rejection keeps v-separation
  int max_attempts = 32;
};

/// Deterministic jittered-grid label sampler: v on the centered delta-grid of
/// [0,1]^2 (pairwise separation exactly delta when v_jitter == 0, enforced by
/// rejection otherwise), x jittered uniformly over [0,1]^2.
std::vector<Label> sample_separated_labels(double delta, Rng& rng,
                                           const LabelSampleOptions& opts = {});

std::vector<Tube> tubes_from_labels(const std::vector<Label>& labels, double delta,
                                    double alpha0 = 0.0, double lambda = 1.0);

struct KakeyaExperiment {
  ScalingFit fit;               // log ||sum chi||_p against log delta
  double target_exponent = 0.0; // -2 + (4 beta - 1/2)/p for the family
  double p = 0.0;
  std::vector<FieldStats> per_delta;
  std::int64_t out_of_range_labels = 0;
};

/// Ladder run of Prop.-style linear bounds: for each delta draw ceil(1/delta^2)
/// labels with delta-separated v, accumulate the field, record ||.||_p; then
/// fit log-norm against log-delta. Throws LadderTooShort for < 3 points and
/// InvariantViolation when p < 2 beta of the family.
KakeyaExperiment linear_kakeya_experiment(const FamilySpec& f,
                                          const std::vector<double>& ladder, double p,
                                          std::uint64_t seed);

}  // namespace projlab
