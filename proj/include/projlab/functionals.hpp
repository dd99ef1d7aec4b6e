#pragma once

#include <map>
#include <vector>

#include "projlab/raster.hpp"

namespace projlab {

/// Norms and counting stats of one incidence field.
struct FieldStats {
  double delta = 0.0;
  std::int64_t tube_count = 0;
  std::map<double, double> lp;  // exponent -> (delta^3 sum counts^p)^(1/p)
  std::int32_t max_count = 0;
  std::int64_t support_cells = 0;
};

/// (delta^3 sum counts^p)^(1/p); p >= 1. Schedule-independent.
double lp_norm(const Grid3& g, double p);
double lp_norm_serial(const Grid3& g, double p);

/// The elementary wedge-weighted pairwise bound: lhs is the cell sum of
/// wedge(T1, T2) over ordered incident pairs times delta^3, rhs = delta^3 #T^2,
/// ok iff lhs <= c_rast * rhs.
struct MultilinearResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};
MultilinearResult plain_multilinear_check(const NumericFamily& nf,
                                          const std::vector<Tube>& tubes, double delta,
                                          double c_rast);
MultilinearResult plain_multilinear_check(const FieldIndex& idx, std::int64_t tube_count,
                                          double c_rast);

/// delta^3 sum_cells (sum over ordered incident pairs of wedge^alpha)^beta,
/// ignoring pairs with wedge below the near-parallel cutoff 1e-30.
double bilinear_functional(const NumericFamily& nf, const std::vector<Tube>& tubes,
                           double delta, double alpha, double beta);
double bilinear_functional(const FieldIndex& idx, double alpha, double beta);

struct BroadNarrowParams {
  int k_caps = 2;                 // cap refinement factor K
  double rho = 1.0;               // current cap scale
  int narrow_threshold = 10000;   // max caps allowed to dominate
};

struct BroadNarrowResult {
  bool narrow = false;
  std::int64_t incident = 0;
  // Cap grid indices (fixed grid of side rho/K over v-space) that witness a
  // narrow classification; empty for broad cells.
  std::vector<std::pair<int, int>> dominating_caps;
};

/// Classifies one support cell; throws EmptyCell if no tube meets it.
BroadNarrowResult broad_narrow_classify(const FieldIndex& idx,
                                        const std::vector<Tube>& tubes,
                                        std::int64_t flat_cell,
                                        const BroadNarrowParams& params);

}  // namespace projlab
