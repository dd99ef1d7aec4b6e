#pragma once

#include <cstdint>
#include <vector>

#include "projlab/grid.hpp"
#include "projlab/tube.hpp"

namespace projlab {

/// Superset-accurate voxelization of a curved tube onto the delta_grid
/// discretization of [0,1]^3: every cell whose center lies in the tube is
/// included (cells are clipped to the grid). Returns sorted unique flat cell
/// indices for an n = grid_dims(delta_grid) grid.
///
/// The center curve is sampled at t-steps of delta_grid / max(4, speed bound)
/// and each sample emits a disc mask of radius tube.delta + 1.75*delta_grid,
/// which covers the half-stride curve drift plus cell-center quantization.
std::vector<std::int64_t> rasterize_tube(const NumericFamily& nf, const Tube& tube,
                                         double delta_grid);

/// Serial reference for the parallel accumulation path (kept for testing).
Grid3 accumulate_field_serial(const NumericFamily& nf, const std::vector<Tube>& tubes,
                              double delta);

/// Incidence field: counts[cell] = number of tubes whose raster set contains
/// the cell. Parallel over tubes with atomic integer increments; counts are
/// schedule-independent. Throws MixedDelta unless all tubes carry `delta`.
Grid3 accumulate_field(const NumericFamily& nf, const std::vector<Tube>& tubes,
                       double delta);

/// Cell -> incident tube ids (CSR layout) over the support of the field,
/// plus per-tube tangent caches by t-slice; shared by the pairwise
/// functionals and the broad/narrow classifier.
struct FieldIndex {
  double delta = 0.0;
  int n = 0;
  std::vector<std::int64_t> cells;          // sorted support cells
  std::vector<std::int32_t> offsets;        // size cells.size()+1
  std::vector<std::int32_t> tube_ids;       // concatenated incident lists
  std::vector<std::vector<std::array<double, 3>>> tangents;  // [tube][t_slice]

  std::int64_t cell_count() const { return static_cast<std::int64_t>(cells.size()); }
};

FieldIndex build_field_index(const NumericFamily& nf, const std::vector<Tube>& tubes,
                             double delta);

}  // namespace projlab
