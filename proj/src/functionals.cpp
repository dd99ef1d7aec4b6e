#include "projlab/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "projlab/errors.hpp"
#include "projlab/par.hpp"

namespace projlab {

double lp_norm_serial(const Grid3& g, double p) {
  if (p < 1.0) throw Error(ErrorCode::InvariantViolation, "lp_norm needs p >= 1");
  double cell = g.delta * g.delta * g.delta;
  double acc = 0.0;
  for (auto c : g.counts)
    if (c > 0) acc += std::pow(static_cast<double>(c), p);
  return std::pow(cell * acc, 1.0 / p);
}

double lp_norm(const Grid3& g, double p) {
  if (p < 1.0) throw Error(ErrorCode::InvariantViolation, "lp_norm needs p >= 1");
  double cell = g.delta * g.delta * g.delta;
  double acc = deterministic_block_sum(g.size(), [&](std::int64_t i) {
    std::int32_t c = g.counts[static_cast<std::size_t>(i)];
    return c > 0 ? std::pow(static_cast<double>(c), p) : 0.0;
  });
  return std::pow(cell * acc, 1.0 / p);
}

namespace {

// Sum of f over ordered pairs of tubes incident to each support cell, with
// the wedge evaluated at the tangent cache of the cell's t-slice.
template <class PerCell>
double cell_pair_sum(const FieldIndex& idx, PerCell&& per_cell) {
  const std::int64_t nn = static_cast<std::int64_t>(idx.n) * idx.n;
  return deterministic_block_sum(idx.cell_count(), [&](std::int64_t ci) {
    auto c = static_cast<std::size_t>(ci);
    std::int32_t lo = idx.offsets[c], hi = idx.offsets[c + 1];
    if (hi - lo < 2) return 0.0;
    int t_slice = static_cast<int>(idx.cells[c] / nn);
    return per_cell(lo, hi, t_slice);
  });
}

double wedge_of(const std::array<double, 3>& u, const std::array<double, 3>& w) {
  double nu = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  double nw = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  double cx = u[1] * w[2] - u[2] * w[1];
  double cy = u[2] * w[0] - u[0] * w[2];
  double cz = u[0] * w[1] - u[1] * w[0];
  double val = std::sqrt(cx * cx + cy * cy + cz * cz) / (nu * nw);
  return std::min(1.0, std::max(0.0, val));
}

}  // namespace

MultilinearResult plain_multilinear_check(const FieldIndex& idx, std::int64_t tube_count,
                                          double c_rast) {
  const double cell = idx.delta * idx.delta * idx.delta;
  double lhs = cell_pair_sum(idx, [&](std::int32_t lo, std::int32_t hi, int t_slice) {
    double acc = 0.0;
    for (std::int32_t a = lo; a < hi; ++a)
      for (std::int32_t b = lo; b < hi; ++b) {
        if (a == b) continue;
        const auto& u = idx.tangents[static_cast<std::size_t>(idx.tube_ids[static_cast<std::size_t>(a)])]
                                    [static_cast<std::size_t>(t_slice)];
        const auto& w = idx.tangents[static_cast<std::size_t>(idx.tube_ids[static_cast<std::size_t>(b)])]
                                    [static_cast<std::size_t>(t_slice)];
        acc += wedge_of(u, w);
      }
    return acc;
  });
  MultilinearResult out;
  out.lhs = cell * lhs;
  out.rhs = cell * static_cast<double>(tube_count) * static_cast<double>(tube_count);
  out.ok = out.lhs <= c_rast * out.rhs;
  return out;
}

MultilinearResult plain_multilinear_check(const NumericFamily& nf,
                                          const std::vector<Tube>& tubes, double delta,
                                          double c_rast) {
  FieldIndex idx = build_field_index(nf, tubes, delta);
  return plain_multilinear_check(idx, static_cast<std::int64_t>(tubes.size()), c_rast);
}

double bilinear_functional(const FieldIndex& idx, double alpha, double beta) {
  constexpr double kParallelCutoff = 1e-30;
  const double cell = idx.delta * idx.delta * idx.delta;
  double total = cell_pair_sum(idx, [&](std::int32_t lo, std::int32_t hi, int t_slice) {
    double acc = 0.0;
    for (std::int32_t a = lo; a < hi; ++a)
      for (std::int32_t b = lo; b < hi; ++b) {
        if (a == b) continue;
        const auto& u = idx.tangents[static_cast<std::size_t>(idx.tube_ids[static_cast<std::size_t>(a)])]
                                    [static_cast<std::size_t>(t_slice)];
        const auto& w = idx.tangents[static_cast<std::size_t>(idx.tube_ids[static_cast<std::size_t>(b)])]
                                    [static_cast<std::size_t>(t_slice)];
        double wv = wedge_of(u, w);
        if (wv >= kParallelCutoff) acc += std::pow(wv, alpha);
      }
    return acc == 0.0 ? 0.0 : std::pow(acc, beta);
  });
  return cell * total;
}

double bilinear_functional(const NumericFamily& nf, const std::vector<Tube>& tubes,
                           double delta, double alpha, double beta) {
  FieldIndex idx = build_field_index(nf, tubes, delta);
  return bilinear_functional(idx, alpha, beta);
}

BroadNarrowResult broad_narrow_classify(const FieldIndex& idx,
                                        const std::vector<Tube>& tubes,
                                        std::int64_t flat_cell,
                                        const BroadNarrowParams& params) {
  auto it = std::lower_bound(idx.cells.begin(), idx.cells.end(), flat_cell);
  if (it == idx.cells.end() || *it != flat_cell)
    throw Error(ErrorCode::EmptyCell, "cell has no incident tubes");
  std::size_t c = static_cast<std::size_t>(it - idx.cells.begin());
  std::int32_t lo = idx.offsets[c], hi = idx.offsets[c + 1];

  const double cap = params.rho / params.k_caps;
  std::map<std::pair<int, int>, std::int64_t> per_cap;
  for (std::int32_t a = lo; a < hi; ++a) {
    const auto& v = tubes[static_cast<std::size_t>(idx.tube_ids[static_cast<std::size_t>(a)])].label.v;
    per_cap[{static_cast<int>(std::floor(v[0] / cap)),
             static_cast<int>(std::floor(v[1] / cap))}]++;
  }
  std::vector<std::pair<std::int64_t, std::pair<int, int>>> ranked;
  ranked.reserve(per_cap.size());
  for (const auto& [k, n] : per_cap) ranked.emplace_back(n, k);
  std::sort(ranked.rbegin(), ranked.rend());

  BroadNarrowResult out;
  out.incident = hi - lo;
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(params.narrow_threshold); ++i) {
    acc += ranked[i].first;
    out.dominating_caps.push_back(ranked[i].second);
    if (2 * acc > out.incident) {
      out.narrow = true;
      return out;
    }
  }
  out.narrow = false;
  out.dominating_caps.clear();
  return out;
}

}  // namespace projlab
