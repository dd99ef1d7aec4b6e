#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace projlab {

inline int grid_dims(double delta) {
  return static_cast<int>(std::ceil(1.0 / delta - 1e-9));
}

/// Dense integer incidence field over the delta-grid of [0,1]^3 with the
/// shared axis order (t, y1, y2); cell (i,j,k) covers
/// [i d,(i+1) d) x [j d,(j+1) d) x [k d,(k+1) d).
struct Grid3 {
  double delta = 0.0;
  int n = 0;  // cells per axis
  std::vector<std::int32_t> counts;

  explicit Grid3(double d)
      : delta(d), n(grid_dims(d)),
        counts(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
               static_cast<std::size_t>(n), 0) {}

  std::int64_t flat(int it, int i1, int i2) const {
    return (static_cast<std::int64_t>(it) * n + i1) * n + i2;
  }
  std::int32_t at(int it, int i1, int i2) const {
    return counts[static_cast<std::size_t>(flat(it, i1, i2))];
  }
  std::int64_t size() const { return static_cast<std::int64_t>(counts.size()); }

  void decode(std::int64_t flat_idx, int* it, int* i1, int* i2) const {
    *i2 = static_cast<int>(flat_idx % n);
    flat_idx /= n;
    *i1 = static_cast<int>(flat_idx % n);
    *it = static_cast<int>(flat_idx / n);
  }
  /// Center of a cell by flat index.
  std::array<double, 3> center(std::int64_t flat_idx) const {
    int it, i1, i2;
    decode(flat_idx, &it, &i1, &i2);
    return {(it + 0.5) * delta, (i1 + 0.5) * delta, (i2 + 0.5) * delta};
  }

  std::int64_t total_incidences() const {
    std::int64_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }
  std::int64_t support_cells() const {
    std::int64_t s = 0;
    for (auto c : counts) s += (c != 0);
    return s;
  }
  std::int32_t max_count() const {
    std::int32_t m = 0;
    for (auto c : counts) m = std::max(m, c);
    return m;
  }
};

}  // namespace projlab
