#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "projlab/family.hpp"

namespace projlab {

/// Curve label z = (x, v); by convention v is the direction part.
struct Label {
  std::array<double, 2> x{0.0, 0.0};
  std::array<double, 2> v{0.0, 0.0};

  std::array<double, 4> z4() const { return {x[0], x[1], v[0], v[1]}; }
  bool in_unit_box() const {
    for (double c : z4())
      if (c < 0.0 || c > 1.0) return false;
    return true;
  }
};

/// Curved delta-tube: the delta-neighborhood (Euclidean in the slice) of the
/// graph t -> (t, Phi(z, t)) over [alpha0, alpha0 + lambda].
struct Tube {
  Label label;
  double alpha0 = 0.0;
  double lambda = 1.0;
  double delta = 0.0;
};

/// Double-precision view of a family for the numeric hot paths; coefficients
/// are converted from the exact spec once.
class NumericFamily {
 public:
  explicit NumericFamily(const FamilySpec& f);

  std::array<double, 2> phi(const std::array<double, 4>& z, double t) const {
    return {eval_row(b1_, z, t), eval_row(b2_, z, t)};
  }
  /// Tangent of t -> (t, Phi(z,t)); first coordinate is exactly 1.
  std::array<double, 3> tangent(const std::array<double, 4>& z, double t) const {
    return {1.0, eval_row(db1_, z, t), eval_row(db2_, z, t)};
  }

  /// Upper bound for |d/dt Phi(z, t)| over t in [0,1] (coefficient-sum bound).
  double speed_bound(const std::array<double, 4>& z) const {
    double r1 = 0.0, r2 = 0.0;
    for (int j = 0; j < 4; ++j) {
      r1 += std::abs(z[static_cast<std::size_t>(j)]) * dsum1_[static_cast<std::size_t>(j)];
      r2 += std::abs(z[static_cast<std::size_t>(j)]) * dsum2_[static_cast<std::size_t>(j)];
    }
    return std::hypot(r1, r2);
  }

 private:
  using Row = std::array<std::vector<double>, 4>;
  static double eval_row(const Row& row, const std::array<double, 4>& z, double t) {
    double out = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& c = row[j];
      double acc = 0.0;
      for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
      out += z[j] * acc;
    }
    return out;
  }
  Row b1_, b2_, db1_, db2_;
  std::array<double, 4> dsum1_{}, dsum2_{};
};

/// Spec-level evaluation entry points (convert exactly, evaluate in double).
std::array<double, 2> phi(const FamilySpec& f, const Label& z, double t);
std::array<double, 3> tangent(const FamilySpec& f, const Label& z, double t);

/// Wedge magnitude |u ^ w| of the unit directions of two nonzero 3-vectors;
/// symmetric, in [0,1], zero iff parallel. Throws ZeroVector.
double wedge(const std::array<double, 3>& u, const std::array<double, 3>& w);

bool tube_contains(const NumericFamily& nf, const Tube& tube, const std::array<double, 3>& p);
bool tube_contains(const FamilySpec& f, const Tube& tube, const std::array<double, 3>& p);

enum class SeparationMode { direction_v, projected };

/// Greedy maximal subsequence with pairwise separation >= delta of the v-parts
/// (direction_v) or of the orthogonal projections of z onto the plane spanned
/// by two orthonormal rows (projected).
std::vector<Label> select_separated_labels(
    const std::vector<Label>& candidates, double delta, SeparationMode mode,
    const std::array<std::array<double, 4>, 2>* plane = nullptr);

}  // namespace projlab
