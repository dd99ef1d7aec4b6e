#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "projlab/poly.hpp"

namespace projlab {

/// Dense row-major matrix of polynomials.
class PolyMat {
 public:
  PolyMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  PolyMat(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  PolyMat transposed() const;
  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Poly> e_;
};

/// Exact determinant by fraction-free Bareiss elimination over the polynomial
/// ring (row swaps with sign tracking when a pivot vanishes identically).
/// Throws NonSquare for non-square input.
Poly det_poly(const PolyMat& m);

/// The six 2x2 minors of a 2x4 matrix over column pairs, in the fixed order
/// (12, 13, 14, 23, 24, 34) with the raw-determinant sign convention.
/// Throws ShapeMismatch unless m is 2x4.
std::array<Poly, 6> plucker_minors(const PolyMat& m);

/// Column index pairs matching the plucker_minors output order.
inline constexpr std::array<std::pair<int, int>, 6> kPluckerPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace projlab
