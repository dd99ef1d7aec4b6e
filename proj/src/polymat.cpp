#include "projlab/polymat.hpp"

#include "projlab/errors.hpp"

namespace projlab {

PolyMat::PolyMat(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    throw Error(ErrorCode::ShapeMismatch, "entry count does not match rows*cols");
}

PolyMat PolyMat::transposed() const {
  PolyMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  PolyMat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Poly acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a.at(r, k) * b.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

Poly det_poly(const PolyMat& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(Rational(1));
  PolyMat a = m;
  int sign = 1;
  Poly prev = Poly::constant(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k).is_zero()) ++r;
      if (r == n) return Poly::zero();
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)).exact_div(prev);
    prev = a.at(k, k);
  }
  Poly d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

std::array<Poly, 6> plucker_minors(const PolyMat& m) {
  if (m.rows() != 2 || m.cols() != 4)
    throw Error(ErrorCode::ShapeMismatch, "plucker_minors expects a 2x4 matrix");
  std::array<Poly, 6> out;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kPluckerPairs[k];
    out[k] = m.at(0, static_cast<std::size_t>(i)) * m.at(1, static_cast<std::size_t>(j)) -
             m.at(0, static_cast<std::size_t>(j)) * m.at(1, static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace projlab
