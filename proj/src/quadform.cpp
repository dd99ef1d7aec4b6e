#include "projlab/quadform.hpp"

#include <cstddef>

#include "projlab/errors.hpp"

namespace projlab {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rat_rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> rat_nullspace(const RatMat& m) {
  if (m.empty()) return {};
  RatMat a = m;
  const std::size_t cols = a[0].size();
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rational(0));
    v[free] = Rational(1);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -a[pr][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat rat_inverse(const RatMat& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::NonSquare, "inverse of a non-square matrix");
  RatMat aug(n, RatVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Rational(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() >= n)
    throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != i) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RatVec rat_mat_vec(const RatMat& m, const RatVec& x) {
  RatVec y(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size())
      throw Error(ErrorCode::ShapeMismatch, "mat-vec shape mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  }
  return y;
}

Congruence symmetric_diagonalize(const RatMat& sym) {
  const std::size_t n = sym.size();
  RatMat a = sym;
  RatMat p(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = Rational(1);

  auto swap_rc = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(p[r][i], p[r][j]);
  };
  // col_j += f * col_i (and symmetric row op); P tracks column operations.
  auto add_rc = [&](std::size_t j, std::size_t i, const Rational& f) {
    for (std::size_t r = 0; r < n; ++r) a[r][j] += f * a[r][i];
    for (std::size_t c = 0; c < n; ++c) a[j][c] += f * a[i][c];
    for (std::size_t r = 0; r < n; ++r) p[r][j] += f * p[r][i];
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i].is_zero()) {
      std::size_t j = i + 1;
      while (j < n && a[j][j].is_zero()) ++j;
      if (j < n) {
        swap_rc(i, j);
      } else {
        // All remaining diagonal entries vanish; a nonzero off-diagonal entry
        // a[i][j] makes the diagonal at i nonzero after col_i += col_j.
        j = i + 1;
        while (j < n && a[i][j].is_zero()) ++j;
        if (j == n) continue;  // row i is zero in the trailing block
        add_rc(i, j, Rational(1));
      }
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j].is_zero()) continue;
      add_rc(j, i, -(a[i][j] / a[i][i]));
    }
  }
  Congruence out;
  out.basis = std::move(p);
  out.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = a[i][i];
  return out;
}

IsotropicSearch isotropic_vector(const RatMat& sym) {
  const std::size_t n = sym.size();
  IsotropicSearch out;
  if (n == 0) {
    out.definite = true;
    return out;
  }
  Congruence cg = symmetric_diagonalize(sym);
  auto basis_col = [&](std::size_t j) {
    std::vector<QuadExt> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = {cg.basis[r][j], Rational(0)};
    return v;
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (cg.diag[i].is_zero()) {
      out.d = Rational(0);
      out.vec = basis_col(i);
      return out;
    }
  }
  std::size_t pos = n, neg = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (cg.diag[i].sign() > 0 && pos == n) pos = i;
    if (cg.diag[i].sign() < 0 && neg == n) neg = i;
  }
  if (pos == n || neg == n) {
    out.definite = true;
    return out;
  }
  // Solve diag[pos] + y^2 diag[neg] = 0: y = sqrt(d)/(-diag[neg]) with
  // d = diag[pos] * (-diag[neg]) > 0, rational when d is a perfect square.
  Rational d = cg.diag[pos] * (-cg.diag[neg]);
  Rational root;
  Rational y_rat;
  bool rational = d.exact_sqrt(&root);
  if (rational) y_rat = root / (-cg.diag[neg]);
  Rational y_coeff = Rational(1) / (-cg.diag[neg]);  // y = y_coeff * sqrt(d)

  out.d = rational ? Rational(0) : d;
  out.vec.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rational)
      out.vec[r] = {cg.basis[r][pos] + y_rat * cg.basis[r][neg], Rational(0)};
    else
      out.vec[r] = {cg.basis[r][pos], y_coeff * cg.basis[r][neg]};
  }
  return out;
}

}  // namespace projlab
