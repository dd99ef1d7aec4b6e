#pragma once

#include <vector>

#include "projlab/rational.hpp"

namespace projlab {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

std::size_t rat_rank(RatMat m);

/// Basis of the right null space {x : m x = 0}; empty when m has full column rank.
std::vector<RatVec> rat_nullspace(const RatMat& m);

/// Exact inverse; throws SingularMatrix.
RatMat rat_inverse(const RatMat& m);

RatVec rat_mat_vec(const RatMat& m, const RatVec& x);

/// Congruence diagonalization of a symmetric matrix: basis^T * A * basis is
/// diagonal with the returned diagonal entries; basis columns are the new basis.
struct Congruence {
  RatVec diag;
  RatMat basis;  // k x k, column i is the i-th congruence basis vector
};
Congruence symmetric_diagonalize(const RatMat& sym);

/// Element of Q(sqrt(d)) with the d carried externally; d == 0 encodes a plain
/// rational value (b must be zero everywhere in that case).
struct QuadExt {
  Rational a, b;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  double to_double(double sqrt_d) const { return a.to_double() + b.to_double() * sqrt_d; }
};

inline QuadExt qe_add(const QuadExt& x, const QuadExt& y) { return {x.a + y.a, x.b + y.b}; }
inline QuadExt qe_sub(const QuadExt& x, const QuadExt& y) { return {x.a - y.a, x.b - y.b}; }
inline QuadExt qe_neg(const QuadExt& x) { return {-x.a, -x.b}; }
inline QuadExt qe_mul(const QuadExt& x, const QuadExt& y, const Rational& d) {
  return {x.a * y.a + d * (x.b * y.b), x.a * y.b + x.b * y.a};
}
inline QuadExt qe_scale(const QuadExt& x, const Rational& s) { return {x.a * s, x.b * s}; }

/// Outcome of the isotropic-vector search for a symmetric rational form.
/// If `definite` the form is positive- or negative-definite and no nonzero
/// isotropic vector exists; otherwise `vec` (entries a_i + b_i*sqrt(d)) is a
/// nonzero vector with Q(vec) = 0, rational when d == 0.
struct IsotropicSearch {
  bool definite = false;
  Rational d;
  std::vector<QuadExt> vec;
};
IsotropicSearch isotropic_vector(const RatMat& sym);

}  // namespace projlab
