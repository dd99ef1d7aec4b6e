#pragma once

#include <array>
#include <optional>
#include <string>

#include "projlab/polymat.hpp"
#include "projlab/quadform.hpp"

namespace projlab {

/// A polynomial frame b1(t), b2(t) in R[t]^4. Rows of M(t); the first two
/// coordinates of each row form the beta block, the last two the gamma block.
struct FamilySpec {
  std::array<Poly, 4> b1, b2;
  std::string name;

  static FamilySpec create(std::array<Poly, 4> b1, std::array<Poly, 4> b2,
                           std::string name);

  PolyMat matrix() const;       // 2x4, rows b1, b2
  PolyMat gamma_block() const;  // 2x2, last two columns

  // Bundled demo families.
  static FamilySpec example_family();   // b1=(1,0,t,t^2), b2=(0,1,t^2,-t^3)
  static FamilySpec wisewell_family();  // b1=(1,0,-2t^2,-2t), b2=(0,1,-2t,0)
};

/// Exponent ladder derived from the top minor degree B.
struct ExponentReport {
  int B = 0;
  int N = 1;                      // N = B + 1
  Rational alpha;                 // 2N/(3N-2)
  std::optional<Rational> beta;   // (3N-2)/(4N-4), defined for N >= 2
  std::optional<Rational> p;      // 2*beta
  Rational dim_bound;             // 1 + 1/N

  static ExponentReport from_degree(int B);
};

/// Coefficient rows c_h of det(M(t)K) = sum_h (c_h . K_I) t^h over the Plucker
/// coordinates K_I in the (12,13,14,23,24,34) order; row c_B is nonzero.
struct MinorCoefficientMatrix {
  int B = 0;
  std::vector<std::array<Rational, 6>> rows;  // h = 0..B
  std::array<Poly, 6> minors;
};

/// 4x2 witness over Q(sqrt(d)); d == 0 means all entries rational.
struct WitnessMatrix {
  Rational d;
  std::array<std::array<QuadExt, 2>, 4> k;  // k[row][col]
  bool is_rational() const { return d.is_zero(); }
};

struct WronskianResult {
  bool ok = false;
  int roots_in_01 = 0;
  Poly det;
};

struct SubspaceResult {
  bool ok = false;
  std::optional<WitnessMatrix> witness;
};

struct CheckReport {
  WronskianResult wronskian;
  bool frame_independent = false;
  bool subspace_ok = false;
  std::optional<WitnessMatrix> witness;
  // Present when subspace_ok is false: does some single line die identically?
  std::optional<bool> line_dies;
  std::optional<std::array<Rational, 4>> dying_line;
  MinorCoefficientMatrix minors;
  ExponentReport exponents;
};

/// det([b1, b2, b1', b2']) as columns; ok iff not identically zero.
WronskianResult wronskian_check(const FamilySpec& f);

/// Throws AllMinorsZero when M(t) has rank < 2 identically.
MinorCoefficientMatrix minor_coefficients(const FamilySpec& f);

SubspaceResult subspace_nondegeneracy(const FamilySpec& f);
SubspaceResult subspace_nondegeneracy(const FamilySpec& f,
                                      const MinorCoefficientMatrix& mc);

/// True iff gamma1(t), gamma2(t) stay linearly independent on all of [0,1].
bool frame_independence(const FamilySpec& f);

/// Relabels via M(t) -> M(t) R^{-1}; exponents and verdicts are invariant.
/// Throws SingularMatrix.
FamilySpec rotate_label_basis(const FamilySpec& f, const RatMat& r);

CheckReport full_check(const FamilySpec& f);

/// Exact test det(M(t)K) == 0 for a rational 4x2 K, via C . Plucker(K) = 0.
bool det_vanishes_on_subspace(const MinorCoefficientMatrix& mc,
                              const std::array<std::array<Rational, 2>, 4>& k);

/// Exact verification of det(M(t) . witness) == 0 over Q(sqrt(d)).
bool verify_witness(const FamilySpec& f, const WitnessMatrix& w);

/// Plucker coordinates of a rational 4x2 matrix (row-pair minors, fixed order).
std::array<Rational, 6> plucker_of_columns(const std::array<std::array<Rational, 2>, 4>& k);

}  // namespace projlab
