#include "projlab/family.hpp"

#include <algorithm>

#include "projlab/errors.hpp"

namespace projlab {

namespace {

Poly pol(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

bool all_zero(const std::array<Poly, 4>& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

// Symmetric matrix of the Plucker quadric q(p) = p12 p34 - p13 p24 + p14 p23
// in the (12,13,14,23,24,34) coordinate order.
RatMat plucker_gram() {
  RatMat g(6, RatVec(6, Rational(0)));
  g[0][5] = g[5][0] = Rational(1, 2);
  g[1][4] = g[4][1] = Rational(-1, 2);
  g[2][3] = g[3][2] = Rational(1, 2);
  return g;
}

}  // namespace

FamilySpec FamilySpec::create(std::array<Poly, 4> b1, std::array<Poly, 4> b2,
                              std::string name) {
  if (all_zero(b1) || all_zero(b2))
    throw Error(ErrorCode::EmptyVectorError, "family row is the zero vector");
  FamilySpec f;
  f.b1 = std::move(b1);
  f.b2 = std::move(b2);
  f.name = std::move(name);
  return f;
}

PolyMat FamilySpec::matrix() const {
  PolyMat m(2, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    m.at(0, c) = b1[c];
    m.at(1, c) = b2[c];
  }
  return m;
}

PolyMat FamilySpec::gamma_block() const {
  PolyMat g(2, 2);
  g.at(0, 0) = b1[2];
  g.at(0, 1) = b1[3];
  g.at(1, 0) = b2[2];
  g.at(1, 1) = b2[3];
  return g;
}

FamilySpec FamilySpec::example_family() {
  return create({pol({1}), pol({0}), pol({0, 1}), pol({0, 0, 1})},
                {pol({0}), pol({1}), pol({0, 0, 1}), pol({0, 0, 0, -1})}, "example");
}

FamilySpec FamilySpec::wisewell_family() {
  return create({pol({1}), pol({0}), pol({0, 0, -2}), pol({0, -2})},
                {pol({0}), pol({1}), pol({0, -2}), pol({0})}, "wisewell");
}

ExponentReport ExponentReport::from_degree(int b) {
  ExponentReport r;
  r.B = b;
  r.N = b + 1;
  long n = r.N;
  r.alpha = Rational(2 * n) / Rational(3 * n - 2);
  if (n >= 2) {
    r.beta = Rational(3 * n - 2) / Rational(4 * n - 4);
    r.p = Rational(2) * (*r.beta);
  }
  r.dim_bound = Rational(1) + Rational(1, n);
  return r;
}

WronskianResult wronskian_check(const FamilySpec& f) {
  // Columns b1, b2, b1', b2'.
  std::array<Poly, 4> d1, d2;
  for (std::size_t i = 0; i < 4; ++i) {
    d1[i] = f.b1[i].derivative();
    d2[i] = f.b2[i].derivative();
  }
  PolyMat m(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    m.at(r, 0) = f.b1[r];
    m.at(r, 1) = f.b2[r];
    m.at(r, 2) = d1[r];
    m.at(r, 3) = d2[r];
  }
  WronskianResult out;
  out.det = det_poly(m);
  out.ok = !out.det.is_zero();
  out.roots_in_01 = out.ok ? count_real_roots(out.det, Rational(0), Rational(1)) : 0;
  return out;
}

MinorCoefficientMatrix minor_coefficients(const FamilySpec& f) {
  MinorCoefficientMatrix mc;
  mc.minors = plucker_minors(f.matrix());
  int b = -1;
  for (const auto& m : mc.minors) b = std::max(b, m.degree());
  if (b < 0)
    throw Error(ErrorCode::AllMinorsZero, "M(t) has rank < 2 identically");
  mc.B = b;
  mc.rows.resize(static_cast<std::size_t>(b) + 1);
  for (int h = 0; h <= b; ++h)
    for (std::size_t k = 0; k < 6; ++k)
      mc.rows[static_cast<std::size_t>(h)][k] = mc.minors[k].coeff(h);
  return mc;
}

std::array<Rational, 6> plucker_of_columns(const std::array<std::array<Rational, 2>, 4>& k) {
  std::array<Rational, 6> p;
  for (std::size_t idx = 0; idx < 6; ++idx) {
    auto [i, j] = kPluckerPairs[idx];
    p[idx] = k[static_cast<std::size_t>(i)][0] * k[static_cast<std::size_t>(j)][1] -
             k[static_cast<std::size_t>(j)][0] * k[static_cast<std::size_t>(i)][1];
  }
  return p;
}

bool det_vanishes_on_subspace(const MinorCoefficientMatrix& mc,
                              const std::array<std::array<Rational, 2>, 4>& k) {
  auto p = plucker_of_columns(k);
  for (const auto& row : mc.rows) {
    Rational dot(0);
    for (std::size_t i = 0; i < 6; ++i) dot += row[i] * p[i];
    if (!dot.is_zero()) return false;
  }
  return true;
}

bool verify_witness(const FamilySpec& f, const WitnessMatrix& w) {
  // Split K = A + sqrt(d) B; det(M(A + sqrt(d) B)) has a rational part
  // det(MA) + d det(MB) and a sqrt(d) part (the mixed cofactor sum); the
  // witness is valid iff both vanish identically.
  PolyMat a(4, 2), b(4, 2);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      a.at(r, c) = Poly::constant(w.k[r][c].a);
      b.at(r, c) = Poly::constant(w.k[r][c].b);
    }
  PolyMat m = f.matrix();
  PolyMat pa = m * a, pb = m * b;
  Poly det_a = pa.at(0, 0) * pa.at(1, 1) - pa.at(0, 1) * pa.at(1, 0);
  Poly det_b = pb.at(0, 0) * pb.at(1, 1) - pb.at(0, 1) * pb.at(1, 0);
  Poly rational_part = det_a + det_b.scaled(w.d);
  Poly mixed = pa.at(0, 0) * pb.at(1, 1) + pb.at(0, 0) * pa.at(1, 1) -
               pa.at(0, 1) * pb.at(1, 0) - pb.at(0, 1) * pa.at(1, 0);
  return rational_part.is_zero() && mixed.is_zero();
}

namespace {

WitnessMatrix witness_from_plucker(const std::vector<QuadExt>& p, const Rational& d) {
  // Contraction: with P antisymmetric and p_{i0 j0} != 0, the rows
  // u_k = P[i0][k], w_k = P[j0][k] span the plane (u ^ w = p_{i0 j0} p).
  QuadExt pm[4][4];
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) pm[r][c] = {Rational(0), Rational(0)};
  for (std::size_t idx = 0; idx < 6; ++idx) {
    auto [i, j] = kPluckerPairs[idx];
    pm[i][j] = p[idx];
    pm[j][i] = qe_neg(p[idx]);
  }
  int i0 = -1, j0 = -1;
  for (std::size_t idx = 0; idx < 6; ++idx) {
    if (!p[idx].is_zero()) {
      i0 = kPluckerPairs[idx].first;
      j0 = kPluckerPairs[idx].second;
      break;
    }
  }
  if (i0 < 0)
    throw Error(ErrorCode::WitnessReconstructionFailed, "isotropic vector is zero");
  WitnessMatrix w;
  w.d = d;
  for (std::size_t r = 0; r < 4; ++r) {
    w.k[r][0] = pm[static_cast<std::size_t>(i0)][r];
    w.k[r][1] = pm[static_cast<std::size_t>(j0)][r];
  }
  return w;
}

// q(p) over Q(sqrt(d)): both the rational and the sqrt(d) component must vanish.
bool plucker_quadric_vanishes(const std::vector<QuadExt>& p, const Rational& d) {
  auto term = [&](std::size_t x, std::size_t y) { return qe_mul(p[x], p[y], d); };
  QuadExt q = qe_add(qe_sub(term(0, 5), term(1, 4)), term(2, 3));
  return q.is_zero();
}

}  // namespace

SubspaceResult subspace_nondegeneracy(const FamilySpec& f) {
  return subspace_nondegeneracy(f, minor_coefficients(f));
}

SubspaceResult subspace_nondegeneracy(const FamilySpec& f,
                                      const MinorCoefficientMatrix& mc) {
  SubspaceResult out;

  // Axis probe first: a coordinate plane span(e_i, e_j) is a witness iff the
  // corresponding Plucker coordinate column of [c_h] vanishes. Probing these
  // first keeps the reported witness canonical for sparse families.
  for (std::size_t idx = 0; idx < 6; ++idx) {
    bool in_null = true;
    for (const auto& row : mc.rows)
      if (!row[idx].is_zero()) { in_null = false; break; }
    if (!in_null) continue;
    std::vector<QuadExt> p(6, QuadExt{Rational(0), Rational(0)});
    p[idx] = {Rational(1), Rational(0)};
    WitnessMatrix w = witness_from_plucker(p, Rational(0));
    if (!verify_witness(f, w))
      throw Error(ErrorCode::WitnessReconstructionFailed, "axis witness failed audit");
    out.ok = false;
    out.witness = w;
    return out;
  }

  RatMat c(mc.rows.size(), RatVec(6));
  for (std::size_t h = 0; h < mc.rows.size(); ++h)
    for (std::size_t k = 0; k < 6; ++k) c[h][k] = mc.rows[h][k];
  std::vector<RatVec> null_basis = rat_nullspace(c);
  if (null_basis.empty()) {
    out.ok = true;
    return out;
  }

  // Restrict the Plucker quadric to the null space and hunt for an isotropic
  // direction; definiteness certifies that the quadric meets N only at 0.
  const std::size_t k = null_basis.size();
  RatMat g = plucker_gram();
  RatMat qt(k, RatVec(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational acc(0);
      for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t s = 0; s < 6; ++s)
          acc += null_basis[i][r] * g[r][s] * null_basis[j][s];
      qt[i][j] = acc;
    }
  IsotropicSearch iso = isotropic_vector(qt);
  if (iso.definite) {
    out.ok = true;
    return out;
  }

  // Map back to R^6 and rebuild the plane.
  std::vector<QuadExt> p(6, QuadExt{Rational(0), Rational(0)});
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t i = 0; i < k; ++i)
      p[r] = qe_add(p[r], qe_scale(iso.vec[i], null_basis[i][r]));
  if (!plucker_quadric_vanishes(p, iso.d))
    throw Error(ErrorCode::WitnessReconstructionFailed,
                "isotropic point left the Plucker quadric");
  WitnessMatrix w = witness_from_plucker(p, iso.d);
  if (!verify_witness(f, w))
    throw Error(ErrorCode::WitnessReconstructionFailed, "witness failed symbolic audit");
  out.ok = false;
  out.witness = w;
  return out;
}

bool frame_independence(const FamilySpec& f) {
  // gamma1, gamma2 in R^2 are dependent at t iff det of the gamma block
  // vanishes there; independence on all of [0,1] means no root in [0,1].
  Poly det = det_poly(f.gamma_block());
  if (det.is_zero()) return false;
  if (det.eval(Rational(0)).is_zero()) return false;
  return count_real_roots(det, Rational(0), Rational(1)) == 0;
}

FamilySpec rotate_label_basis(const FamilySpec& f, const RatMat& r) {
  if (r.size() != 4) throw Error(ErrorCode::ShapeMismatch, "R must be 4x4");
  RatMat rinv = rat_inverse(r);  // throws SingularMatrix
  PolyMat rp(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rp.at(i, j) = Poly::constant(rinv[i][j]);
  PolyMat m = f.matrix() * rp;
  std::array<Poly, 4> nb1, nb2;
  for (std::size_t c = 0; c < 4; ++c) {
    nb1[c] = m.at(0, c);
    nb2[c] = m.at(1, c);
  }
  return FamilySpec::create(std::move(nb1), std::move(nb2), f.name + "@rotated");
}

CheckReport full_check(const FamilySpec& f) {
  CheckReport rep;
  rep.minors = minor_coefficients(f);  // AllMinorsZero propagates
  rep.wronskian = wronskian_check(f);
  rep.frame_independent = frame_independence(f);
  SubspaceResult sub = subspace_nondegeneracy(f, rep.minors);
  rep.subspace_ok = sub.ok;
  rep.witness = sub.witness;
  if (!rep.subspace_ok) {
    // Does a single line die identically? Kernel of the stacked coefficient
    // matrix of M(t) (all t-degrees of both rows, 4 columns).
    int maxdeg = 0;
    for (std::size_t c = 0; c < 4; ++c)
      maxdeg = std::max({maxdeg, f.b1[c].degree(), f.b2[c].degree()});
    RatMat stacked;
    for (int h = 0; h <= maxdeg; ++h) {
      RatVec r1(4), r2(4);
      for (std::size_t c = 0; c < 4; ++c) {
        r1[c] = f.b1[c].coeff(h);
        r2[c] = f.b2[c].coeff(h);
      }
      stacked.push_back(std::move(r1));
      stacked.push_back(std::move(r2));
    }
    auto kernel = rat_nullspace(stacked);
    rep.line_dies = !kernel.empty();
    if (!kernel.empty()) {
      std::array<Rational, 4> line;
      for (std::size_t i = 0; i < 4; ++i) line[i] = kernel.front()[i];
      rep.dying_line = line;
    }
  }
  rep.exponents = ExponentReport::from_degree(rep.minors.B);
  return rep;
}

}  // namespace projlab
