#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "projlab/errors.hpp"
#include "projlab/family.hpp"
#include "projlab/quadform.hpp"

using namespace projlab;

namespace {

Poly pol(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

struct Gen {
  std::mt19937_64 eng;
  explicit Gen(std::uint64_t seed) : eng(seed) {}
  long i(long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Poly int_poly(int maxdeg, long amp = 3) {
    std::vector<Rational> c;
    int d = static_cast<int>(i(0, maxdeg));
    for (int k = 0; k <= d; ++k) c.emplace_back(i(-amp, amp));
    return Poly(std::move(c));
  }
  std::array<Poly, 4> int_row(int maxdeg) {
    while (true) {
      std::array<Poly, 4> r{int_poly(maxdeg), int_poly(maxdeg), int_poly(maxdeg),
                            int_poly(maxdeg)};
      for (const auto& p : r)
        if (!p.is_zero()) return r;
    }
  }
  FamilySpec random_family(int maxdeg) {
    while (true) {
      try {
        FamilySpec f = FamilySpec::create(int_row(maxdeg), int_row(maxdeg), "random");
        minor_coefficients(f);  // reject identically rank<2 families up front
        return f;
      } catch (const Error&) {
      }
    }
  }
  std::array<std::array<Rational, 2>, 4> random_plane() {
    while (true) {
      std::array<std::array<Rational, 2>, 4> k;
      for (auto& row : k)
        for (auto& e : row) e = Rational(i(-5, 5), i(1, 4));
      for (const auto& p : plucker_of_columns(k))
        if (!p.is_zero()) return k;  // rank 2
    }
  }
};

// Column span equality for a rational witness against a rational 4x2 target.
bool same_plane(const WitnessMatrix& w, const std::array<std::array<Rational, 2>, 4>& k) {
  if (!w.is_rational()) return false;
  RatMat rows;
  for (int c = 0; c < 2; ++c) {
    RatVec a(4), b(4);
    for (std::size_t r = 0; r < 4; ++r) {
      a[r] = w.k[r][static_cast<std::size_t>(c)].a;
      b[r] = k[r][static_cast<std::size_t>(c)];
    }
    rows.push_back(a);
    rows.push_back(b);
  }
  return rat_rank(rows) == 2;
}

bool survives_probes(const MinorCoefficientMatrix& mc, int n, Gen& g) {
  for (int it = 0; it < n; ++it)
    if (det_vanishes_on_subspace(mc, g.random_plane())) return false;
  return true;
}

// A family with a planted degenerate plane: M(t) = [W(t) | V(t)] P^{-1} with
// W a rank-<=1 outer product and P unimodular, so the plane spanned by the
// first two columns of P dies identically.
FamilySpec planted_family(Gen& g) {
  while (true) {
    Poly u0 = g.int_poly(1), u1 = g.int_poly(1);
    Poly w0 = g.int_poly(1), w1 = g.int_poly(1);
    PolyMat mp(2, 4);
    mp.at(0, 0) = u0 * w0;
    mp.at(1, 0) = u1 * w0;
    mp.at(0, 1) = u0 * w1;
    mp.at(1, 1) = u1 * w1;
    mp.at(0, 2) = g.int_poly(2);
    mp.at(1, 2) = g.int_poly(2);
    mp.at(0, 3) = g.int_poly(2);
    mp.at(1, 3) = g.int_poly(2);
    // Random unimodular P from integer shear operations.
    RatMat p(4, RatVec(4, Rational(0)));
    for (std::size_t i = 0; i < 4; ++i) p[i][i] = Rational(1);
    for (int s = 0; s < 6; ++s) {
      std::size_t a = static_cast<std::size_t>(g.i(0, 3));
      std::size_t b = static_cast<std::size_t>(g.i(0, 3));
      if (a == b) continue;
      Rational f(g.i(-2, 2));
      for (std::size_t c = 0; c < 4; ++c) p[a][c] += f * p[b][c];
    }
    PolyMat pinvp(4, 4);
    RatMat pinv = rat_inverse(p);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) pinvp.at(i, j) = Poly::constant(pinv[i][j]);
    PolyMat m = mp * pinvp;
    std::array<Poly, 4> b1, b2;
    for (std::size_t c = 0; c < 4; ++c) {
      b1[c] = m.at(0, c);
      b2[c] = m.at(1, c);
    }
    try {
      FamilySpec f = FamilySpec::create(b1, b2, "planted");
      minor_coefficients(f);
      return f;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("rational linear algebra basics") {
  RatMat m = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(rat_rank(m) == 1);
  auto ns = rat_nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK((ns[0][0] * Rational(1) + ns[0][1] * Rational(2)).is_zero());

  RatMat inv = rat_inverse({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}});
  CHECK(inv[0][0] == Rational(1));
  CHECK(inv[0][1] == Rational(-1));
  CHECK_THROWS_AS(rat_inverse(m), Error);
}

TEST_CASE("congruence diagonalization is exact") {
  Gen g(31337);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = static_cast<std::size_t>(g.i(1, 5));
    RatMat a(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a[i][j] = a[j][i] = Rational(g.i(-4, 4), g.i(1, 3));
    Congruence cg = symmetric_diagonalize(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc(0);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s)
            acc += cg.basis[r][i] * a[r][s] * cg.basis[s][j];
        CHECK(acc == (i == j ? cg.diag[i] : Rational(0)));
      }
  }
}

TEST_CASE("isotropic vector search") {
  auto diag = [](std::initializer_list<long> d) {
    RatMat m(d.size(), RatVec(d.size(), Rational(0)));
    std::size_t i = 0;
    for (long v : d) {
      m[i][i] = Rational(v);
      ++i;
    }
    return m;
  };
  auto q_of = [](const RatMat& m, const IsotropicSearch& s) {
    // Evaluate x^T m x over Q(sqrt(d)); both components must vanish.
    QuadExt acc{Rational(0), Rational(0)};
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        acc = qe_add(acc, qe_scale(qe_mul(s.vec[i], s.vec[j], s.d), m[i][j]));
    return acc;
  };

  CHECK(isotropic_vector(diag({1, 2, 3})).definite);
  CHECK(isotropic_vector(diag({-1, -5})).definite);

  auto s1 = isotropic_vector(diag({1, 1, -3}));  // anisotropic over Q
  REQUIRE_FALSE(s1.definite);
  CHECK_FALSE(s1.d.is_zero());
  CHECK(q_of(diag({1, 1, -3}), s1).is_zero());

  auto s2 = isotropic_vector(diag({1, -4}));  // rational solution exists
  REQUIRE_FALSE(s2.definite);
  CHECK(s2.d.is_zero());
  CHECK(q_of(diag({1, -4}), s2).is_zero());

  auto s3 = isotropic_vector(diag({1, 0, 2}));  // singular: kernel vector
  REQUIRE_FALSE(s3.definite);
  CHECK(s3.d.is_zero());
  CHECK(q_of(diag({1, 0, 2}), s3).is_zero());

  RatMat hyp = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  auto s4 = isotropic_vector(hyp);
  REQUIRE_FALSE(s4.definite);
  CHECK(q_of(hyp, s4).is_zero());
}

TEST_CASE("wronskian check") {
  auto we = wronskian_check(FamilySpec::example_family());
  CHECK(we.ok);
  CHECK(we.det == pol({0, 0, -7}));
  CHECK(we.roots_in_01 == 0);  // only root is t=0, outside (0,1]

  auto ww = wronskian_check(FamilySpec::wisewell_family());
  CHECK(ww.ok);
  CHECK(ww.det == pol({-4}));

  FamilySpec constant = FamilySpec::create(
      {pol({1}), pol({2}), pol({3}), pol({4})},
      {pol({4}), pol({3}), pol({2}), pol({1})}, "const");
  CHECK_FALSE(wronskian_check(constant).ok);

  // b2 = t * b1: columns dependent for every t.
  std::array<Poly, 4> b1{pol({1}), pol({0, 1}), pol({2}), pol({1, 1})};
  std::array<Poly, 4> b2;
  for (std::size_t i = 0; i < 4; ++i) b2[i] = b1[i] * pol({0, 1});
  CHECK_FALSE(wronskian_check(FamilySpec::create(b1, b2, "dep")).ok);
}

TEST_CASE("minor coefficients: worked families") {
  auto mce = minor_coefficients(FamilySpec::example_family());
  CHECK(mce.B == 4);
  CHECK(mce.minors[0] == pol({1}));
  CHECK(mce.minors[1] == pol({0, 0, 1}));
  CHECK(mce.minors[2] == pol({0, 0, 0, -1}));
  CHECK(mce.minors[3] == pol({0, -1}));
  CHECK(mce.minors[4] == pol({0, 0, -1}));
  CHECK(mce.minors[5] == pol({0, 0, 0, 0, -2}));
  // c_B is nonzero by construction.
  bool any = false;
  for (const auto& x : mce.rows.back()) any = any || !x.is_zero();
  CHECK(any);

  FamilySpec flat = FamilySpec::create(
      {pol({1}), pol({0}), pol({0}), pol({0})},
      {pol({0}), pol({1}), pol({0}), pol({0})}, "flat");
  auto mcf = minor_coefficients(flat);
  CHECK(mcf.B == 0);
  CHECK(mcf.rows.size() == 1);
  CHECK(mcf.rows[0][0] == Rational(1));
  for (std::size_t k = 1; k < 6; ++k) CHECK(mcf.rows[0][k].is_zero());

  // Golden values from the independent symbolic oracle:
  // minors (1, -2t, 0, 2t^2, 2t, -4t^2), so B = 2.
  auto mcw = minor_coefficients(FamilySpec::wisewell_family());
  CHECK(mcw.B == 2);
  CHECK(mcw.minors[0] == pol({1}));
  CHECK(mcw.minors[1] == pol({0, -2}));
  CHECK(mcw.minors[2].is_zero());
  CHECK(mcw.minors[3] == pol({0, 0, 2}));
  CHECK(mcw.minors[4] == pol({0, 2}));
  CHECK(mcw.minors[5] == pol({0, 0, -4}));

  // Identically rank-<2 families are rejected up front.
  std::array<Poly, 4> r{pol({1, 2}), pol({3}), pol({0, 0, 1}), pol({1})};
  std::array<Poly, 4> r3;
  for (std::size_t i = 0; i < 4; ++i) r3[i] = r[i].scaled(Rational(3));
  CHECK_THROWS_AS(minor_coefficients(FamilySpec::create(r, r3, "rank1")), Error);
}

TEST_CASE("subspace nondegeneracy: example passes, wisewell fails with the known plane") {
  auto se = subspace_nondegeneracy(FamilySpec::example_family());
  CHECK(se.ok);
  CHECK_FALSE(se.witness.has_value());

  FamilySpec wise = FamilySpec::wisewell_family();
  auto sw = subspace_nondegeneracy(wise);
  CHECK_FALSE(sw.ok);
  REQUIRE(sw.witness.has_value());
  CHECK(verify_witness(wise, *sw.witness));
  std::array<std::array<Rational, 2>, 4> e14{};
  e14[0][0] = Rational(1);
  e14[3][1] = Rational(1);
  CHECK(same_plane(*sw.witness, e14));

  // Constant rank-2 frame: every plane through the kernel collapses.
  FamilySpec constant = FamilySpec::create(
      {pol({1}), pol({0}), pol({0}), pol({0})},
      {pol({0}), pol({1}), pol({0}), pol({0})}, "const2");
  auto sc = subspace_nondegeneracy(constant);
  CHECK_FALSE(sc.ok);
  REQUIRE(sc.witness.has_value());
  CHECK(verify_witness(constant, *sc.witness));
}

TEST_CASE("verify_witness handles quadratic-extension entries") {
  // M constant [[1,0,0,0],[0,1,0,0]]; columns u=(s,1,1,0), w=(2,s,0,1) with
  // s=sqrt(2) give M*K = [[s,2],[1,s]], det = 0.
  FamilySpec f = FamilySpec::create(
      {pol({1}), pol({0}), pol({0}), pol({0})},
      {pol({0}), pol({1}), pol({0}), pol({0})}, "c");
  WitnessMatrix w;
  w.d = Rational(2);
  auto qe = [](long a, long b) { return QuadExt{Rational(a), Rational(b)}; };
  w.k = {{{qe(0, 1), qe(2, 0)}, {qe(1, 0), qe(0, 1)}, {qe(1, 0), qe(0, 0)}, {qe(0, 0), qe(1, 0)}}};
  CHECK(verify_witness(f, w));
  w.k[0][0] = qe(1, 1);
  CHECK_FALSE(verify_witness(f, w));
}

TEST_CASE("frame independence") {
  CHECK_FALSE(frame_independence(FamilySpec::example_family()));  // det -2t^4, root t=0
  FamilySpec good = FamilySpec::create(
      {pol({1}), pol({0}), pol({1}), pol({0})},
      {pol({0}), pol({1}), pol({0}), pol({1})}, "good");
  CHECK(frame_independence(good));
  // gamma blocks proportional for all t.
  FamilySpec prop = FamilySpec::create(
      {pol({1}), pol({0}), pol({0, 1}), pol({0, 2})},
      {pol({0}), pol({1}), pol({0, 0, 3}), pol({0, 0, 6})}, "prop");
  CHECK_FALSE(frame_independence(prop));
}

TEST_CASE("rotate_label_basis: identity, invariance, frame repair") {
  FamilySpec ex = FamilySpec::example_family();
  RatMat id(4, RatVec(4, Rational(0)));
  for (std::size_t i = 0; i < 4; ++i) id[i][i] = Rational(1);
  FamilySpec same = rotate_label_basis(ex, id);
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(same.b1[c] == ex.b1[c]);
    CHECK(same.b2[c] == ex.b2[c]);
  }

  RatMat sing(4, RatVec(4, Rational(0)));
  CHECK_THROWS_AS(rotate_label_basis(ex, sing), Error);

  Gen g(777);
  auto random_invertible = [&]() {
    while (true) {
      RatMat r(4, RatVec(4));
      for (auto& row : r)
        for (auto& e : row) e = Rational(g.i(-3, 3), g.i(1, 3));
      try {
        rat_inverse(r);
        return r;
      } catch (const Error&) {
      }
    }
  };
  auto base = full_check(ex);
  for (int it = 0; it < 100; ++it) {
    FamilySpec rot = rotate_label_basis(ex, random_invertible());
    auto mc = minor_coefficients(rot);
    CHECK(mc.B == 4);  // B is invariant under relabeling, exactly
  }
  // Verdict invariance, including for a failing family.
  FamilySpec wise = FamilySpec::wisewell_family();
  for (int it = 0; it < 20; ++it) {
    FamilySpec rot = rotate_label_basis(wise, random_invertible());
    auto rep = full_check(rot);
    CHECK(rep.minors.B == 2);
    CHECK(rep.exponents.N == 3);
    CHECK_FALSE(rep.subspace_ok);
    REQUIRE(rep.witness.has_value());
    CHECK(verify_witness(rot, *rep.witness));
    FamilySpec rot2 = rotate_label_basis(ex, random_invertible());
    CHECK(full_check(rot2).subspace_ok);
  }
  CHECK(base.exponents.N == 5);

  // A rational rotation restoring frame independence for the worked family
  // exists; randomized search over exactly orthogonal (Pythagorean) rotations.
  auto givens = [&](std::size_t a, std::size_t b) {
    RatMat r(4, RatVec(4, Rational(0)));
    for (std::size_t i = 0; i < 4; ++i) r[i][i] = Rational(1);
    r[a][a] = Rational(3, 5);
    r[a][b] = Rational(-4, 5);
    r[b][a] = Rational(4, 5);
    r[b][b] = Rational(3, 5);
    return r;
  };
  bool repaired = false;
  for (int it = 0; it < 200 && !repaired; ++it) {
    RatMat r(4, RatVec(4, Rational(0)));
    for (std::size_t i = 0; i < 4; ++i) r[i][i] = Rational(1);
    int steps = static_cast<int>(g.i(1, 4));
    for (int s = 0; s < steps; ++s) {
      std::size_t a = static_cast<std::size_t>(g.i(0, 3));
      std::size_t b = static_cast<std::size_t>(g.i(0, 3));
      if (a == b) continue;
      RatMat gv = givens(a, b), nr(4, RatVec(4, Rational(0)));
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          for (std::size_t k = 0; k < 4; ++k) nr[i][j] += gv[i][k] * r[k][j];
      r = nr;
    }
    FamilySpec rot = rotate_label_basis(FamilySpec::example_family(), r);
    if (frame_independence(rot)) {
      repaired = true;
      CHECK(minor_coefficients(rot).B == 4);
    }
  }
  CHECK(repaired);
}

TEST_CASE("exponent ladder: worked values and exact identities") {
  auto ex = ExponentReport::from_degree(4);
  CHECK(ex.N == 5);
  CHECK(ex.alpha == Rational(10, 13));
  REQUIRE(ex.beta.has_value());
  CHECK(*ex.beta == Rational(13, 16));
  CHECK(*ex.p == Rational(13, 8));
  CHECK(ex.dim_bound == Rational(6, 5));

  for (int b = 1; b <= 12; ++b) {
    auto r = ExponentReport::from_degree(b);
    long n = r.N;
    CHECK(r.alpha * (*r.beta) == Rational(2 * n) / Rational(4 * n - 4));
    CHECK(Rational(2) * (*r.beta) - Rational(1) == Rational(n) / Rational(2 * n - 2));
    CHECK(r.alpha > Rational(2, 3));
    CHECK(r.alpha <= Rational(1));
    CHECK(*r.beta > Rational(3, 4));
    CHECK(*r.beta <= Rational(5, 4));
  }
  // N = 1 leaves beta and p undefined (the 4N-4 denominator vanishes).
  auto flat = ExponentReport::from_degree(0);
  CHECK(flat.N == 1);
  CHECK_FALSE(flat.beta.has_value());
  CHECK(flat.dim_bound == Rational(2));
}

TEST_CASE("full check: worked families") {
  auto rep = full_check(FamilySpec::example_family());
  CHECK(rep.wronskian.ok);
  CHECK(rep.subspace_ok);
  CHECK(rep.minors.B == 4);
  CHECK(rep.exponents.N == 5);
  CHECK(rep.exponents.dim_bound == Rational(6, 5));
  CHECK_FALSE(rep.frame_independent);
  CHECK_FALSE(rep.line_dies.has_value());

  auto wr = full_check(FamilySpec::wisewell_family());
  CHECK_FALSE(wr.subspace_ok);
  REQUIRE(wr.witness.has_value());
  CHECK(verify_witness(FamilySpec::wisewell_family(), *wr.witness));
  REQUIRE(wr.line_dies.has_value());
  // No single line dies for the Wisewell frame: the stacked coefficient
  // matrix has full column rank (columns 1,2 are constant unit vectors and
  // the t-coefficients pin columns 3,4).
  CHECK_FALSE(*wr.line_dies);
}

TEST_CASE("checker agrees with the random-subspace probe oracle (scaled run)") {
  Gen g(0xC0FFEE);
  int fails = 0;
  for (int it = 0; it < 40; ++it) {
    FamilySpec f = g.random_family(4);
    auto mc = minor_coefficients(f);
    auto sub = subspace_nondegeneracy(f, mc);
    if (sub.ok) {
      CHECK(survives_probes(mc, 2000, g));
    } else {
      ++fails;
      REQUIRE(sub.witness.has_value());
      CHECK(verify_witness(f, *sub.witness));
    }
  }
  // Planted degeneracies exercise the witness path deterministically.
  for (int it = 0; it < 25; ++it) {
    FamilySpec f = planted_family(g);
    auto sub = subspace_nondegeneracy(f);
    REQUIRE_FALSE(sub.ok);
    REQUIRE(sub.witness.has_value());
    CHECK(verify_witness(f, *sub.witness));
  }
}
