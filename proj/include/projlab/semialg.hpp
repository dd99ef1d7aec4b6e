#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "projlab/grid.hpp"
#include "projlab/poly.hpp"

namespace projlab {

/// Trivariate polynomial over (t, y1, y2) with exact rational coefficients,
/// stored as a sparse monomial list.
struct TriMono {
  std::array<int, 3> e{0, 0, 0};
  Rational c;
};

class TriPoly {
 public:
  TriPoly() = default;
  explicit TriPoly(std::vector<TriMono> monomials);

  static TriPoly constant(const Rational& c);
  /// Single monomial c * t^e0 * y1^e1 * y2^e2.
  static TriPoly monomial(const Rational& c, int e0, int e1, int e2);

  const std::vector<TriMono>& monomials() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  int total_degree() const;

  double eval(double t, double y1, double y2) const;
  std::array<double, 3> gradient(double t, double y1, double y2) const;

  TriPoly partial(int var) const;  // exact formal partial derivative
  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  TriPoly negated() const;

  /// Exact substitution Q(t, phi1(t), phi2(t)).
  Poly compose(const Poly& phi1, const Poly& phi2) const;

 private:
  void normalize();
  std::vector<TriMono> m_;  // sorted by exponent triple, nonzero coefficients
};

enum class Relation { ge0, eq_thick };

struct Constraint {
  TriPoly q;
  Relation rel = Relation::ge0;
};

/// A semialgebraic membership test: the intersection of {q >= 0} half-spaces
/// and thickened varieties {|q| <= 2 delta ||grad q||}. Complexity is the sum
/// of constraint degrees.
struct SemialgebraicSpec {
  std::string name;
  std::vector<Constraint> constraints;

  int complexity() const;
  /// The thickened Wisewell surface y1 = t*y2 in lab coordinates.
  static SemialgebraicSpec wisewell_surface();
};

inline constexpr int kDefaultComplexityMax = 12;

/// Occupied-cell mask of the set on the delta-grid of [0,1]^3, with cell
/// centers as membership probes; thickened equalities use the superset-biased
/// margin |q| <= 2 delta (||grad q||_2 + eps).
struct RasterSet {
  double delta = 0.0;
  int n = 0;
  std::vector<std::uint8_t> mask;
  std::int64_t cell_count = 0;

  double volume() const { return static_cast<double>(cell_count) * delta * delta * delta; }
  bool contains(std::int64_t flat) const { return mask[static_cast<std::size_t>(flat)] != 0; }
};

RasterSet rasterize_set(const SemialgebraicSpec& s, double delta);
RasterSet rasterize_set_serial(const SemialgebraicSpec& s, double delta);

bool cell_center_in_set(const SemialgebraicSpec& s, double delta,
                        const std::array<double, 3>& center);

}  // namespace projlab
