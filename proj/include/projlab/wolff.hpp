#pragma once

#include "projlab/semialg.hpp"
#include "projlab/tube.hpp"

namespace projlab {

/// Tubes >= lambda_frac-occupied by a semialgebraic set, against the
/// C_cal |S| delta^(-2-eps) lambda^(-N) budget.
struct CaptureReport {
  double delta = 0.0;
  double lambda_frac = 0.0;
  std::int64_t tube_count = 0;
  std::int64_t captured = 0;
  double set_volume = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

struct CaptureOptions {
  int N = 1;          // exponent from the family's report
  double epsilon = 0.1;
  double c_cal = 1.0;
};

/// A tube is captured when at least lambda_frac of its raster cells land in
/// the raster of S (cell-count semantics throughout).
CaptureReport capture_count(const NumericFamily& nf, const std::vector<Tube>& tubes,
                            const SemialgebraicSpec& s, double lambda_frac,
                            const CaptureOptions& opts);
CaptureReport capture_count(const NumericFamily& nf, const std::vector<Tube>& tubes,
                            const RasterSet& s_raster, double lambda_frac,
                            const CaptureOptions& opts);

struct WongkewResult {
  double measured = 0.0;
  double bound = 0.0;
  bool ok = false;
};

/// Volume of the rho-neighborhood of {Q = 0} inside B(center, R), measured on
/// a local rho/4 grid with the first-order margin |Q| <= rho ||grad Q||, against
/// the calibrated sum_j c_j d^j rho^j R^(3-j) budget (n = 3, m = 1).
WongkewResult wongkew_check(const TriPoly& variety, double rho, double r_ball,
                            const std::array<double, 3>& center,
                            const std::array<double, 3>& coeffs);

/// Number of maximal subintervals of [0,1] on which the curve t -> (t, Phi(z,t))
/// satisfies every constraint; exact via Sturm machinery on the composed
/// univariate polynomials. Thickened constraints use margin 2*delta_thick
/// times the Euclidean gradient norm along the curve (a polynomial condition).
int curve_component_count(const FamilySpec& f, const Label& z,
                          const SemialgebraicSpec& s, const Rational& delta_thick);

}  // namespace projlab
