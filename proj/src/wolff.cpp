#include "projlab/wolff.hpp"

#include <algorithm>
#include <cmath>

#include "projlab/errors.hpp"
#include "projlab/par.hpp"
#include "projlab/raster.hpp"

namespace projlab {

CaptureReport capture_count(const NumericFamily& nf, const std::vector<Tube>& tubes,
                            const RasterSet& s_raster, double lambda_frac,
                            const CaptureOptions& opts) {
  if (lambda_frac <= 0.0 || lambda_frac > 1.0)
    throw Error(ErrorCode::InvariantViolation, "lambda_frac must lie in (0,1]");
  const double delta = s_raster.delta;
  const std::int64_t m = static_cast<std::int64_t>(tubes.size());
  std::vector<std::uint8_t> captured_flags(tubes.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < m; ++i) {
    const Tube& t = tubes[static_cast<std::size_t>(i)];
    auto cells = rasterize_tube(nf, t, delta);
    if (cells.empty()) continue;
    std::int64_t inside = 0;
    for (std::int64_t c : cells) inside += s_raster.contains(c) ? 1 : 0;
    if (static_cast<double>(inside) >=
        lambda_frac * static_cast<double>(cells.size()))
      captured_flags[static_cast<std::size_t>(i)] = 1;
  }
  CaptureReport rep;
  rep.delta = delta;
  rep.lambda_frac = lambda_frac;
  rep.tube_count = m;
  for (auto f : captured_flags) rep.captured += f;
  rep.set_volume = s_raster.volume();
  rep.bound = opts.c_cal * rep.set_volume * std::pow(delta, -2.0 - opts.epsilon) *
              std::pow(lambda_frac, -static_cast<double>(opts.N));
  rep.ratio = rep.bound > 0.0 ? static_cast<double>(rep.captured) / rep.bound : 0.0;
  return rep;
}

CaptureReport capture_count(const NumericFamily& nf, const std::vector<Tube>& tubes,
                            const SemialgebraicSpec& s, double lambda_frac,
                            const CaptureOptions& opts) {
  if (tubes.empty())
    throw Error(ErrorCode::InvariantViolation, "capture_count needs tubes");
  return capture_count(nf, tubes, rasterize_set(s, tubes.front().delta), lambda_frac,
                       opts);
}

WongkewResult wongkew_check(const TriPoly& variety, double rho, double r_ball,
                            const std::array<double, 3>& center,
                            const std::array<double, 3>& coeffs) {
  if (variety.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "wongkew_check needs a nonzero polynomial");
  if (rho > r_ball)
    throw Error(ErrorCode::InvariantViolation, "wongkew_check needs rho <= R");
  const double h = rho / 4.0;
  const std::int64_t half = static_cast<std::int64_t>(std::ceil(r_ball / h)) + 1;
  const std::int64_t side = 2 * half + 1;

  // Counting in fixed slabs keeps the result schedule-independent.
  double measured_cells = deterministic_block_sum(side, [&](std::int64_t ix) {
    std::int64_t local = 0;
    double x = center[0] + static_cast<double>(ix - half) * h;
    for (std::int64_t iy = 0; iy < side; ++iy) {
      double y = center[1] + static_cast<double>(iy - half) * h;
      for (std::int64_t iz = 0; iz < side; ++iz) {
        double z = center[2] + static_cast<double>(iz - half) * h;
        double dx = x - center[0], dy = y - center[1], dz = z - center[2];
        if (dx * dx + dy * dy + dz * dz > r_ball * r_ball) continue;
        double v = variety.eval(x, y, z);
        auto g = variety.gradient(x, y, z);
        double gn = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
        if (std::abs(v) <= rho * (gn + 1e-12)) ++local;
      }
    }
    return static_cast<double>(local);
  });

  WongkewResult out;
  out.measured = measured_cells * h * h * h;
  const double d = static_cast<double>(variety.total_degree());
  out.bound = 0.0;
  double dj = d, rj = rho, rb = r_ball * r_ball;  // j = 1: d^1 rho^1 R^2
  for (int j = 1; j <= 3; ++j) {
    out.bound += coeffs[static_cast<std::size_t>(j - 1)] * dj * rj * rb;
    dj *= d;
    rj *= rho;
    rb /= r_ball;
  }
  out.ok = out.measured <= out.bound;
  return out;
}

namespace {

struct ActiveConstraints {
  std::vector<Poly> polys;  // each must be >= 0
  bool empty_set = false;   // a constant constraint failed outright
};

ActiveConstraints compose_constraints(const FamilySpec& f, const Label& z,
                                      const SemialgebraicSpec& s,
                                      const Rational& delta_thick) {
  std::array<Rational, 4> zr;
  auto zd = z.z4();
  for (std::size_t i = 0; i < 4; ++i) zr[i] = Rational::from_double(zd[i]);
  Poly phi1, phi2;
  for (std::size_t j = 0; j < 4; ++j) {
    phi1 = phi1 + f.b1[j].scaled(zr[j]);
    phi2 = phi2 + f.b2[j].scaled(zr[j]);
  }

  ActiveConstraints out;
  for (const auto& con : s.constraints) {
    Poly g = con.q.compose(phi1, phi2);
    Poly test;
    if (con.rel == Relation::ge0) {
      test = g;
    } else {
      Poly gt = con.q.partial(0).compose(phi1, phi2);
      Poly g1 = con.q.partial(1).compose(phi1, phi2);
      Poly g2 = con.q.partial(2).compose(phi1, phi2);
      Rational margin2 = Rational(4) * delta_thick * delta_thick;
      test = (gt * gt + g1 * g1 + g2 * g2).scaled(margin2) - g * g;
    }
    if (test.is_zero()) continue;  // satisfied everywhere
    if (test.degree() == 0) {
      if (test.coeff(0).sign() < 0) out.empty_set = true;
      continue;
    }
    out.polys.push_back(test);
  }
  return out;
}

}  // namespace

int curve_component_count(const FamilySpec& f, const Label& z,
                          const SemialgebraicSpec& s, const Rational& delta_thick) {
  ActiveConstraints ac = compose_constraints(f, z, s, delta_thick);
  if (ac.empty_set) return 0;
  if (ac.polys.empty()) return 1;

  Poly prod = Poly::constant(Rational(1));
  for (const auto& g : ac.polys) prod = prod * g;
  Poly psq = prod.squarefree_part();

  const Rational zero(0), one(1);
  auto sat_rational = [&](const Rational& t) {
    for (const auto& g : ac.polys)
      if (g.eval(t).sign() < 0) return false;
    return true;
  };

  std::vector<IsolatingInterval> roots =
      isolate_roots(prod, zero, one, Rational(1, 1024));

  SturmChain chain(psq);
  auto sat_at_root = [&](IsolatingInterval iv) {
    if (iv.exact()) return sat_rational(iv.a);
    Rational a = iv.a, b = iv.b;
    for (const auto& g : ac.polys) {
      Poly common = Poly::gcd(psq, g);
      bool zero_here = common.degree() > 0 && count_real_roots(common, a, b) == 1;
      if (zero_here) continue;  // g(tau) = 0: satisfied with equality
      // Shrink around tau until g is root-free on (a, b), then a carries the sign.
      while (count_real_roots(g, a, b) > 0) {
        Rational mid = (a + b) * Rational(1, 2);
        if (psq.eval(mid).is_zero()) return sat_rational(mid);  // tau found exactly
        if (chain.count(a, mid) == 1)
          b = mid;
        else
          a = mid;
      }
      if (g.eval(a).sign() < 0) return false;
    }
    return true;
  };

  // Sites alternate: [0], gap, tau_1, gap, ..., tau_m, gap, [1].
  std::vector<bool> member;
  member.push_back(sat_rational(zero));
  Rational prev_right = zero;
  for (const auto& iv : roots) {
    Rational rep = (prev_right + iv.a) * Rational(1, 2);
    member.push_back(sat_rational(rep));
    member.push_back(sat_at_root(iv));
    prev_right = iv.exact() ? iv.a : iv.b;
  }
  member.push_back(sat_rational((prev_right + one) * Rational(1, 2)));
  member.push_back(sat_rational(one));

  int components = 0;
  bool in_run = false;
  for (bool m : member) {
    if (m && !in_run) ++components;
    in_run = m;
  }
  return components;
}

}  // namespace projlab
