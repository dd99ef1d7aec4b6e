#include "projlab/semialg.hpp"

#include <algorithm>
#include <cmath>

#include "projlab/errors.hpp"

namespace projlab {

TriPoly::TriPoly(std::vector<TriMono> monomials) : m_(std::move(monomials)) { normalize(); }

void TriPoly::normalize() {
  std::sort(m_.begin(), m_.end(),
            [](const TriMono& a, const TriMono& b) { return a.e < b.e; });
  std::vector<TriMono> out;
  for (auto& mono : m_) {
    if (!out.empty() && out.back().e == mono.e)
      out.back().c += mono.c;
    else
      out.push_back(mono);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const TriMono& m) { return m.c.is_zero(); }),
            out.end());
  m_ = std::move(out);
}

TriPoly TriPoly::constant(const Rational& c) { return monomial(c, 0, 0, 0); }

TriPoly TriPoly::monomial(const Rational& c, int e0, int e1, int e2) {
  if (c.is_zero()) return TriPoly();
  return TriPoly({TriMono{{e0, e1, e2}, c}});
}

int TriPoly::total_degree() const {
  int d = 0;
  for (const auto& m : m_) d = std::max(d, m.e[0] + m.e[1] + m.e[2]);
  return d;
}

double TriPoly::eval(double t, double y1, double y2) const {
  double acc = 0.0;
  for (const auto& m : m_) {
    double v = m.c.to_double();
    for (int i = 0; i < m.e[0]; ++i) v *= t;
    for (int i = 0; i < m.e[1]; ++i) v *= y1;
    for (int i = 0; i < m.e[2]; ++i) v *= y2;
    acc += v;
  }
  return acc;
}

TriPoly TriPoly::partial(int var) const {
  std::vector<TriMono> out;
  for (const auto& m : m_) {
    if (m.e[static_cast<std::size_t>(var)] == 0) continue;
    TriMono d = m;
    d.c = m.c * Rational(m.e[static_cast<std::size_t>(var)]);
    d.e[static_cast<std::size_t>(var)] -= 1;
    out.push_back(d);
  }
  return TriPoly(std::move(out));
}

std::array<double, 3> TriPoly::gradient(double t, double y1, double y2) const {
  return {partial(0).eval(t, y1, y2), partial(1).eval(t, y1, y2),
          partial(2).eval(t, y1, y2)};
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  std::vector<TriMono> out = a.m_;
  out.insert(out.end(), b.m_.begin(), b.m_.end());
  return TriPoly(std::move(out));
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  std::vector<TriMono> out;
  for (const auto& x : a.m_)
    for (const auto& y : b.m_)
      out.push_back(TriMono{{x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2]}, x.c * y.c});
  return TriPoly(std::move(out));
}

TriPoly TriPoly::negated() const {
  std::vector<TriMono> out = m_;
  for (auto& m : out) m.c = -m.c;
  return TriPoly(std::move(out));
}

Poly TriPoly::compose(const Poly& phi1, const Poly& phi2) const {
  Poly acc;
  for (const auto& m : m_) {
    Poly term = Poly::monomial(m.c, m.e[0]);
    if (m.e[1] > 0) term = term * phi1.pow(static_cast<unsigned>(m.e[1]));
    if (m.e[2] > 0) term = term * phi2.pow(static_cast<unsigned>(m.e[2]));
    acc = acc + term;
  }
  return acc;
}

int SemialgebraicSpec::complexity() const {
  int sum = 0;
  for (const auto& c : constraints) sum += c.q.total_degree();
  return sum;
}

SemialgebraicSpec SemialgebraicSpec::wisewell_surface() {
  SemialgebraicSpec s;
  s.name = "wisewell-surface";
  // y1 - t*y2 = 0, thickened.
  TriPoly q = TriPoly::monomial(Rational(1), 0, 1, 0) +
              TriPoly::monomial(Rational(-1), 1, 0, 1);
  s.constraints.push_back({q, Relation::eq_thick});
  return s;
}

bool cell_center_in_set(const SemialgebraicSpec& s, double delta,
                        const std::array<double, 3>& c) {
  for (const auto& con : s.constraints) {
    double v = con.q.eval(c[0], c[1], c[2]);
    if (con.rel == Relation::ge0) {
      if (v < 0.0) return false;
    } else {
      auto g = con.q.gradient(c[0], c[1], c[2]);
      double gn = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
      if (std::abs(v) > 2.0 * delta * (gn + 1e-12)) return false;
    }
  }
  return true;
}

RasterSet rasterize_set_serial(const SemialgebraicSpec& s, double delta) {
  RasterSet out;
  out.delta = delta;
  out.n = grid_dims(delta);
  const std::int64_t n = out.n;
  out.mask.assign(static_cast<std::size_t>(n * n * n), 0);
  std::int64_t count = 0;
  for (std::int64_t it = 0; it < n; ++it)
    for (std::int64_t i1 = 0; i1 < n; ++i1)
      for (std::int64_t i2 = 0; i2 < n; ++i2) {
        std::array<double, 3> c{(it + 0.5) * delta, (i1 + 0.5) * delta, (i2 + 0.5) * delta};
        if (cell_center_in_set(s, delta, c)) {
          out.mask[static_cast<std::size_t>((it * n + i1) * n + i2)] = 1;
          ++count;
        }
      }
  out.cell_count = count;
  return out;
}

RasterSet rasterize_set(const SemialgebraicSpec& s, double delta) {
  RasterSet out;
  out.delta = delta;
  out.n = grid_dims(delta);
  const std::int64_t n = out.n;
  out.mask.assign(static_cast<std::size_t>(n * n * n), 0);
  std::vector<std::int64_t> per_slice(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t it = 0; it < n; ++it) {
    std::int64_t count = 0;
    for (std::int64_t i1 = 0; i1 < n; ++i1)
      for (std::int64_t i2 = 0; i2 < n; ++i2) {
        std::array<double, 3> c{(it + 0.5) * delta, (i1 + 0.5) * delta, (i2 + 0.5) * delta};
        if (cell_center_in_set(s, delta, c)) {
          out.mask[static_cast<std::size_t>((it * n + i1) * n + i2)] = 1;
          ++count;
        }
      }
    per_slice[static_cast<std::size_t>(it)] = count;
  }
  for (auto c : per_slice) out.cell_count += c;
  return out;
}

}  // namespace projlab
