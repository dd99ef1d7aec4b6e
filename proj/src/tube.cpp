#include "projlab/tube.hpp"

#include "projlab/errors.hpp"

namespace projlab {

namespace {

std::vector<double> to_doubles(const Poly& p) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) v.push_back(p.coeff(i).to_double());
  return v;
}

double abs_coeff_sum(const Poly& p) {
  double s = 0.0;
  for (int i = 0; i <= p.degree(); ++i) s += std::abs(p.coeff(i).to_double());
  return s;
}

}  // namespace

NumericFamily::NumericFamily(const FamilySpec& f) {
  for (std::size_t j = 0; j < 4; ++j) {
    b1_[j] = to_doubles(f.b1[j]);
    b2_[j] = to_doubles(f.b2[j]);
    Poly d1 = f.b1[j].derivative(), d2 = f.b2[j].derivative();
    db1_[j] = to_doubles(d1);
    db2_[j] = to_doubles(d2);
    dsum1_[j] = abs_coeff_sum(d1);
    dsum2_[j] = abs_coeff_sum(d2);
  }
}

std::array<double, 2> phi(const FamilySpec& f, const Label& z, double t) {
  return NumericFamily(f).phi(z.z4(), t);
}

std::array<double, 3> tangent(const FamilySpec& f, const Label& z, double t) {
  return NumericFamily(f).tangent(z.z4(), t);
}

double wedge(const std::array<double, 3>& u, const std::array<double, 3>& w) {
  double nu = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  double nw = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  if (nu == 0.0 || nw == 0.0)
    throw Error(ErrorCode::ZeroVector, "wedge of a zero vector");
  double cx = u[1] * w[2] - u[2] * w[1];
  double cy = u[2] * w[0] - u[0] * w[2];
  double cz = u[0] * w[1] - u[1] * w[0];
  double val = std::sqrt(cx * cx + cy * cy + cz * cz) / (nu * nw);
  return std::min(1.0, std::max(0.0, val));
}

bool tube_contains(const NumericFamily& nf, const Tube& tube, const std::array<double, 3>& p) {
  double t = p[0];
  if (t < tube.alpha0 || t > tube.alpha0 + tube.lambda) return false;
  auto c = nf.phi(tube.label.z4(), t);
  double dy1 = p[1] - c[0], dy2 = p[2] - c[1];
  return dy1 * dy1 + dy2 * dy2 <= tube.delta * tube.delta;
}

bool tube_contains(const FamilySpec& f, const Tube& tube, const std::array<double, 3>& p) {
  return tube_contains(NumericFamily(f), tube, p);
}

std::vector<Label> select_separated_labels(
    const std::vector<Label>& candidates, double delta, SeparationMode mode,
    const std::array<std::array<double, 4>, 2>* plane) {
  auto key = [&](const Label& l) -> std::array<double, 2> {
    if (mode == SeparationMode::direction_v || plane == nullptr)
      return l.v;
    auto z = l.z4();
    std::array<double, 2> out{0.0, 0.0};
    for (int r = 0; r < 2; ++r)
      for (std::size_t j = 0; j < 4; ++j)
        out[static_cast<std::size_t>(r)] += (*plane)[static_cast<std::size_t>(r)][j] * z[j];
    return out;
  };
  std::vector<Label> kept;
  std::vector<std::array<double, 2>> kept_keys;
  const double d2 = delta * delta;
  for (const Label& cand : candidates) {
    auto k = key(cand);
    bool ok = true;
    for (const auto& other : kept_keys) {
      double dx = k[0] - other[0], dy = k[1] - other[1];
      if (dx * dx + dy * dy < d2) {
        ok = false;
        break;
      }
    }
    if (ok) {
      kept.push_back(cand);
      kept_keys.push_back(k);
    }
  }
  return kept;
}

}  // namespace projlab
