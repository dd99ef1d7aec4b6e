#include "projlab/experiment.hpp"

#include <cmath>

#include "projlab/errors.hpp"

namespace projlab {

ScalingFit fit_linear(const std::vector<std::array<double, 2>>& points) {
  ScalingFit fit;
  fit.points = points;
  const double n = static_cast<double>(points.size());
  if (points.size() < 2) {
    fit.slope = 0.0;
    fit.intercept = points.empty() ? 0.0 : points[0][1];
    return fit;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    sx += p[0];
    sy += p[1];
    sxx += p[0] * p[0];
    sxy += p[0] * p[1];
  }
  double denom = n * sxx - sx * sx;
  fit.slope = denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0, mean = sy / n;
  for (const auto& p : points) {
    double pred = fit.intercept + fit.slope * p[0];
    ss_res += (p[1] - pred) * (p[1] - pred);
    ss_tot += (p[1] - mean) * (p[1] - mean);
  }
  fit.r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

std::vector<Label> sample_separated_labels(double delta, Rng& rng,
                                           const LabelSampleOptions& opts) {
  const int m = grid_dims(delta);
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  // Spatial hash for the rejection path only.
  std::vector<std::vector<std::array<double, 2>>> buckets;
  if (opts.v_jitter > 0.0)
    buckets.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), {});
  auto bucket_of = [&](double v0, double v1) {
    int a = std::min(m - 1, std::max(0, static_cast<int>(std::floor(v0 / delta))));
    int b = std::min(m - 1, std::max(0, static_cast<int>(std::floor(v1 / delta))));
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b);
  };

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Label l;
      l.x = {rng.u01(), rng.u01()};
      double base0 = (i + 0.5) * delta, base1 = (j + 0.5) * delta;
      if (opts.v_jitter <= 0.0) {
        l.v = {base0, base1};
      } else {
        bool placed = false;
        for (int attempt = 0; attempt < opts.max_attempts && !placed; ++attempt) {
          double v0 = base0 + opts.v_jitter * delta * (2.0 * rng.u01() - 1.0);
          double v1 = base1 + opts.v_jitter * delta * (2.0 * rng.u01() - 1.0);
          bool ok = true;
          int ci = static_cast<int>(std::floor(v0 / delta));
          int cj = static_cast<int>(std::floor(v1 / delta));
          for (int a = ci - 2; a <= ci + 2 && ok; ++a)
            for (int b = cj - 2; b <= cj + 2 && ok; ++b) {
              if (a < 0 || a >= m || b < 0 || b >= m) continue;
              for (const auto& other :
                   buckets[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) +
                           static_cast<std::size_t>(b)]) {
                double dx = v0 - other[0], dy = v1 - other[1];
                if (dx * dx + dy * dy < delta * delta) {
                  ok = false;
                  break;
                }
              }
            }
          if (ok) {
            l.v = {v0, v1};
            buckets[bucket_of(v0, v1)].push_back(l.v);
            placed = true;
          }
        }
        if (!placed) continue;  // rejection exhausted: drop this grid site
      }
      out.push_back(l);
    }
  }
  return out;
}

std::vector<Tube> tubes_from_labels(const std::vector<Label>& labels, double delta,
                                    double alpha0, double lambda) {
  std::vector<Tube> tubes;
  tubes.reserve(labels.size());
  for (const Label& l : labels) tubes.push_back(Tube{l, alpha0, lambda, delta});
  return tubes;
}

KakeyaExperiment linear_kakeya_experiment(const FamilySpec& f,
                                          const std::vector<double>& ladder, double p,
                                          std::uint64_t seed) {
  if (ladder.size() < 3)
    throw Error(ErrorCode::LadderTooShort, "ladder needs at least 3 points");
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (!(ladder[i] < ladder[i - 1]))
      throw Error(ErrorCode::LadderTooShort, "ladder must be strictly decreasing");

  ExponentReport rep = ExponentReport::from_degree(minor_coefficients(f).B);
  double target = 0.0;
  if (rep.p.has_value()) {
    double two_beta = rep.p->to_double();
    if (p < two_beta - 1e-12)
      throw Error(ErrorCode::InvariantViolation, "p below 2*beta of the family");
    double four_beta = 4.0 * rep.beta->to_double();
    target = -2.0 + (four_beta - 0.5) / p;
  }

  NumericFamily nf(f);
  Rng rng(seed);
  KakeyaExperiment out;
  out.p = p;
  out.target_exponent = target;
  std::vector<std::array<double, 2>> pts;
  for (std::size_t li = 0; li < ladder.size(); ++li) {
    double delta = ladder[li];
    Rng local = rng.derive(li);
    auto labels = sample_separated_labels(delta, local);
    for (const Label& l : labels) out.out_of_range_labels += l.in_unit_box() ? 0 : 1;
    auto tubes = tubes_from_labels(labels, delta);
    Grid3 g = accumulate_field(nf, tubes, delta);
    FieldStats st;
    st.delta = delta;
    st.tube_count = static_cast<std::int64_t>(tubes.size());
    st.max_count = g.max_count();
    st.support_cells = g.support_cells();
    st.lp[1.0] = g.delta * g.delta * g.delta * static_cast<double>(g.total_incidences());
    st.lp[p] = lp_norm(g, p);
    out.per_delta.push_back(std::move(st));
    pts.push_back({std::log(delta), std::log(out.per_delta.back().lp.at(p))});
  }
  out.fit = fit_linear(pts);
  return out;
}

}  // namespace projlab
