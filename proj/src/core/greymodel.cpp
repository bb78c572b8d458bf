#include "greymodel.hpp"

#include <cmath>
#include <cstdlib>

#include "errors.hpp"

namespace greyfrac {

DesignSystem build_design(const Series& accumulated) {
  if (accumulated.size() < 4) {
    raise(errc::insufficient_data, "build_design: need at least 4 points");
  }
  DesignSystem d;
  const std::size_t rows = accumulated.size() - 1;
  d.neg_mean.resize(rows);
  d.y.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    d.neg_mean[i] = -0.5 * (accumulated[i + 1] + accumulated[i]);
    d.y[i] = accumulated[i + 1] - accumulated[i];
  }
  return d;
}

Params estimate_params(const DesignSystem& design) {
  // The second column of B is constant 1, so the OLS solution reduces to a
  // centered simple regression on the first column. Normal-matrix entries in
  // long double keep the small-sample systems stable.
  const std::size_t n = design.neg_mean.size();
  long double sum_c = 0.0L, sum_y = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    sum_c += design.neg_mean[i];
    sum_y += design.y[i];
  }
  const long double mean_c = sum_c / n;
  const long double mean_y = sum_y / n;
  long double scc = 0.0L, scy = 0.0L, sabs = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double dc = design.neg_mean[i] - mean_c;
    scc += dc * dc;
    scy += dc * (design.y[i] - mean_y);
    sabs += design.neg_mean[i] * design.neg_mean[i];
  }
  // det(B'B) = n * scc; scale by the magnitude of the normal matrix.
  const long double scale = n * sabs + 1.0L;
  if (!(n * scc > 1e-12L * scale)) {
    raise(errc::degenerate_design, "estimate_params: singular normal matrix");
  }
  // y carries a * neg_mean + b, so the slope on the negated column is a itself.
  const long double slope = scy / scc;
  Params p;
  // + 0.0 collapses a negative zero slope to +0.
  p.a = static_cast<double>(slope) + 0.0;
  p.b = static_cast<double>(mean_y - slope * mean_c);
  return p;
}

double response(const Params& p, double x1, std::size_t k) {
  if (k < 1) raise(errc::invalid_argument, "response: k is 1-based");
  if (k == 1) return x1;
  if (std::abs(p.a) < 1e-12) return x1 + p.b * static_cast<double>(k - 1);
  const double bd = p.b / p.a;
  return (x1 - bd) * std::exp(-p.a * static_cast<double>(k - 1)) + bd;
}

GreyModelFit fit(const Series& raw, double alpha, Kind kind) {
  if (raw.size() < 4) raise(errc::insufficient_data, "fit: need at least 4 points");
  for (double v : raw) {
    if (!(v > 0.0)) raise(errc::domain, "fit: raw values must be positive");
  }
  GreyModelFit f;
  f.kind = kind;
  f.alpha = alpha;
  f.raw = raw;
  f.x1 = raw.front();
  f.n_train = raw.size();
  f.accumulated = accumulate(raw, alpha, kind);
  f.params = estimate_params(build_design(f.accumulated));
  f.fitted_accumulated.resize(f.n_train);
  for (std::size_t k = 1; k <= f.n_train; ++k) {
    f.fitted_accumulated[k - 1] = response(f.params, f.x1, k);
  }
  f.fitted_restored = restore(f.fitted_accumulated, alpha, kind);
  return f;
}

Series predict(const GreyModelFit& f, std::size_t horizon) {
  if (horizon == 0) return {};
  Series acc(f.n_train + horizon);
  for (std::size_t k = 1; k <= acc.size(); ++k) acc[k - 1] = response(f.params, f.x1, k);
  Series restored = restore(acc, f.alpha, f.kind);
  return Series(restored.begin() + static_cast<std::ptrdiff_t>(f.n_train), restored.end());
}

double fitted_mape(const GreyModelFit& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.n_train; ++i) {
    if (f.raw[i] == 0.0) raise(errc::domain, "fitted_mape: raw value is zero");
    acc += std::abs((f.fitted_restored[i] - f.raw[i]) / f.raw[i]);
  }
  return 100.0 * acc / static_cast<double>(f.n_train);
}

}  // namespace greyfrac
