#include "metrics.hpp"

#include <cmath>

#include "errors.hpp"

namespace greyfrac {

std::vector<PointError> pointwise_errors(const Series& predicted, const Series& actual) {
  if (predicted.size() != actual.size()) {
    raise(errc::invalid_argument, "pointwise_errors: length mismatch");
  }
  if (predicted.empty()) raise(errc::invalid_argument, "pointwise_errors: empty input");
  std::vector<PointError> out(predicted.size());
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (actual[i] == 0.0) raise(errc::domain, "pointwise_errors: zero actual value");
    const double eps = predicted[i] - actual[i];
    out[i].ae = std::abs(eps);
    out[i].se = eps * eps;
    out[i].ape = std::abs(eps / actual[i]) * 100.0;
  }
  return out;
}

namespace {

struct MeanStd {
  double mean;
  double std;
};

template <typename Get>
MeanStd mean_pop_std(const std::vector<PointError>& errors, Get get) {
  const double n = static_cast<double>(errors.size());
  double sum = 0.0;
  for (const auto& e : errors) sum += get(e);
  const double mean = sum / n;
  double var = 0.0;
  for (const auto& e : errors) {
    const double d = get(e) - mean;
    var += d * d;
  }
  return {mean, std::sqrt(var / n)};
}

}  // namespace

ErrorSummary summarize(const std::vector<PointError>& errors) {
  if (errors.empty()) raise(errc::invalid_argument, "summarize: empty error list");
  ErrorSummary s;
  const auto ae = mean_pop_std(errors, [](const PointError& e) { return e.ae; });
  const auto se = mean_pop_std(errors, [](const PointError& e) { return e.se; });
  const auto ape = mean_pop_std(errors, [](const PointError& e) { return e.ape; });
  s.mae = ae.mean;
  s.mae_std = ae.std;
  s.mse = se.mean;
  s.mse_std = se.std;
  s.mape = ape.mean;
  s.mape_std = ape.std;
  s.n = errors.size();
  return s;
}

}  // namespace greyfrac
