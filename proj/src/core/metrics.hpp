#pragma once

#include <cstddef>

#include "fracops.hpp"

namespace greyfrac {

struct PointError {
  double ae = 0.0;
  double se = 0.0;
  double ape = 0.0;  // percent
};

// Summary criteria: means and population (1/N) standard deviations of the
// pointwise absolute, squared and absolute-percentage errors.
struct ErrorSummary {
  double mae = 0.0;
  double mae_std = 0.0;
  double mse = 0.0;
  double mse_std = 0.0;
  double mape = 0.0;
  double mape_std = 0.0;
  std::size_t n = 0;
};

std::vector<PointError> pointwise_errors(const Series& predicted, const Series& actual);

ErrorSummary summarize(const std::vector<PointError>& errors);

}  // namespace greyfrac
