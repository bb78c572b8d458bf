#pragma once

#include <cstddef>

#include "fracops.hpp"

namespace greyfrac {

// Least-squares system for the whitened equation: row i of B is
// (-(z(i+1) + z(i))/2, 1) over the accumulated series, Y holds its
// first differences. The constant second column is implicit.
struct DesignSystem {
  std::vector<double> neg_mean;  // first column of B
  std::vector<double> y;
};

struct Params {
  double a = 0.0;  // development coefficient
  double b = 0.0;  // grey input
};

struct GreyModelFit {
  Kind kind = Kind::conformable;
  double alpha = 1.0;
  Params params;
  double x1 = 0.0;
  std::size_t n_train = 0;
  Series raw;
  Series accumulated;         // x^(alpha), training range
  Series fitted_accumulated;  // response at k = 1..n
  Series fitted_restored;     // x-hat^(0) at k = 1..n
};

DesignSystem build_design(const Series& accumulated);

// OLS solution of B [a b]' = Y. Degenerate when all midpoints coincide.
Params estimate_params(const DesignSystem& design);

// Time response at 1-based k; |a| < 1e-12 falls back to the linear limit
// x1 + b (k - 1), the continuous extension at a = 0.
double response(const Params& p, double x1, std::size_t k);

GreyModelFit fit(const Series& raw, double alpha, Kind kind);

// Restores the response over k = 1..n+horizon and returns the tail, so the
// fractional difference at the first forecast index sees the in-sample values.
Series predict(const GreyModelFit& f, std::size_t horizon);

// Mean over k = 1..n_train of |fitted - raw| / |raw| * 100.
double fitted_mape(const GreyModelFit& f);

}  // namespace greyfrac
