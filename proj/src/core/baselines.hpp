#pragma once

#include <cstddef>

#include "fracops.hpp"

namespace greyfrac {

struct ARFit {
  std::size_t p = 1;
  double intercept = 0.0;
  std::vector<double> coeffs;  // lag-1 first
};

// OLS regression of x(k) on (1, x(k-1), ..., x(k-p)) over all valid rows.
// Underdetermined systems (fewer rows than p + 1 unknowns) get the
// minimum-norm least-squares solution, which keeps the fit deterministic.
ARFit ar_fit(const Series& train, std::size_t p);

// Recursive multi-step forecast; each step feeds its output back as a lag.
Series ar_predict(const ARFit& fit, const Series& history, std::size_t steps);

}  // namespace greyfrac
