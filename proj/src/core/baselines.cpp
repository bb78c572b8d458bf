#include "baselines.hpp"

#include <Eigen/Dense>

#include "errors.hpp"

namespace greyfrac {

ARFit ar_fit(const Series& train, std::size_t p) {
  if (p < 1) raise(errc::invalid_argument, "ar_fit: order must be >= 1");
  if (train.size() < p + 1) {
    raise(errc::insufficient_data, "ar_fit: need at least p + 1 points");
  }
  const std::size_t rows = train.size() - p;
  Eigen::MatrixXd X(rows, p + 1);
  Eigen::VectorXd y(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t k = p + r;  // 0-based target index
    X(r, 0) = 1.0;
    for (std::size_t j = 1; j <= p; ++j) X(r, j) = train[k - j];
    y(r) = train[k];
  }
  // CompleteOrthogonalDecomposition yields the minimum-norm solution when the
  // system is rank deficient or has fewer rows than unknowns.
  Eigen::VectorXd beta = X.completeOrthogonalDecomposition().solve(y);
  ARFit f;
  f.p = p;
  f.intercept = beta(0);
  f.coeffs.resize(p);
  for (std::size_t j = 0; j < p; ++j) f.coeffs[j] = beta(j + 1);
  return f;
}

Series ar_predict(const ARFit& fit, const Series& history, std::size_t steps) {
  if (history.size() < fit.p) {
    raise(errc::insufficient_data, "ar_predict: history shorter than lag order");
  }
  Series window(history.end() - static_cast<std::ptrdiff_t>(fit.p), history.end());
  Series out;
  out.reserve(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    double v = fit.intercept;
    for (std::size_t j = 0; j < fit.p; ++j) v += fit.coeffs[j] * window[window.size() - 1 - j];
    out.push_back(v);
    window.push_back(v);
  }
  return out;
}

}  // namespace greyfrac
