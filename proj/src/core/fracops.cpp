#include "fracops.hpp"

#include <cmath>

#include "errors.hpp"

namespace greyfrac {

namespace {

void require_nonempty(const Series& x, const char* op) {
  if (x.empty()) raise(errc::invalid_argument, std::string(op) + ": empty series");
}

void require_finite_order(double alpha, const char* op) {
  if (!std::isfinite(alpha)) raise(errc::domain, std::string(op) + ": order must be finite");
}

int ceil_order(double alpha) {
  // ceil(0) = 0: order 0 means no accumulation/difference pass at all.
  return static_cast<int>(std::ceil(alpha));
}

}  // namespace

Series cfa(const Series& x, double alpha) {
  require_nonempty(x, "cfa");
  require_finite_order(alpha, "cfa");
  if (!(alpha >= 0.0)) raise(errc::domain, "cfa: order must be >= 0");
  Series g(x);
  if (alpha == 0.0) return g;
  const int c = ceil_order(alpha);
  const double e = c - alpha;
  if (e != 0.0) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] /= std::pow(static_cast<double>(i + 1), e);
  }
  for (int pass = 0; pass < c; ++pass) {
    for (std::size_t i = 1; i < g.size(); ++i) g[i] += g[i - 1];
  }
  return g;
}

Series cfd(const Series& x, double alpha) {
  require_nonempty(x, "cfd");
  require_finite_order(alpha, "cfd");
  if (!(alpha >= 0.0)) raise(errc::domain, "cfd: order must be >= 0");
  Series d(x);
  if (alpha == 0.0) return d;
  const int c = ceil_order(alpha);
  const double e = c - alpha;
  for (int pass = 0; pass < c; ++pass) {
    for (std::size_t i = d.size(); i-- > 1;) d[i] -= d[i - 1];
    // d[0] keeps its value: the difference consumes the zero padding at index 0.
  }
  if (e != 0.0) {
    for (std::size_t i = 0; i < d.size(); ++i) d[i] *= std::pow(static_cast<double>(i + 1), e);
  }
  return d;
}

std::vector<double> foa_coefficients(double alpha, std::size_t count) {
  require_finite_order(alpha, "foa_coefficients");
  if (count == 0) return {};
  std::vector<double> cs(count);
  cs[0] = 1.0;
  for (std::size_t m = 1; m < count; ++m) {
    cs[m] = cs[m - 1] * (static_cast<double>(m) - 1.0 + alpha) / static_cast<double>(m);
  }
  return cs;
}

namespace {

Series convolve_with(const Series& x, const std::vector<double>& cs) {
  Series out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += cs[k - j] * x[j];
    out[k] = acc;
  }
  return out;
}

}  // namespace

Series foa(const Series& x, double alpha) {
  require_nonempty(x, "foa");
  return convolve_with(x, foa_coefficients(alpha, x.size()));
}

Series fod(const Series& x, double alpha) {
  require_nonempty(x, "fod");
  return convolve_with(x, foa_coefficients(-alpha, x.size()));
}

Series accumulate(const Series& x, double alpha, Kind kind) {
  return kind == Kind::conformable ? cfa(x, alpha) : foa(x, alpha);
}

Series restore(const Series& x, double alpha, Kind kind) {
  return kind == Kind::conformable ? cfd(x, alpha) : fod(x, alpha);
}

}  // namespace greyfrac
