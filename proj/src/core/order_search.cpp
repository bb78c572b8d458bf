#include "order_search.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace greyfrac {

SearchResult brute_force_alpha(const Series& raw, const SearchSpec& spec) {
  if (!(spec.lo <= spec.hi)) raise(errc::invalid_argument, "brute_force_alpha: lo > hi");
  if (!(spec.step > 0.0)) raise(errc::invalid_argument, "brute_force_alpha: step must be > 0");
  const std::size_t count =
      static_cast<std::size_t>(std::floor((spec.hi - spec.lo) / spec.step)) + 1;
  SearchResult result;
  result.trace.reserve(count);
  double best_mape = std::numeric_limits<double>::infinity();
  double best_alpha = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < count; ++i) {
    const double alpha = spec.lo + static_cast<double>(i) * spec.step;
    TracePoint tp;
    tp.alpha = alpha;
    try {
      GreyModelFit f = fit(raw, alpha, spec.kind);
      const double m = fitted_mape(f);
      if (!std::isfinite(m)) throw Error(errc::degenerate_design, "non-finite MAPE");
      tp.mape = m;
      tp.ok = true;
      if (m < best_mape) {
        best_mape = m;
        best_alpha = alpha;
      }
    } catch (const Error&) {
      tp.ok = false;
    }
    result.trace.push_back(tp);
  }
  if (!std::isfinite(best_mape)) {
    raise(errc::no_feasible_order, "brute_force_alpha: every grid point failed");
  }
  result.alpha_star = best_alpha;
  result.mape_min = best_mape;
  return result;
}

}  // namespace greyfrac
