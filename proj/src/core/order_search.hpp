#pragma once

#include <cstddef>
#include <string>

#include "greymodel.hpp"

namespace greyfrac {

struct SearchSpec {
  double lo = 0.0;
  double hi = 2.0;
  double step = 0.01;
  Kind kind = Kind::conformable;

  static SearchSpec conformable_default() { return {0.0, 2.0, 0.01, Kind::conformable}; }
  static SearchSpec wu_default() { return {-2.0, 2.0, 0.01, Kind::wu}; }
};

struct TracePoint {
  double alpha = 0.0;
  double mape = 0.0;  // meaningful only when ok
  bool ok = false;
};

struct SearchResult {
  double alpha_star = 0.0;
  double mape_min = 0.0;
  std::vector<TracePoint> trace;
};

// Exhaustive scan of alpha_i = lo + i * step, i = 0..floor((hi-lo)/step).
// Strict-improvement update, so ties resolve to the smallest alpha. Grid
// points whose fit fails are recorded in the trace and skipped.
SearchResult brute_force_alpha(const Series& raw, const SearchSpec& spec);

}  // namespace greyfrac
