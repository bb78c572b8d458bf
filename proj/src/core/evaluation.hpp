#pragma once

#include <cstddef>
#include <limits>
#include <string>

#include "metrics.hpp"
#include "order_search.hpp"

namespace greyfrac {

// One cross-validation window: 1-based start index, training length, and the
// forecast horizon to the end of the series.
struct SubcaseSpec {
  std::size_t start = 1;
  std::size_t train_len = 4;
  std::size_t horizon = 1;
};

// All (start, train_len) with start >= 1, train_len >= min_train and
// start + train_len <= n_total, ordered by (start, train_len). A 9-point
// series yields the 5+4+3+2+1 = 15 pattern.
std::vector<SubcaseSpec> tscv_subcases(std::size_t n_total, std::size_t min_train = 4);

struct ModelSpec {
  enum class Family { grey, ar };

  Family family = Family::grey;
  std::string name;

  // grey members
  Kind kind = Kind::conformable;
  bool auto_alpha = true;
  double fixed_alpha = 1.0;
  SearchSpec search = SearchSpec::conformable_default();

  // ar members
  std::size_t ar_order = 5;

  static ModelSpec cfgm(SearchSpec s = SearchSpec::conformable_default());
  static ModelSpec fgm(SearchSpec s = SearchSpec::wu_default());
  static ModelSpec grey_fixed(Kind kind, double alpha);
  static ModelSpec ar(std::size_t order);
};

struct RollingOriginRecord {
  std::size_t origin = 0;  // 1-based index of the last training point
  bool ok = false;
  std::string note;
  double alpha_star = std::numeric_limits<double>::quiet_NaN();
  Series predictions;  // steps 1.. (truncated at the series end)
  Series actuals;
};

struct RollingModelReport {
  ModelSpec spec;
  std::size_t effective_ar_order = 0;  // ar family only
  std::vector<ErrorSummary> per_step;  // pooled s-step-ahead errors, index s-1
  std::vector<RollingOriginRecord> origins;
};

struct RollingReport {
  std::size_t window = 5;
  std::size_t max_step = 3;
  std::size_t n_total = 0;
  std::vector<RollingModelReport> models;
};

// Fits every model afresh at each origin (grey models re-run the order search
// per window) and pools the s-step-ahead errors; pool size is N - window - s + 1
// when every window fits.
RollingReport rolling_multistep(const Series& raw, std::size_t window, std::size_t max_step,
                                const std::vector<ModelSpec>& models);

enum class Aggregation { pooled, per_subcase_mean };

struct TscvSubcaseRecord {
  SubcaseSpec sub;
  bool ok = false;
  std::string note;
  double alpha_star = std::numeric_limits<double>::quiet_NaN();
  ErrorSummary fit_summary;
  ErrorSummary pred_summary;
};

struct TscvModelReport {
  ModelSpec spec;
  ErrorSummary fitting;
  ErrorSummary prediction;
  std::vector<TscvSubcaseRecord> subcases;
  std::vector<double> alpha_stars;  // auto-search models, successful subcases in order
};

struct TscvReport {
  Aggregation agg = Aggregation::pooled;
  std::vector<TscvModelReport> models;
};

// Grey models only. Each subcase is fitted on its window and predicts the full
// remaining horizon; in-sample and out-of-sample errors are aggregated either
// pooled over points (default) or as the mean of per-subcase summaries.
TscvReport tscv_run(const Series& raw, const std::vector<ModelSpec>& models,
                    Aggregation agg = Aggregation::pooled);

// Proportions over {0}, (0,1), {1}, (1,2] and [-2,0); the outer bins absorb
// anything beyond the default search ranges so the proportions always sum to 1.
struct AlphaHistogram {
  double at_zero = 0.0;
  double in_zero_one = 0.0;
  double at_one = 0.0;
  double in_one_two = 0.0;
  double in_negative = 0.0;
  std::size_t count = 0;
};

AlphaHistogram alpha_distribution(const std::vector<double>& alpha_stars);

}  // namespace greyfrac
