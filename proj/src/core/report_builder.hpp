#pragma once

#include "dataio.hpp"
#include "evaluation.hpp"

namespace greyfrac {

struct DatasetTscvResult {
  std::vector<std::string> case_names;
  std::vector<TscvReport> reports;  // parallel to case_names
  Aggregation agg = Aggregation::pooled;
};

DatasetTscvResult tscv_run_dataset(const std::vector<NamedSeries>& dataset,
                                   const std::vector<ModelSpec>& models, Aggregation agg);

struct DatasetRollingResult {
  std::vector<std::string> case_names;
  std::vector<RollingReport> reports;
  std::size_t window = 5;
  std::size_t max_step = 3;
};

DatasetRollingResult rolling_run_dataset(const std::vector<NamedSeries>& dataset,
                                         std::size_t window, std::size_t max_step,
                                         const std::vector<ModelSpec>& models);

// Assembles the per-case subcase tables, the fitting/prediction summaries and
// the pooled optimal-order histogram. The case column is omitted when the
// dataset holds a single series. extra_metadata rows are prepended verbatim.
ReportDocument tscv_document(
    const DatasetTscvResult& result,
    const std::vector<std::pair<std::string, std::string>>& extra_metadata);

ReportDocument rolling_document(
    const DatasetRollingResult& result,
    const std::vector<std::pair<std::string, std::string>>& extra_metadata);

}  // namespace greyfrac
