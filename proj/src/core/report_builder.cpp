#include "report_builder.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "errors.hpp"

namespace greyfrac {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Stable per-model column prefixes; an index suffix disambiguates repeats.
std::vector<std::string> model_prefixes(const std::vector<ModelSpec>& models) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    std::string p = lower(models[i].name);
    const bool repeat = std::count_if(models.begin(), models.end(), [&](const ModelSpec& m) {
                          return lower(m.name) == p;
                        }) > 1;
    if (repeat) p += "_" + std::to_string(i + 1);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ModelSpec> specs_of(const std::vector<TscvModelReport>& models) {
  std::vector<ModelSpec> out;
  for (const auto& m : models) out.push_back(m.spec);
  return out;
}

std::vector<ModelSpec> specs_of(const std::vector<RollingModelReport>& models) {
  std::vector<ModelSpec> out;
  for (const auto& m : models) out.push_back(m.spec);
  return out;
}

void append_summary_cells(std::vector<Cell>& row, const ErrorSummary& s) {
  row.emplace_back(s.mae);
  row.emplace_back(s.mae_std);
  row.emplace_back(s.mse);
  row.emplace_back(s.mse_std);
  row.emplace_back(s.mape);
  row.emplace_back(s.mape_std);
  row.emplace_back(static_cast<std::int64_t>(s.n));
}

const std::vector<std::string>& summary_columns() {
  static const std::vector<std::string> cols = {"mae",      "mae_std", "mse", "mse_std",
                                                "mape",     "mape_std", "n"};
  return cols;
}

std::string describe_model(const ModelSpec& m) {
  if (m.family == ModelSpec::Family::ar) {
    return "AR requested order " + std::to_string(m.ar_order);
  }
  std::string desc = m.name;
  if (m.auto_alpha) {
    desc += " auto order in [" + format_double(m.search.lo) + "," + format_double(m.search.hi) +
            "] step " + format_double(m.search.step);
  } else {
    desc += " fixed order " + format_double(m.fixed_alpha);
  }
  return desc;
}

}  // namespace

DatasetTscvResult tscv_run_dataset(const std::vector<NamedSeries>& dataset,
                                   const std::vector<ModelSpec>& models, Aggregation agg) {
  if (dataset.empty()) raise(errc::invalid_argument, "tscv_run_dataset: empty dataset");
  DatasetTscvResult out;
  out.agg = agg;
  for (const NamedSeries& s : dataset) {
    out.case_names.push_back(s.name);
    out.reports.push_back(tscv_run(s.values, models, agg));
  }
  return out;
}

DatasetRollingResult rolling_run_dataset(const std::vector<NamedSeries>& dataset,
                                         std::size_t window, std::size_t max_step,
                                         const std::vector<ModelSpec>& models) {
  if (dataset.empty()) raise(errc::invalid_argument, "rolling_run_dataset: empty dataset");
  DatasetRollingResult out;
  out.window = window;
  out.max_step = max_step;
  for (const NamedSeries& s : dataset) {
    out.case_names.push_back(s.name);
    out.reports.push_back(rolling_multistep(s.values, window, max_step, models));
  }
  return out;
}

ReportDocument tscv_document(
    const DatasetTscvResult& result,
    const std::vector<std::pair<std::string, std::string>>& extra_metadata) {
  ReportDocument doc;
  doc.metadata = extra_metadata;
  const bool multi = result.case_names.size() > 1;
  const auto specs = specs_of(result.reports.front().models);
  const auto prefixes = model_prefixes(specs);

  doc.metadata.emplace_back("cases", std::to_string(result.case_names.size()));
  doc.metadata.emplace_back(
      "aggregation", result.agg == Aggregation::pooled ? "pooled" : "per_subcase_mean");
  for (std::size_t m = 0; m < specs.size(); ++m) {
    doc.metadata.emplace_back("model_" + prefixes[m], describe_model(specs[m]));
  }

  // One subcase table per case, 15 rows for a 9-point series.
  for (std::size_t c = 0; c < result.reports.size(); ++c) {
    const TscvReport& rep = result.reports[c];
    Table t;
    t.name = multi ? "subcases_" + result.case_names[c] : "subcases";
    t.columns = {"start", "train_len", "horizon"};
    for (const std::string& p : prefixes) {
      t.columns.push_back(p + "_alpha_star");
      t.columns.push_back(p + "_fit_mape");
      t.columns.push_back(p + "_pred_mape");
      t.columns.push_back(p + "_ok");
      t.columns.push_back(p + "_note");
    }
    const std::size_t n_sub = rep.models.front().subcases.size();
    for (std::size_t i = 0; i < n_sub; ++i) {
      std::vector<Cell> row;
      const SubcaseSpec& sub = rep.models.front().subcases[i].sub;
      row.emplace_back(static_cast<std::int64_t>(sub.start));
      row.emplace_back(static_cast<std::int64_t>(sub.train_len));
      row.emplace_back(static_cast<std::int64_t>(sub.horizon));
      for (const TscvModelReport& mr : rep.models) {
        const TscvSubcaseRecord& rec = mr.subcases[i];
        row.emplace_back(rec.alpha_star);
        row.emplace_back(rec.ok ? rec.fit_summary.mape
                                : std::numeric_limits<double>::quiet_NaN());
        row.emplace_back(rec.ok ? rec.pred_summary.mape
                                : std::numeric_limits<double>::quiet_NaN());
        row.emplace_back(static_cast<std::int64_t>(rec.ok ? 1 : 0));
        row.emplace_back(rec.note);
      }
      t.rows.push_back(std::move(row));
    }
    doc.tables.push_back(std::move(t));
  }

  for (const char* phase : {"fitting", "prediction"}) {
    Table t;
    t.name = std::string(phase) + "_summary";
    if (multi) t.columns.push_back("case");
    t.columns.push_back("model");
    for (const std::string& c : summary_columns()) t.columns.push_back(c);
    for (std::size_t c = 0; c < result.reports.size(); ++c) {
      for (const TscvModelReport& mr : result.reports[c].models) {
        std::vector<Cell> row;
        if (multi) row.emplace_back(result.case_names[c]);
        row.emplace_back(mr.spec.name);
        append_summary_cells(row, std::string(phase) == "fitting" ? mr.fitting : mr.prediction);
        t.rows.push_back(std::move(row));
      }
    }
    doc.tables.push_back(std::move(t));
  }

  {
    Table t;
    t.name = "alpha_distribution";
    t.columns = {"model", "bin", "proportion", "count"};
    for (std::size_t m = 0; m < specs.size(); ++m) {
      if (!specs[m].auto_alpha) continue;
      std::vector<double> all;
      for (const TscvReport& rep : result.reports) {
        const auto& stars = rep.models[m].alpha_stars;
        all.insert(all.end(), stars.begin(), stars.end());
      }
      if (all.empty()) continue;
      const AlphaHistogram h = alpha_distribution(all);
      const double n = static_cast<double>(h.count);
      const std::vector<std::pair<std::string, double>> bins = {
          {"0", h.at_zero},
          {"(0,1)", h.in_zero_one},
          {"1", h.at_one},
          {"(1,2]", h.in_one_two},
          {"[-2,0)", h.in_negative},
      };
      for (const auto& [label, prop] : bins) {
        if (label == "[-2,0)" && specs[m].kind == Kind::conformable) continue;
        std::vector<Cell> row;
        row.emplace_back(specs[m].name);
        row.emplace_back(label);
        row.emplace_back(prop);
        row.emplace_back(static_cast<std::int64_t>(std::llround(prop * n)));
        t.rows.push_back(std::move(row));
      }
    }
    doc.tables.push_back(std::move(t));
  }

  return doc;
}

ReportDocument rolling_document(
    const DatasetRollingResult& result,
    const std::vector<std::pair<std::string, std::string>>& extra_metadata) {
  ReportDocument doc;
  doc.metadata = extra_metadata;
  const bool multi = result.case_names.size() > 1;
  const auto specs = specs_of(result.reports.front().models);
  const auto prefixes = model_prefixes(specs);

  doc.metadata.emplace_back("cases", std::to_string(result.case_names.size()));
  doc.metadata.emplace_back("window", std::to_string(result.window));
  doc.metadata.emplace_back("max_step", std::to_string(result.max_step));
  for (std::size_t m = 0; m < specs.size(); ++m) {
    doc.metadata.emplace_back("model_" + prefixes[m], describe_model(specs[m]));
    if (specs[m].family == ModelSpec::Family::ar) {
      doc.metadata.emplace_back("ar_effective_order",
                                std::to_string(result.reports.front().models[m].effective_ar_order));
    }
  }

  {
    Table t;
    t.name = "prediction_summary";
    if (multi) t.columns.push_back("case");
    t.columns.push_back("model");
    t.columns.push_back("step");
    for (const std::string& c : summary_columns()) t.columns.push_back(c);
    for (std::size_t c = 0; c < result.reports.size(); ++c) {
      for (const RollingModelReport& mr : result.reports[c].models) {
        for (std::size_t s = 0; s < mr.per_step.size(); ++s) {
          std::vector<Cell> row;
          if (multi) row.emplace_back(result.case_names[c]);
          row.emplace_back(mr.spec.name);
          row.emplace_back(static_cast<std::int64_t>(s + 1));
          append_summary_cells(row, mr.per_step[s]);
          t.rows.push_back(std::move(row));
        }
      }
    }
    doc.tables.push_back(std::move(t));
  }

  {
    Table t;
    t.name = "origin_detail";
    if (multi) t.columns.push_back("case");
    t.columns.insert(t.columns.end(),
                     {"model", "origin", "alpha_star", "ok", "note", "step", "predicted",
                      "actual"});
    for (std::size_t c = 0; c < result.reports.size(); ++c) {
      for (const RollingModelReport& mr : result.reports[c].models) {
        for (const RollingOriginRecord& rec : mr.origins) {
          const std::size_t steps = std::max<std::size_t>(rec.predictions.size(), 1);
          for (std::size_t s = 0; s < steps; ++s) {
            std::vector<Cell> row;
            if (multi) row.emplace_back(result.case_names[c]);
            row.emplace_back(mr.spec.name);
            row.emplace_back(static_cast<std::int64_t>(rec.origin));
            row.emplace_back(rec.alpha_star);
            row.emplace_back(static_cast<std::int64_t>(rec.ok ? 1 : 0));
            row.emplace_back(rec.note);
            if (rec.ok && s < rec.predictions.size()) {
              row.emplace_back(static_cast<std::int64_t>(s + 1));
              row.emplace_back(rec.predictions[s]);
              row.emplace_back(rec.actuals[s]);
            } else {
              row.emplace_back(static_cast<std::int64_t>(0));
              row.emplace_back(std::numeric_limits<double>::quiet_NaN());
              row.emplace_back(std::numeric_limits<double>::quiet_NaN());
            }
            t.rows.push_back(std::move(row));
          }
        }
      }
    }
    doc.tables.push_back(std::move(t));
  }

  return doc;
}

}  // namespace greyfrac
