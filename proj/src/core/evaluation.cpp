#include "evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "baselines.hpp"
#include "errors.hpp"

namespace greyfrac {

std::vector<SubcaseSpec> tscv_subcases(std::size_t n_total, std::size_t min_train) {
  if (min_train < 4) raise(errc::invalid_argument, "tscv_subcases: min_train must be >= 4");
  if (n_total < min_train + 1) {
    raise(errc::insufficient_data, "tscv_subcases: series too short for any subcase");
  }
  std::vector<SubcaseSpec> out;
  for (std::size_t start = 1; start + min_train <= n_total; ++start) {
    for (std::size_t len = min_train; start + len <= n_total; ++len) {
      out.push_back({start, len, n_total - start - len + 1});
    }
  }
  return out;
}

ModelSpec ModelSpec::cfgm(SearchSpec s) {
  ModelSpec m;
  m.family = Family::grey;
  m.name = "CFGM";
  m.kind = Kind::conformable;
  m.auto_alpha = true;
  s.kind = Kind::conformable;
  m.search = s;
  return m;
}

ModelSpec ModelSpec::fgm(SearchSpec s) {
  ModelSpec m;
  m.family = Family::grey;
  m.name = "FGM";
  m.kind = Kind::wu;
  m.auto_alpha = true;
  s.kind = Kind::wu;
  m.search = s;
  return m;
}

ModelSpec ModelSpec::grey_fixed(Kind kind, double alpha) {
  ModelSpec m;
  m.family = Family::grey;
  m.name = kind == Kind::conformable ? "CFGM" : "FGM";
  m.kind = kind;
  m.auto_alpha = false;
  m.fixed_alpha = alpha;
  m.search.kind = kind;
  return m;
}

ModelSpec ModelSpec::ar(std::size_t order) {
  ModelSpec m;
  m.family = Family::ar;
  m.name = "AR";
  m.ar_order = order;
  return m;
}

namespace {

Series slice(const Series& raw, std::size_t begin0, std::size_t len) {
  return Series(raw.begin() + static_cast<std::ptrdiff_t>(begin0),
                raw.begin() + static_cast<std::ptrdiff_t>(begin0 + len));
}

// Fits one grey window, returning the fit and the chosen order.
GreyModelFit fit_grey_window(const Series& train, const ModelSpec& spec, double* alpha_star) {
  if (spec.auto_alpha) {
    SearchResult sr = brute_force_alpha(train, spec.search);
    *alpha_star = sr.alpha_star;
    return fit(train, sr.alpha_star, spec.kind);
  }
  *alpha_star = spec.fixed_alpha;
  return fit(train, spec.fixed_alpha, spec.kind);
}

ErrorSummary summarize_or_empty(const std::vector<PointError>& pool) {
  if (pool.empty()) return ErrorSummary{};
  return summarize(pool);
}

}  // namespace

RollingReport rolling_multistep(const Series& raw, std::size_t window, std::size_t max_step,
                                const std::vector<ModelSpec>& models) {
  if (models.empty()) raise(errc::invalid_argument, "rolling_multistep: no models given");
  if (window < 4) raise(errc::invalid_argument, "rolling_multistep: window must be >= 4");
  if (max_step < 1) raise(errc::invalid_argument, "rolling_multistep: max_step must be >= 1");
  if (raw.size() < window + max_step) {
    raise(errc::insufficient_data, "rolling_multistep: series shorter than window + max_step");
  }
  const std::size_t n = raw.size();
  RollingReport report;
  report.window = window;
  report.max_step = max_step;
  report.n_total = n;
  for (const ModelSpec& spec : models) {
    RollingModelReport mr;
    mr.spec = spec;
    if (spec.family == ModelSpec::Family::ar) {
      mr.effective_ar_order = std::min(spec.ar_order, window - 2);
      if (mr.effective_ar_order < 1) mr.effective_ar_order = 1;
    }
    std::vector<std::vector<PointError>> pools(max_step);
    for (std::size_t origin = window; origin + 1 <= n; ++origin) {
      RollingOriginRecord rec;
      rec.origin = origin;
      const Series train = slice(raw, origin - window, window);
      const std::size_t horizon = std::min(max_step, n - origin);
      rec.actuals = slice(raw, origin, horizon);
      try {
        Series preds;
        if (spec.family == ModelSpec::Family::grey) {
          GreyModelFit f = fit_grey_window(train, spec, &rec.alpha_star);
          preds = predict(f, horizon);
        } else {
          ARFit f = ar_fit(train, mr.effective_ar_order);
          preds = ar_predict(f, train, horizon);
        }
        rec.predictions = preds;
        for (std::size_t s = 1; s <= horizon; ++s) {
          const auto pe =
              pointwise_errors({preds[s - 1]}, {raw[origin + s - 1]});
          pools[s - 1].push_back(pe.front());
        }
        rec.ok = true;
      } catch (const Error& e) {
        rec.ok = false;
        rec.note = e.what();
      }
      mr.origins.push_back(std::move(rec));
    }
    mr.per_step.resize(max_step);
    for (std::size_t s = 0; s < max_step; ++s) mr.per_step[s] = summarize_or_empty(pools[s]);
    report.models.push_back(std::move(mr));
  }
  return report;
}

namespace {

ErrorSummary mean_of_summaries(const std::vector<const ErrorSummary*>& parts) {
  ErrorSummary out;
  if (parts.empty()) return out;
  const double n = static_cast<double>(parts.size());
  for (const ErrorSummary* s : parts) {
    out.mae += s->mae;
    out.mae_std += s->mae_std;
    out.mse += s->mse;
    out.mse_std += s->mse_std;
    out.mape += s->mape;
    out.mape_std += s->mape_std;
  }
  out.mae /= n;
  out.mae_std /= n;
  out.mse /= n;
  out.mse_std /= n;
  out.mape /= n;
  out.mape_std /= n;
  out.n = parts.size();
  return out;
}

}  // namespace

TscvReport tscv_run(const Series& raw, const std::vector<ModelSpec>& models, Aggregation agg) {
  if (models.empty()) raise(errc::invalid_argument, "tscv_run: no models given");
  for (const ModelSpec& spec : models) {
    if (spec.family != ModelSpec::Family::grey) {
      raise(errc::invalid_argument, "tscv_run: only grey models participate in TSCV");
    }
  }
  const auto subs = tscv_subcases(raw.size());
  TscvReport report;
  report.agg = agg;
  for (const ModelSpec& spec : models) {
    TscvModelReport mr;
    mr.spec = spec;
    std::vector<PointError> fit_pool, pred_pool;
    std::vector<const ErrorSummary*> fit_parts, pred_parts;
    for (const SubcaseSpec& sub : subs) {
      TscvSubcaseRecord rec;
      rec.sub = sub;
      const Series train = slice(raw, sub.start - 1, sub.train_len);
      const Series actual = slice(raw, sub.start - 1 + sub.train_len, sub.horizon);
      try {
        GreyModelFit f = fit_grey_window(train, spec, &rec.alpha_star);
        const auto fit_errors = pointwise_errors(f.fitted_restored, train);
        const auto pred_errors = pointwise_errors(predict(f, sub.horizon), actual);
        rec.fit_summary = summarize(fit_errors);
        rec.pred_summary = summarize(pred_errors);
        fit_pool.insert(fit_pool.end(), fit_errors.begin(), fit_errors.end());
        pred_pool.insert(pred_pool.end(), pred_errors.begin(), pred_errors.end());
        rec.ok = true;
        if (spec.auto_alpha) mr.alpha_stars.push_back(rec.alpha_star);
      } catch (const Error& e) {
        rec.ok = false;
        rec.note = e.what();
      }
      mr.subcases.push_back(std::move(rec));
    }
    for (const TscvSubcaseRecord& rec : mr.subcases) {
      if (!rec.ok) continue;
      fit_parts.push_back(&rec.fit_summary);
      pred_parts.push_back(&rec.pred_summary);
    }
    if (agg == Aggregation::pooled) {
      mr.fitting = summarize_or_empty(fit_pool);
      mr.prediction = summarize_or_empty(pred_pool);
    } else {
      mr.fitting = mean_of_summaries(fit_parts);
      mr.prediction = mean_of_summaries(pred_parts);
    }
    report.models.push_back(std::move(mr));
  }
  return report;
}

AlphaHistogram alpha_distribution(const std::vector<double>& alpha_stars) {
  if (alpha_stars.empty()) raise(errc::invalid_argument, "alpha_distribution: empty input");
  AlphaHistogram h;
  for (double a : alpha_stars) {
    if (a < 0.0) {
      h.in_negative += 1.0;
    } else if (a == 0.0) {
      h.at_zero += 1.0;
    } else if (a < 1.0) {
      h.in_zero_one += 1.0;
    } else if (a == 1.0) {
      h.at_one += 1.0;
    } else {
      h.in_one_two += 1.0;
    }
  }
  const double n = static_cast<double>(alpha_stars.size());
  h.at_zero /= n;
  h.in_zero_one /= n;
  h.at_one /= n;
  h.in_one_two /= n;
  h.in_negative /= n;
  h.count = alpha_stars.size();
  return h;
}

}  // namespace greyfrac
