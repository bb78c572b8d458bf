#include "greyfrac/greyfrac.h"

#include <cstring>
#include <ctime>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "baselines.hpp"
#include "dataio.hpp"
#include "errors.hpp"
#include "evaluation.hpp"
#include "fracops.hpp"
#include "greymodel.hpp"
#include "metrics.hpp"
#include "order_search.hpp"
#include "report_builder.hpp"

struct gf_fit {
  greyfrac::GreyModelFit impl;
};

struct gf_search_result {
  greyfrac::SearchResult impl;
};

struct gf_ar {
  greyfrac::ARFit impl;
};

struct gf_dataset {
  std::vector<greyfrac::NamedSeries> series;
};

struct gf_report {
  greyfrac::ReportDocument doc;
  mutable std::string text_buf;  // backs gf_report_cell_text
};

namespace {

thread_local std::string g_last_error;

gf_status to_status(greyfrac::errc c) {
  switch (c) {
    case greyfrac::errc::invalid_argument: return GF_ERR_INVALID_ARGUMENT;
    case greyfrac::errc::domain: return GF_ERR_DOMAIN;
    case greyfrac::errc::insufficient_data: return GF_ERR_INSUFFICIENT_DATA;
    case greyfrac::errc::degenerate_design: return GF_ERR_DEGENERATE_DESIGN;
    case greyfrac::errc::no_feasible_order: return GF_ERR_NO_FEASIBLE_ORDER;
    case greyfrac::errc::parse: return GF_ERR_PARSE;
    case greyfrac::errc::io: return GF_ERR_IO;
  }
  return GF_ERR_UNKNOWN;
}

template <typename F>
gf_status guard(F&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return GF_OK;
  } catch (const greyfrac::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GF_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unidentified failure";
    return GF_ERR_UNKNOWN;
  }
}

gf_status fail_invalid(const char* msg) {
  g_last_error = msg;
  return GF_ERR_INVALID_ARGUMENT;
}

greyfrac::Kind to_kind(gf_kind k) {
  return k == GF_KIND_WU ? greyfrac::Kind::wu : greyfrac::Kind::conformable;
}

greyfrac::Series to_series(const double* data, size_t n) {
  return greyfrac::Series(data, data + n);
}

using Op = greyfrac::Series (*)(const greyfrac::Series&, double);

gf_status run_op(Op op, const double* in, size_t n, double alpha, double* out) {
  if (!in || !out) return fail_invalid("null buffer");
  return guard([&] {
    const greyfrac::Series r = op(to_series(in, n), alpha);
    std::memcpy(out, r.data(), n * sizeof(double));
  });
}

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

extern "C" {

const char* gf_version(void) { return "0.1.0"; }

const char* gf_last_error(void) { return g_last_error.c_str(); }

size_t gf_format_double(double v, char* buf, size_t cap) {
  const std::string s = greyfrac::format_double(v);
  if (!buf || cap <= s.size()) return 0;
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return s.size();
}

/* ---- fractional operators ------------------------------------------- */

gf_status gf_cfa(const double* in, size_t n, double alpha, double* out) {
  return run_op(&greyfrac::cfa, in, n, alpha, out);
}

gf_status gf_cfd(const double* in, size_t n, double alpha, double* out) {
  return run_op(&greyfrac::cfd, in, n, alpha, out);
}

gf_status gf_foa(const double* in, size_t n, double alpha, double* out) {
  return run_op(&greyfrac::foa, in, n, alpha, out);
}

gf_status gf_fod(const double* in, size_t n, double alpha, double* out) {
  return run_op(&greyfrac::fod, in, n, alpha, out);
}

gf_status gf_foa_coefficients(double alpha, size_t count, double* out) {
  if (!out && count) return fail_invalid("null buffer");
  return guard([&] {
    const std::vector<double> c = greyfrac::foa_coefficients(alpha, count);
    if (count) std::memcpy(out, c.data(), count * sizeof(double));
  });
}

/* ---- grey model ------------------------------------------------------ */

gf_status gf_fit_create(const double* raw, size_t n, double alpha, gf_kind kind,
                        gf_fit** out) {
  if (!raw || !out) return fail_invalid("null argument");
  *out = nullptr;
  return guard([&] {
    auto f = new gf_fit{greyfrac::fit(to_series(raw, n), alpha, to_kind(kind))};
    *out = f;
  });
}

void gf_fit_destroy(gf_fit* f) { delete f; }

double gf_fit_alpha(const gf_fit* f) { return f ? f->impl.alpha : 0.0; }
double gf_fit_a(const gf_fit* f) { return f ? f->impl.params.a : 0.0; }
double gf_fit_b(const gf_fit* f) { return f ? f->impl.params.b : 0.0; }
size_t gf_fit_train_len(const gf_fit* f) { return f ? f->impl.n_train : 0; }

static gf_status copy_series(const greyfrac::Series& s, double* out) {
  if (!out) return fail_invalid("null buffer");
  std::memcpy(out, s.data(), s.size() * sizeof(double));
  g_last_error.clear();
  return GF_OK;
}

gf_status gf_fit_accumulated(const gf_fit* f, double* out) {
  if (!f) return fail_invalid("null handle");
  return copy_series(f->impl.accumulated, out);
}

gf_status gf_fit_fitted_accumulated(const gf_fit* f, double* out) {
  if (!f) return fail_invalid("null handle");
  return copy_series(f->impl.fitted_accumulated, out);
}

gf_status gf_fit_fitted(const gf_fit* f, double* out) {
  if (!f) return fail_invalid("null handle");
  return copy_series(f->impl.fitted_restored, out);
}

gf_status gf_fit_mape(const gf_fit* f, double* out) {
  if (!f || !out) return fail_invalid("null argument");
  return guard([&] { *out = greyfrac::fitted_mape(f->impl); });
}

gf_status gf_fit_predict(const gf_fit* f, size_t horizon, double* out) {
  if (!f || (!out && horizon)) return fail_invalid("null argument");
  return guard([&] {
    const greyfrac::Series p = greyfrac::predict(f->impl, horizon);
    if (!p.empty()) std::memcpy(out, p.data(), p.size() * sizeof(double));
  });
}

/* ---- order search ---------------------------------------------------- */

gf_status gf_search(const double* raw, size_t n, double lo, double hi, double step,
                    gf_kind kind, gf_search_result** out) {
  if (!raw || !out) return fail_invalid("null argument");
  *out = nullptr;
  return guard([&] {
    greyfrac::SearchSpec spec{lo, hi, step, to_kind(kind)};
    auto r = new gf_search_result{greyfrac::brute_force_alpha(to_series(raw, n), spec)};
    *out = r;
  });
}

void gf_search_result_destroy(gf_search_result* r) { delete r; }

double gf_search_alpha_star(const gf_search_result* r) { return r ? r->impl.alpha_star : 0.0; }
double gf_search_mape_min(const gf_search_result* r) { return r ? r->impl.mape_min : 0.0; }
size_t gf_search_trace_len(const gf_search_result* r) { return r ? r->impl.trace.size() : 0; }

gf_status gf_search_trace(const gf_search_result* r, double* alphas, double* mapes,
                          int* ok) {
  if (!r) return fail_invalid("null handle");
  for (size_t i = 0; i < r->impl.trace.size(); ++i) {
    const greyfrac::TracePoint& p = r->impl.trace[i];
    if (alphas) alphas[i] = p.alpha;
    if (mapes) mapes[i] = p.ok ? p.mape : std::numeric_limits<double>::quiet_NaN();
    if (ok) ok[i] = p.ok ? 1 : 0;
  }
  g_last_error.clear();
  return GF_OK;
}

/* ---- autoregressive baseline ---------------------------------------- */

gf_status gf_ar_create(const double* train, size_t n, size_t p, gf_ar** out) {
  if (!train || !out) return fail_invalid("null argument");
  *out = nullptr;
  return guard([&] {
    auto f = new gf_ar{greyfrac::ar_fit(to_series(train, n), p)};
    *out = f;
  });
}

void gf_ar_destroy(gf_ar* f) { delete f; }

size_t gf_ar_order(const gf_ar* f) { return f ? f->impl.p : 0; }
double gf_ar_intercept(const gf_ar* f) { return f ? f->impl.intercept : 0.0; }

gf_status gf_ar_coeffs(const gf_ar* f, double* out) {
  if (!f || !out) return fail_invalid("null argument");
  std::memcpy(out, f->impl.coeffs.data(), f->impl.coeffs.size() * sizeof(double));
  g_last_error.clear();
  return GF_OK;
}

gf_status gf_ar_predict(const gf_ar* f, const double* history, size_t n, size_t steps,
                        double* out) {
  if (!f || !history || (!out && steps)) return fail_invalid("null argument");
  return guard([&] {
    const greyfrac::Series p = greyfrac::ar_predict(f->impl, to_series(history, n), steps);
    if (!p.empty()) std::memcpy(out, p.data(), p.size() * sizeof(double));
  });
}

/* ---- error summaries ------------------------------------------------- */

gf_status gf_summarize(const double* predicted, const double* actual, size_t n,
                       gf_summary* out) {
  if (!predicted || !actual || !out) return fail_invalid("null argument");
  return guard([&] {
    const greyfrac::ErrorSummary s =
        greyfrac::summarize(greyfrac::pointwise_errors(to_series(predicted, n),
                                                       to_series(actual, n)));
    out->mae = s.mae;
    out->mae_std = s.mae_std;
    out->mse = s.mse;
    out->mse_std = s.mse_std;
    out->mape = s.mape;
    out->mape_std = s.mape_std;
    out->n = s.n;
  });
}

/* ---- datasets -------------------------------------------------------- */

gf_status gf_dataset_read_csv(const char* path, gf_dataset** out) {
  if (!path || !out) return fail_invalid("null argument");
  *out = nullptr;
  return guard([&] { *out = new gf_dataset{greyfrac::read_csv(path)}; });
}

gf_status gf_dataset_bundled(const char* name, gf_dataset** out) {
  if (!name || !out) return fail_invalid("null argument");
  *out = nullptr;
  return guard([&] {
    if (std::string(name) != "ng") {
      greyfrac::raise(greyfrac::errc::invalid_argument,
                      std::string("unknown bundled dataset: ") + name);
    }
    *out = new gf_dataset{greyfrac::bundled_ng_dataset()};
  });
}

gf_status gf_dataset_create(gf_dataset** out) {
  if (!out) return fail_invalid("null argument");
  *out = new gf_dataset{};
  g_last_error.clear();
  return GF_OK;
}

gf_status gf_dataset_add_series(gf_dataset* ds, const char* name, const double* values,
                                size_t n) {
  if (!ds || !name || !values) return fail_invalid("null argument");
  return guard([&] {
    if (n == 0) greyfrac::raise(greyfrac::errc::invalid_argument, "empty series");
    greyfrac::NamedSeries s;
    s.name = name;
    s.values = to_series(values, n);
    ds->series.push_back(std::move(s));
  });
}

void gf_dataset_destroy(gf_dataset* ds) { delete ds; }

size_t gf_dataset_count(const gf_dataset* ds) { return ds ? ds->series.size() : 0; }

const char* gf_dataset_name(const gf_dataset* ds, size_t i) {
  if (!ds || i >= ds->series.size()) return nullptr;
  return ds->series[i].name.c_str();
}

size_t gf_dataset_len(const gf_dataset* ds, size_t i) {
  if (!ds || i >= ds->series.size()) return 0;
  return ds->series[i].values.size();
}

gf_status gf_dataset_values(const gf_dataset* ds, size_t i, double* out) {
  if (!ds || !out) return fail_invalid("null argument");
  if (i >= ds->series.size()) return fail_invalid("series index out of range");
  return copy_series(ds->series[i].values, out);
}

const char* gf_dataset_label(const gf_dataset* ds, size_t i, size_t j) {
  if (!ds || i >= ds->series.size()) return nullptr;
  const auto& labels = ds->series[i].labels;
  if (j >= labels.size()) return "";
  return labels[j].c_str();
}

/* ---- evaluation harnesses ------------------------------------------- */

gf_status gf_tscv_subcases(size_t n_total, size_t min_train, gf_subcase* out,
                           size_t cap, size_t* count) {
  if (!count) return fail_invalid("null count");
  return guard([&] {
    const auto subs = greyfrac::tscv_subcases(n_total, min_train);
    *count = subs.size();
    if (!out) return;
    if (cap < subs.size()) {
      greyfrac::raise(greyfrac::errc::invalid_argument, "subcase buffer too small");
    }
    for (size_t i = 0; i < subs.size(); ++i) {
      out[i] = {subs[i].start, subs[i].train_len, subs[i].horizon};
    }
  });
}

gf_status gf_alpha_distribution(const double* alphas, size_t n, double* at_zero,
                                double* in_zero_one, double* at_one, double* in_one_two,
                                double* in_negative) {
  if (!alphas) return fail_invalid("null argument");
  return guard([&] {
    const greyfrac::AlphaHistogram h =
        greyfrac::alpha_distribution(std::vector<double>(alphas, alphas + n));
    if (at_zero) *at_zero = h.at_zero;
    if (in_zero_one) *in_zero_one = h.in_zero_one;
    if (at_one) *at_one = h.at_one;
    if (in_one_two) *in_one_two = h.in_one_two;
    if (in_negative) *in_negative = h.in_negative;
  });
}

void gf_tscv_options_init(gf_tscv_options* opt) {
  if (!opt) return;
  opt->cf_lo = 0.0;
  opt->cf_hi = 2.0;
  opt->wu_lo = -2.0;
  opt->wu_hi = 2.0;
  opt->step = 0.01;
  opt->per_subcase_mean = 0;
  opt->with_timestamp = 0;
}

void gf_rolling_options_init(gf_rolling_options* opt) {
  if (!opt) return;
  opt->window = 5;
  opt->max_step = 3;
  opt->ar_order = 5;
  opt->include_ar = 1;
  opt->cf_lo = 0.0;
  opt->cf_hi = 2.0;
  opt->wu_lo = -2.0;
  opt->wu_hi = 2.0;
  opt->step = 0.01;
  opt->with_timestamp = 0;
}

gf_status gf_tscv_run(const gf_dataset* ds, const gf_tscv_options* opt, gf_report** out) {
  if (!ds || !out) return fail_invalid("null argument");
  *out = nullptr;
  gf_tscv_options defaults;
  gf_tscv_options_init(&defaults);
  const gf_tscv_options& o = opt ? *opt : defaults;
  return guard([&] {
    std::vector<greyfrac::ModelSpec> models = {
        greyfrac::ModelSpec::cfgm({o.cf_lo, o.cf_hi, o.step, greyfrac::Kind::conformable}),
        greyfrac::ModelSpec::fgm({o.wu_lo, o.wu_hi, o.step, greyfrac::Kind::wu}),
    };
    const greyfrac::Aggregation agg = o.per_subcase_mean
                                          ? greyfrac::Aggregation::per_subcase_mean
                                          : greyfrac::Aggregation::pooled;
    const auto result = greyfrac::tscv_run_dataset(ds->series, models, agg);
    std::vector<std::pair<std::string, std::string>> meta;
    if (o.with_timestamp) meta.emplace_back("generated_at", utc_timestamp());
    *out = new gf_report{greyfrac::tscv_document(result, meta), {}};
  });
}

gf_status gf_rolling_run(const gf_dataset* ds, const gf_rolling_options* opt,
                         gf_report** out) {
  if (!ds || !out) return fail_invalid("null argument");
  *out = nullptr;
  gf_rolling_options defaults;
  gf_rolling_options_init(&defaults);
  const gf_rolling_options& o = opt ? *opt : defaults;
  return guard([&] {
    std::vector<greyfrac::ModelSpec> models = {
        greyfrac::ModelSpec::cfgm({o.cf_lo, o.cf_hi, o.step, greyfrac::Kind::conformable}),
        greyfrac::ModelSpec::fgm({o.wu_lo, o.wu_hi, o.step, greyfrac::Kind::wu}),
    };
    if (o.include_ar) models.push_back(greyfrac::ModelSpec::ar(o.ar_order));
    const auto result =
        greyfrac::rolling_run_dataset(ds->series, o.window, o.max_step, models);
    std::vector<std::pair<std::string, std::string>> meta;
    if (o.with_timestamp) meta.emplace_back("generated_at", utc_timestamp());
    *out = new gf_report{greyfrac::rolling_document(result, meta), {}};
  });
}

void gf_report_destroy(gf_report* r) { delete r; }

gf_status gf_report_write_csv(const gf_report* r, const char* dir) {
  if (!r || !dir) return fail_invalid("null argument");
  return guard([&] { greyfrac::write_report(r->doc, greyfrac::ReportFormat::csv, dir); });
}

gf_status gf_report_write_json(const gf_report* r, const char* path) {
  if (!r || !path) return fail_invalid("null argument");
  return guard([&] { greyfrac::write_report(r->doc, greyfrac::ReportFormat::json, path); });
}

size_t gf_report_table_count(const gf_report* r) { return r ? r->doc.tables.size() : 0; }

const char* gf_report_table_name(const gf_report* r, size_t t) {
  if (!r || t >= r->doc.tables.size()) return nullptr;
  return r->doc.tables[t].name.c_str();
}

size_t gf_report_table_find(const gf_report* r, const char* name) {
  if (!r || !name) return static_cast<size_t>(-1);
  for (size_t t = 0; t < r->doc.tables.size(); ++t) {
    if (r->doc.tables[t].name == name) return t;
  }
  return static_cast<size_t>(-1);
}

gf_status gf_report_table_dims(const gf_report* r, size_t t, size_t* rows, size_t* cols) {
  if (!r || !rows || !cols) return fail_invalid("null argument");
  if (t >= r->doc.tables.size()) return fail_invalid("table index out of range");
  *rows = r->doc.tables[t].rows.size();
  *cols = r->doc.tables[t].columns.size();
  g_last_error.clear();
  return GF_OK;
}

const char* gf_report_column_name(const gf_report* r, size_t t, size_t col) {
  if (!r || t >= r->doc.tables.size()) return nullptr;
  const auto& cols = r->doc.tables[t].columns;
  if (col >= cols.size()) return nullptr;
  return cols[col].c_str();
}

namespace {

const greyfrac::Cell* cell_at(const gf_report* r, size_t t, size_t row, size_t col) {
  if (!r || t >= r->doc.tables.size()) return nullptr;
  const greyfrac::Table& tab = r->doc.tables[t];
  if (row >= tab.rows.size() || col >= tab.rows[row].size()) return nullptr;
  return &tab.rows[row][col];
}

}  // namespace

gf_status gf_report_cell_kind(const gf_report* r, size_t t, size_t row, size_t col,
                              gf_cell_kind* out) {
  if (!out) return fail_invalid("null argument");
  const greyfrac::Cell* c = cell_at(r, t, row, col);
  if (!c) return fail_invalid("cell index out of range");
  if (std::holds_alternative<std::int64_t>(*c)) {
    *out = GF_CELL_INT;
  } else if (std::holds_alternative<double>(*c)) {
    *out = GF_CELL_DOUBLE;
  } else {
    *out = GF_CELL_STRING;
  }
  g_last_error.clear();
  return GF_OK;
}

gf_status gf_report_cell_double(const gf_report* r, size_t t, size_t row, size_t col,
                                double* out) {
  if (!out) return fail_invalid("null argument");
  const greyfrac::Cell* c = cell_at(r, t, row, col);
  if (!c) return fail_invalid("cell index out of range");
  if (const auto* d = std::get_if<double>(c)) {
    *out = *d;
  } else if (const auto* i = std::get_if<std::int64_t>(c)) {
    *out = static_cast<double>(*i);
  } else {
    return fail_invalid("cell is not numeric");
  }
  g_last_error.clear();
  return GF_OK;
}

const char* gf_report_cell_text(const gf_report* r, size_t t, size_t row, size_t col) {
  const greyfrac::Cell* c = cell_at(r, t, row, col);
  if (!c) return nullptr;
  r->text_buf = greyfrac::format_cell(*c);
  return r->text_buf.c_str();
}

} /* extern "C" */
