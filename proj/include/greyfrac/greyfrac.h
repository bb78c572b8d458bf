/* greyfrac: fractional-order grey forecasting models behind a C interface.
 *
 * All functions return gf_status unless stated otherwise; on failure the
 * thread-local message from gf_last_error() describes the cause. Output
 * buffers are caller-allocated; size queries tell how much to allocate.
 * Handles are opaque and must be released with their _destroy function.
 */

#ifndef GREYFRAC_H
#define GREYFRAC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf_status {
  GF_OK = 0,
  GF_ERR_INVALID_ARGUMENT = 1,
  GF_ERR_DOMAIN = 2,
  GF_ERR_INSUFFICIENT_DATA = 3,
  GF_ERR_DEGENERATE_DESIGN = 4,
  GF_ERR_NO_FEASIBLE_ORDER = 5,
  GF_ERR_PARSE = 6,
  GF_ERR_IO = 7,
  GF_ERR_UNKNOWN = 8
} gf_status;

typedef enum gf_kind {
  GF_KIND_CONFORMABLE = 0,
  GF_KIND_WU = 1
} gf_kind;

/* Library version string, e.g. "0.1.0". */
const char* gf_version(void);

/* Message for the most recent failure on this thread; empty if none. */
const char* gf_last_error(void);

/* Shortest decimal form of v that parses back to the same double. Returns
 * the number of characters written (excluding the terminator), or 0 if the
 * buffer is too small. */
size_t gf_format_double(double v, char* buf, size_t cap);

/* ---- fractional operators ------------------------------------------- */
/* out must hold n doubles; in and out may alias. */

gf_status gf_cfa(const double* in, size_t n, double alpha, double* out);
gf_status gf_cfd(const double* in, size_t n, double alpha, double* out);
gf_status gf_foa(const double* in, size_t n, double alpha, double* out);
gf_status gf_fod(const double* in, size_t n, double alpha, double* out);
gf_status gf_foa_coefficients(double alpha, size_t count, double* out);

/* ---- grey model ------------------------------------------------------ */

typedef struct gf_fit gf_fit;

/* Fits the order-alpha grey model on raw[0..n); n >= 4, values > 0. */
gf_status gf_fit_create(const double* raw, size_t n, double alpha, gf_kind kind,
                        gf_fit** out);
void gf_fit_destroy(gf_fit* f);

double gf_fit_alpha(const gf_fit* f);
double gf_fit_a(const gf_fit* f);
double gf_fit_b(const gf_fit* f);
size_t gf_fit_train_len(const gf_fit* f);

/* Each buffer must hold train_len doubles. */
gf_status gf_fit_accumulated(const gf_fit* f, double* out);
gf_status gf_fit_fitted_accumulated(const gf_fit* f, double* out);
gf_status gf_fit_fitted(const gf_fit* f, double* out);

/* Mean absolute percentage error of the fitted series, in percent. */
gf_status gf_fit_mape(const gf_fit* f, double* out);

/* Forecasts positions train_len+1 .. train_len+horizon; out holds horizon
 * doubles (horizon 0 is a no-op). */
gf_status gf_fit_predict(const gf_fit* f, size_t horizon, double* out);

/* ---- order search ---------------------------------------------------- */

typedef struct gf_search_result gf_search_result;

/* Brute-force scan of alpha over lo + i*step <= hi, minimizing the fitted
 * MAPE; ties resolve to the smallest alpha. */
gf_status gf_search(const double* raw, size_t n, double lo, double hi, double step,
                    gf_kind kind, gf_search_result** out);
void gf_search_result_destroy(gf_search_result* r);

double gf_search_alpha_star(const gf_search_result* r);
double gf_search_mape_min(const gf_search_result* r);
size_t gf_search_trace_len(const gf_search_result* r);
/* Arrays of trace_len entries; ok[i] nonzero when the grid point fitted. */
gf_status gf_search_trace(const gf_search_result* r, double* alphas, double* mapes,
                          int* ok);

/* ---- autoregressive baseline ---------------------------------------- */

typedef struct gf_ar gf_ar;

gf_status gf_ar_create(const double* train, size_t n, size_t p, gf_ar** out);
void gf_ar_destroy(gf_ar* f);
size_t gf_ar_order(const gf_ar* f);
double gf_ar_intercept(const gf_ar* f);
gf_status gf_ar_coeffs(const gf_ar* f, double* out); /* p doubles, lag-1 first */
gf_status gf_ar_predict(const gf_ar* f, const double* history, size_t n, size_t steps,
                        double* out);

/* ---- error summaries ------------------------------------------------- */

typedef struct gf_summary {
  double mae, mae_std;
  double mse, mse_std;
  double mape, mape_std; /* percent */
  size_t n;
} gf_summary;

/* Means and population standard deviations of the pointwise absolute,
 * squared and absolute-percentage errors. */
gf_status gf_summarize(const double* predicted, const double* actual, size_t n,
                       gf_summary* out);

/* ---- datasets -------------------------------------------------------- */

typedef struct gf_dataset gf_dataset;

gf_status gf_dataset_read_csv(const char* path, gf_dataset** out);
/* name: "ng" for the bundled natural gas panel (11 series, 9 points). */
gf_status gf_dataset_bundled(const char* name, gf_dataset** out);
gf_status gf_dataset_create(gf_dataset** out);
gf_status gf_dataset_add_series(gf_dataset* ds, const char* name, const double* values,
                                size_t n);
void gf_dataset_destroy(gf_dataset* ds);

size_t gf_dataset_count(const gf_dataset* ds);
const char* gf_dataset_name(const gf_dataset* ds, size_t i);
size_t gf_dataset_len(const gf_dataset* ds, size_t i);
gf_status gf_dataset_values(const gf_dataset* ds, size_t i, double* out);
/* Row label for point j of series i (e.g. a year); empty string if absent. */
const char* gf_dataset_label(const gf_dataset* ds, size_t i, size_t j);

/* ---- evaluation harnesses ------------------------------------------- */

typedef struct gf_subcase {
  size_t start;     /* 1-based first training index */
  size_t train_len;
  size_t horizon;   /* to the end of the series */
} gf_subcase;

/* Enumerates cross-validation subcases for an n_total-point series; out may
 * be NULL to query the count. min_train must be >= 4. */
gf_status gf_tscv_subcases(size_t n_total, size_t min_train, gf_subcase* out,
                           size_t cap, size_t* count);

/* Histogram of optimal orders over {0}, (0,1), {1}, (1,2] and [-2,0). */
gf_status gf_alpha_distribution(const double* alphas, size_t n, double* at_zero,
                                double* in_zero_one, double* at_one, double* in_one_two,
                                double* in_negative);

typedef struct gf_tscv_options {
  double cf_lo, cf_hi;   /* conformable search range, default [0, 2] */
  double wu_lo, wu_hi;   /* Wu search range, default [-2, 2] */
  double step;           /* default 0.01 */
  int per_subcase_mean;  /* 0: pool points (default), 1: average subcase summaries */
  int with_timestamp;    /* 0: deterministic output (default) */
} gf_tscv_options;

void gf_tscv_options_init(gf_tscv_options* opt);

typedef struct gf_rolling_options {
  size_t window;    /* default 5 */
  size_t max_step;  /* default 3 */
  size_t ar_order;  /* requested; clamped to window - 2, default 5 */
  int include_ar;   /* default 1 */
  double cf_lo, cf_hi;
  double wu_lo, wu_hi;
  double step;
  int with_timestamp;
} gf_rolling_options;

void gf_rolling_options_init(gf_rolling_options* opt);

typedef struct gf_report gf_report;

/* Runs CFGM and FGM over every series with per-subcase order search. */
gf_status gf_tscv_run(const gf_dataset* ds, const gf_tscv_options* opt, gf_report** out);

/* Rolling-origin 1..max_step-ahead evaluation of CFGM, FGM and optionally AR. */
gf_status gf_rolling_run(const gf_dataset* ds, const gf_rolling_options* opt,
                         gf_report** out);

void gf_report_destroy(gf_report* r);

/* csv: one file per table inside dir; json: a single document at path. */
gf_status gf_report_write_csv(const gf_report* r, const char* dir);
gf_status gf_report_write_json(const gf_report* r, const char* path);

size_t gf_report_table_count(const gf_report* r);
const char* gf_report_table_name(const gf_report* r, size_t t);
/* Returns the table index or (size_t)-1 when absent. */
size_t gf_report_table_find(const gf_report* r, const char* name);
gf_status gf_report_table_dims(const gf_report* r, size_t t, size_t* rows, size_t* cols);
const char* gf_report_column_name(const gf_report* r, size_t t, size_t col);

typedef enum gf_cell_kind {
  GF_CELL_INT = 0,
  GF_CELL_DOUBLE = 1,
  GF_CELL_STRING = 2
} gf_cell_kind;

gf_status gf_report_cell_kind(const gf_report* r, size_t t, size_t row, size_t col,
                              gf_cell_kind* out);
/* Numeric cells only; integers are widened to double. */
gf_status gf_report_cell_double(const gf_report* r, size_t t, size_t row, size_t col,
                                double* out);
/* Any cell, rendered exactly as the csv writer would. Returns NULL on error. */
const char* gf_report_cell_text(const gf_report* r, size_t t, size_t row, size_t col);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GREYFRAC_H */
