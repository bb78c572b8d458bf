#include <doctest.h>

#include <greyfrac/greyfrac.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

const double kDemo[] = {55.7, 59.0, 62.7, 61.3, 61.4};
const size_t kDemoLen = 5;

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and double formatting") {
  CHECK(std::strcmp(gf_version(), "0.1.0") == 0);

  char buf[32];
  REQUIRE(gf_format_double(0.59, buf, sizeof buf) == 4);
  CHECK(std::strcmp(buf, "0.59") == 0);
  CHECK(gf_format_double(0.59, buf, 4) == 0);  // no room for the terminator
}

TEST_CASE("operators run through the c surface") {
  double out[kDemoLen];
  REQUIRE(gf_cfa(kDemo, kDemoLen, 1.1, out) == GF_OK);
  CHECK(std::fabs(out[4] - 524.58) <= 0.01);

  REQUIRE(gf_cfa(kDemo, kDemoLen, 0.59, out) == GF_OK);
  CHECK(std::fabs(out[1] - 100.10) <= 0.01);

  double back[kDemoLen];
  REQUIRE(gf_cfd(out, kDemoLen, 0.59, back) == GF_OK);
  for (size_t i = 0; i < kDemoLen; ++i) {
    CHECK(std::fabs(back[i] - kDemo[i]) <= 1e-9 * kDemo[i]);
  }

  double coeffs[4];
  REQUIRE(gf_foa_coefficients(0.5, 4, coeffs) == GF_OK);
  CHECK(coeffs[3] == 0.3125);

  double wu[3] = {1, 1, 1};
  double wu_out[3];
  REQUIRE(gf_foa(wu, 3, 1.5, wu_out) == GF_OK);
  CHECK(wu_out[2] == 4.375);
  REQUIRE(gf_fod(wu_out, 3, 1.5, wu) == GF_OK);
  CHECK(std::fabs(wu[2] - 1.0) <= 1e-12);
}

TEST_CASE("errors set a status and a message") {
  double out[1];
  const double x[] = {1.0};
  CHECK(gf_cfa(x, 1, -0.5, out) == GF_ERR_DOMAIN);
  CHECK(std::strlen(gf_last_error()) > 0);

  CHECK(gf_cfa(nullptr, 1, 0.5, out) == GF_ERR_INVALID_ARGUMENT);

  // Success clears the message again.
  CHECK(gf_cfa(x, 1, 0.5, out) == GF_OK);
  CHECK(std::strlen(gf_last_error()) == 0);

  gf_fit* f = nullptr;
  const double three[] = {1.0, 2.0, 3.0};
  CHECK(gf_fit_create(three, 3, 1.0, GF_KIND_CONFORMABLE, &f) ==
        GF_ERR_INSUFFICIENT_DATA);
  CHECK(f == nullptr);

  gf_dataset* ds = nullptr;
  CHECK(gf_dataset_read_csv("/nonexistent/greyfrac.csv", &ds) == GF_ERR_IO);
  CHECK(gf_dataset_bundled("unknown", &ds) == GF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("fit handle lifecycle") {
  gf_fit* f = nullptr;
  REQUIRE(gf_fit_create(kDemo, kDemoLen, 0.59, GF_KIND_CONFORMABLE, &f) == GF_OK);
  REQUIRE(f != nullptr);

  CHECK(gf_fit_alpha(f) == 0.59);
  CHECK(gf_fit_train_len(f) == kDemoLen);
  CHECK(std::fabs(gf_fit_a(f) - 0.1152) <= 5e-4);
  CHECK(std::fabs(gf_fit_b(f) - 53.4382) <= 5e-4);

  double mape = 0.0;
  REQUIRE(gf_fit_mape(f, &mape) == GF_OK);
  CHECK(mape > 0.0);
  CHECK(mape < 1.0);

  double fitted[kDemoLen];
  REQUIRE(gf_fit_fitted(f, fitted) == GF_OK);
  CHECK(fitted[0] == kDemo[0]);

  double acc[kDemoLen];
  REQUIRE(gf_fit_accumulated(f, acc) == GF_OK);
  CHECK(std::fabs(acc[4] - 206.53) <= 0.01);

  double resp[kDemoLen];
  REQUIRE(gf_fit_fitted_accumulated(f, resp) == GF_OK);
  CHECK(std::fabs(resp[4] - 206.39) <= 0.02);

  double forecast[5];
  REQUIRE(gf_fit_predict(f, 5, forecast) == GF_OK);
  CHECK(std::fabs(forecast[4] - 45.41) <= 0.02);
  REQUIRE(gf_fit_predict(f, 0, nullptr) == GF_OK);

  gf_fit_destroy(f);
  gf_fit_destroy(nullptr);
}

TEST_CASE("search handle lifecycle") {
  gf_search_result* r = nullptr;
  REQUIRE(gf_search(kDemo, kDemoLen, 0.0, 2.0, 0.01, GF_KIND_CONFORMABLE, &r) == GF_OK);
  CHECK(gf_search_alpha_star(r) == 0.59);
  CHECK(gf_search_mape_min(r) > 0.0);
  REQUIRE(gf_search_trace_len(r) == 201);

  std::vector<double> alphas(201), mapes(201);
  std::vector<int> ok(201);
  REQUIRE(gf_search_trace(r, alphas.data(), mapes.data(), ok.data()) == GF_OK);
  CHECK(alphas[59] == 0.59);
  CHECK(ok[59] == 1);
  CHECK(mapes[59] == gf_search_mape_min(r));
  gf_search_result_destroy(r);

  CHECK(gf_search(kDemo, kDemoLen, 2.0, 0.0, 0.01, GF_KIND_CONFORMABLE, &r) ==
        GF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("autoregressive handle lifecycle") {
  const double train[] = {1, 2, 4, 8, 16, 32, 64};
  gf_ar* f = nullptr;
  REQUIRE(gf_ar_create(train, 7, 1, &f) == GF_OK);
  CHECK(gf_ar_order(f) == 1);
  CHECK(std::fabs(gf_ar_intercept(f)) <= 1e-9);
  double coeff = 0.0;
  REQUIRE(gf_ar_coeffs(f, &coeff) == GF_OK);
  CHECK(std::fabs(coeff - 2.0) <= 1e-9);

  const double hist[] = {8.0, 16.0};
  double fc[2];
  REQUIRE(gf_ar_predict(f, hist, 2, 2, fc) == GF_OK);
  CHECK(std::fabs(fc[1] - 64.0) <= 1e-6);
  gf_ar_destroy(f);
}

TEST_CASE("summaries through the c surface") {
  const double predicted[] = {9.0, 13.0};
  const double actual[] = {10.0, 10.0};
  gf_summary s;
  REQUIRE(gf_summarize(predicted, actual, 2, &s) == GF_OK);
  CHECK(s.mae == 2.0);
  CHECK(s.mae_std == 1.0);
  CHECK(s.mse == 5.0);
  CHECK(s.mse_std == 4.0);
  CHECK(s.mape == 20.0);
  CHECK(s.mape_std == 10.0);
  CHECK(s.n == 2);

  const double zero[] = {0.0};
  CHECK(gf_summarize(predicted, zero, 1, &s) == GF_ERR_DOMAIN);
}

TEST_CASE("dataset handles") {
  gf_dataset* ds = nullptr;
  REQUIRE(gf_dataset_bundled("ng", &ds) == GF_OK);
  CHECK(gf_dataset_count(ds) == 11);
  CHECK(std::strcmp(gf_dataset_name(ds, 0), "UAE") == 0);
  CHECK(gf_dataset_len(ds, 0) == 9);
  CHECK(std::strcmp(gf_dataset_label(ds, 0, 8), "2016") == 0);
  double values[9];
  REQUIRE(gf_dataset_values(ds, 5, values) == GF_OK);
  CHECK(values[8] == 181.2);
  CHECK(gf_dataset_values(ds, 11, values) == GF_ERR_INVALID_ARGUMENT);
  gf_dataset_destroy(ds);

  REQUIRE(gf_dataset_create(&ds) == GF_OK);
  const double series[] = {1.0, 2.0, 3.0};
  REQUIRE(gf_dataset_add_series(ds, "demo", series, 3) == GF_OK);
  CHECK(gf_dataset_count(ds) == 1);
  CHECK(gf_dataset_len(ds, 0) == 3);
  CHECK(std::strcmp(gf_dataset_label(ds, 0, 0), "") == 0);
  gf_dataset_destroy(ds);
}

TEST_CASE("subcase enumeration and the order histogram") {
  size_t count = 0;
  REQUIRE(gf_tscv_subcases(9, 4, nullptr, 0, &count) == GF_OK);
  REQUIRE(count == 15);

  std::vector<gf_subcase> subs(count);
  REQUIRE(gf_tscv_subcases(9, 4, subs.data(), subs.size(), &count) == GF_OK);
  CHECK(subs[0].start == 1);
  CHECK(subs[0].train_len == 4);
  CHECK(subs[0].horizon == 5);
  CHECK(subs[14].start == 5);
  CHECK(subs[14].train_len == 4);
  CHECK(subs[14].horizon == 1);

  CHECK(gf_tscv_subcases(9, 4, subs.data(), 3, &count) == GF_ERR_INVALID_ARGUMENT);

  const double alphas[] = {0.0, 0.5, 1.0, 1.5, -0.5};
  double at0, in01, at1, in12, neg;
  REQUIRE(gf_alpha_distribution(alphas, 5, &at0, &in01, &at1, &in12, &neg) == GF_OK);
  CHECK(at0 == 0.2);
  CHECK(in01 == 0.2);
  CHECK(at1 == 0.2);
  CHECK(in12 == 0.2);
  CHECK(neg == 0.2);
}

TEST_CASE("cross validation report over a short series") {
  gf_dataset* ds = nullptr;
  REQUIRE(gf_dataset_create(&ds) == GF_OK);
  const double series[] = {50.2, 48.8, 51.3, 52.3, 54.3, 54.6};
  REQUIRE(gf_dataset_add_series(ds, "demo", series, 6) == GF_OK);

  gf_tscv_options opt;
  gf_tscv_options_init(&opt);
  CHECK(opt.step == 0.01);
  CHECK(opt.cf_lo == 0.0);
  CHECK(opt.cf_hi == 2.0);
  CHECK(opt.wu_lo == -2.0);
  CHECK(opt.wu_hi == 2.0);

  gf_report* report = nullptr;
  REQUIRE(gf_tscv_run(ds, &opt, &report) == GF_OK);
  gf_dataset_destroy(ds);

  REQUIRE(gf_report_table_count(report) == 4);
  CHECK(gf_report_table_find(report, "subcases") == 0);
  CHECK(gf_report_table_find(report, "no_such_table") == static_cast<size_t>(-1));

  const size_t fit_t = gf_report_table_find(report, "fitting_summary");
  const size_t pred_t = gf_report_table_find(report, "prediction_summary");
  const size_t hist_t = gf_report_table_find(report, "alpha_distribution");
  REQUIRE(fit_t != static_cast<size_t>(-1));
  REQUIRE(pred_t != static_cast<size_t>(-1));
  REQUIRE(hist_t != static_cast<size_t>(-1));

  size_t rows = 0, cols = 0;
  REQUIRE(gf_report_table_dims(report, 0, &rows, &cols) == GF_OK);
  CHECK(rows == 3);  // three subcases of a six point series
  REQUIRE(gf_report_table_dims(report, pred_t, &rows, &cols) == GF_OK);
  CHECK(rows == 2);  // one summary row per model
  CHECK(cols == 8);
  CHECK(std::strcmp(gf_report_column_name(report, pred_t, 0), "model") == 0);
  CHECK(std::strcmp(gf_report_column_name(report, pred_t, 5), "mape") == 0);

  gf_cell_kind kind;
  REQUIRE(gf_report_cell_kind(report, pred_t, 0, 0, &kind) == GF_OK);
  CHECK(kind == GF_CELL_STRING);
  CHECK(std::strcmp(gf_report_cell_text(report, pred_t, 0, 0), "CFGM") == 0);
  CHECK(std::strcmp(gf_report_cell_text(report, pred_t, 1, 0), "FGM") == 0);

  double mape = -1.0;
  REQUIRE(gf_report_cell_double(report, pred_t, 0, 5, &mape) == GF_OK);
  CHECK(mape >= 0.0);
  double n = 0.0;
  REQUIRE(gf_report_cell_double(report, pred_t, 0, 7, &n) == GF_OK);
  CHECK(n == 4.0);  // pooled horizon points: 2 + 1 + 1

  CHECK(gf_report_cell_double(report, pred_t, 0, 0, &mape) == GF_ERR_INVALID_ARGUMENT);
  CHECK(gf_report_cell_text(report, pred_t, 9, 0) == nullptr);

  const auto dir = std::filesystem::temp_directory_path() / "greyfrac_capi_report";
  std::filesystem::remove_all(dir);
  REQUIRE(gf_report_write_csv(report, dir.string().c_str()) == GF_OK);
  CHECK(std::filesystem::exists(dir / "metadata.csv"));
  CHECK(std::filesystem::exists(dir / "subcases.csv"));
  CHECK(std::filesystem::exists(dir / "alpha_distribution.csv"));

  const auto json_path = dir / "report.json";
  REQUIRE(gf_report_write_json(report, json_path.string().c_str()) == GF_OK);
  CHECK(std::filesystem::file_size(json_path) > 100);
  std::filesystem::remove_all(dir);

  gf_report_destroy(report);
}

TEST_CASE("rolling report over the bundled panel head") {
  gf_dataset* ds = nullptr;
  REQUIRE(gf_dataset_bundled("ng", &ds) == GF_OK);
  // One series keeps this quick; the full panel is exercised elsewhere.
  gf_dataset* one = nullptr;
  REQUIRE(gf_dataset_create(&one) == GF_OK);
  double values[9];
  REQUIRE(gf_dataset_values(ds, 0, values) == GF_OK);
  REQUIRE(gf_dataset_add_series(one, gf_dataset_name(ds, 0), values, 9) == GF_OK);
  gf_dataset_destroy(ds);

  gf_rolling_options opt;
  gf_rolling_options_init(&opt);
  CHECK(opt.window == 5);
  CHECK(opt.max_step == 3);
  opt.max_step = 2;

  gf_report* report = nullptr;
  REQUIRE(gf_rolling_run(one, &opt, &report) == GF_OK);
  gf_dataset_destroy(one);

  const size_t pred_t = gf_report_table_find(report, "prediction_summary");
  const size_t detail_t = gf_report_table_find(report, "origin_detail");
  REQUIRE(pred_t != static_cast<size_t>(-1));
  REQUIRE(detail_t != static_cast<size_t>(-1));

  size_t rows = 0, cols = 0;
  REQUIRE(gf_report_table_dims(report, pred_t, &rows, &cols) == GF_OK);
  CHECK(rows == 6);  // three models, two steps each
  CHECK(cols == 9);

  // Step-1 pool size: origins 5..8 of a nine point series.
  double n = 0.0;
  REQUIRE(gf_report_cell_double(report, pred_t, 0, 8, &n) == GF_OK);
  CHECK(n == 4.0);

  gf_report_destroy(report);
}

}  // TEST_SUITE
