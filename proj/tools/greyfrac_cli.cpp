// greyfrac command line driver. Talks to the library exclusively through the
// public C interface, the same surface any other binding would use.

#include <greyfrac/greyfrac.h>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitParse = 4;
constexpr int kExitModel = 5;

int exit_code_for(gf_status s) {
  switch (s) {
    case GF_OK: return 0;
    case GF_ERR_IO: return kExitIo;
    case GF_ERR_PARSE: return kExitParse;
    default: return kExitModel;
  }
}

[[noreturn]] void die(gf_status s, const std::string& context) {
  std::cerr << "error: " << context << ": " << gf_last_error() << "\n";
  std::exit(exit_code_for(s));
}

[[noreturn]] void die_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

std::string fmt(double v) {
  char buf[64];
  const size_t len = gf_format_double(v, buf, sizeof buf);
  return std::string(buf, len);
}

struct DatasetGuard {
  gf_dataset* ds = nullptr;
  ~DatasetGuard() { gf_dataset_destroy(ds); }
};

struct FitGuard {
  gf_fit* f = nullptr;
  ~FitGuard() { gf_fit_destroy(f); }
};

struct SearchGuard {
  gf_search_result* r = nullptr;
  ~SearchGuard() { gf_search_result_destroy(r); }
};

struct ReportGuard {
  gf_report* r = nullptr;
  ~ReportGuard() { gf_report_destroy(r); }
};

void load_dataset(const std::string& input, DatasetGuard& guard) {
  gf_status s;
  if (input.rfind("bundled:", 0) == 0) {
    s = gf_dataset_bundled(input.substr(8).c_str(), &guard.ds);
  } else {
    s = gf_dataset_read_csv(input.c_str(), &guard.ds);
  }
  if (s != GF_OK) die(s, input);
}

// Resolves --series against the loaded dataset; a single-series file needs
// no name.
std::vector<double> pick_series(const gf_dataset* ds, const std::string& input,
                                const std::string& series_name) {
  const size_t count = gf_dataset_count(ds);
  size_t idx = count;
  if (series_name.empty()) {
    if (count != 1) {
      std::string names;
      for (size_t i = 0; i < count; ++i) {
        if (i) names += ", ";
        names += gf_dataset_name(ds, i);
      }
      die_usage(input + " holds " + std::to_string(count) +
                " series; pick one with --series (" + names + ")");
    }
    idx = 0;
  } else {
    for (size_t i = 0; i < count; ++i) {
      if (series_name == gf_dataset_name(ds, i)) {
        idx = i;
        break;
      }
    }
    if (idx == count) die_usage("no series named '" + series_name + "' in " + input);
  }
  std::vector<double> values(gf_dataset_len(ds, idx));
  const gf_status s = gf_dataset_values(ds, idx, values.data());
  if (s != GF_OK) die(s, input);
  return values;
}

gf_kind parse_kind(const std::string& kind) {
  return kind == "wu" ? GF_KIND_WU : GF_KIND_CONFORMABLE;
}

void default_range(gf_kind kind, double& lo, double& hi) {
  if (kind == GF_KIND_WU) {
    lo = -2.0;
    hi = 2.0;
  } else {
    lo = 0.0;
    hi = 2.0;
  }
}

void check_order_magnitude(const char* flag, double v) {
  if (std::fabs(v) > 4.0) {
    die_usage(std::string(flag) + " = " + fmt(v) +
              " is outside the supported range [-4, 4]");
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    std::exit(kExitIo);
  }
  return out;
}

// Shared model flags for the single-series commands.
struct ModelFlags {
  std::string input;
  std::string series;
  std::string kind = "conformable";
  double alpha = 1.0;
  bool has_alpha = false;
  double lo = 0.0, hi = 0.0, step = 0.01;
  bool has_lo = false, has_hi = false;
};

void add_model_flags(CLI::App* cmd, ModelFlags& mf) {
  cmd->add_option("--input", mf.input, "CSV path or bundled:ng")->required();
  cmd->add_option("--series", mf.series, "series name within the input");
  cmd->add_option("--kind", mf.kind, "accumulation family")
      ->check(CLI::IsMember({"conformable", "wu"}))
      ->capture_default_str();
  auto* alpha = cmd->add_option("--alpha", mf.alpha, "fixed accumulation order");
  auto* lo = cmd->add_option("--lo", mf.lo, "search range lower bound");
  auto* hi = cmd->add_option("--hi", mf.hi, "search range upper bound");
  auto* step = cmd->add_option("--step", mf.step, "search grid step")->capture_default_str();
  alpha->excludes(lo)->excludes(hi)->excludes(step);
  cmd->callback([&mf, alpha, lo, hi] {
    mf.has_alpha = alpha->count() > 0;
    mf.has_lo = lo->count() > 0;
    mf.has_hi = hi->count() > 0;
  });
}

// Either the fixed order or the grid optimum for this series.
double resolve_alpha(const ModelFlags& mf, const std::vector<double>& values) {
  const gf_kind kind = parse_kind(mf.kind);
  if (mf.has_alpha) {
    check_order_magnitude("--alpha", mf.alpha);
    return mf.alpha;
  }
  double lo, hi;
  default_range(kind, lo, hi);
  if (mf.has_lo) lo = mf.lo;
  if (mf.has_hi) hi = mf.hi;
  check_order_magnitude("--lo", lo);
  check_order_magnitude("--hi", hi);
  SearchGuard search;
  const gf_status s =
      gf_search(values.data(), values.size(), lo, hi, mf.step, kind, &search.r);
  if (s != GF_OK) die(s, "order search");
  return gf_search_alpha_star(search.r);
}

int cmd_fit(const ModelFlags& mf, const std::string& output) {
  DatasetGuard ds;
  load_dataset(mf.input, ds);
  const std::vector<double> values = pick_series(ds.ds, mf.input, mf.series);
  const double alpha = resolve_alpha(mf, values);
  FitGuard fit;
  gf_status s = gf_fit_create(values.data(), values.size(), alpha, parse_kind(mf.kind),
                              &fit.f);
  if (s != GF_OK) die(s, "fit");
  double mape = 0.0;
  s = gf_fit_mape(fit.f, &mape);
  if (s != GF_OK) die(s, "fit");

  std::cout << "kind = " << mf.kind << "\n";
  std::cout << "alpha = " << fmt(gf_fit_alpha(fit.f)) << "\n";
  std::cout << "a = " << fmt(gf_fit_a(fit.f)) << "\n";
  std::cout << "b = " << fmt(gf_fit_b(fit.f)) << "\n";
  std::cout << "fitted_mape = " << fmt(mape) << "\n";

  if (!output.empty()) {
    std::vector<double> fitted(gf_fit_train_len(fit.f));
    s = gf_fit_fitted(fit.f, fitted.data());
    if (s != GF_OK) die(s, "fit");
    std::ofstream out = open_output(output);
    out << "k,actual,fitted\n";
    for (size_t i = 0; i < fitted.size(); ++i) {
      out << (i + 1) << "," << fmt(values[i]) << "," << fmt(fitted[i]) << "\n";
    }
  }
  return 0;
}

int cmd_predict(const ModelFlags& mf, size_t horizon, const std::string& output) {
  DatasetGuard ds;
  load_dataset(mf.input, ds);
  const std::vector<double> values = pick_series(ds.ds, mf.input, mf.series);
  const double alpha = resolve_alpha(mf, values);
  FitGuard fit;
  gf_status s = gf_fit_create(values.data(), values.size(), alpha, parse_kind(mf.kind),
                              &fit.f);
  if (s != GF_OK) die(s, "fit");
  std::vector<double> forecast(horizon);
  s = gf_fit_predict(fit.f, horizon, forecast.data());
  if (s != GF_OK) die(s, "predict");

  std::string body = "step,forecast\n";
  for (size_t i = 0; i < horizon; ++i) {
    body += std::to_string(i + 1) + "," + fmt(forecast[i]) + "\n";
  }
  if (output.empty()) {
    std::cout << body;
  } else {
    open_output(output) << body;
  }
  return 0;
}

int cmd_search(const ModelFlags& mf, const std::string& output) {
  DatasetGuard ds;
  load_dataset(mf.input, ds);
  const std::vector<double> values = pick_series(ds.ds, mf.input, mf.series);
  const gf_kind kind = parse_kind(mf.kind);
  double lo, hi;
  default_range(kind, lo, hi);
  if (mf.has_lo) lo = mf.lo;
  if (mf.has_hi) hi = mf.hi;
  check_order_magnitude("--lo", lo);
  check_order_magnitude("--hi", hi);
  SearchGuard search;
  const gf_status s =
      gf_search(values.data(), values.size(), lo, hi, mf.step, kind, &search.r);
  if (s != GF_OK) die(s, "order search");

  std::cout << "alpha* = " << fmt(gf_search_alpha_star(search.r)) << "\n";
  std::cout << "min_fitted_mape = " << fmt(gf_search_mape_min(search.r)) << "\n";

  if (!output.empty()) {
    const size_t len = gf_search_trace_len(search.r);
    std::vector<double> alphas(len), mapes(len);
    std::vector<int> ok(len);
    gf_search_trace(search.r, alphas.data(), mapes.data(), ok.data());
    std::ofstream out = open_output(output);
    out << "alpha,fitted_mape,ok\n";
    for (size_t i = 0; i < len; ++i) {
      out << fmt(alphas[i]) << "," << fmt(mapes[i]) << "," << ok[i] << "\n";
    }
  }
  return 0;
}

int write_report(gf_report* report, const std::string& format, const std::string& output) {
  const gf_status s = format == "json" ? gf_report_write_json(report, output.c_str())
                                       : gf_report_write_csv(report, output.c_str());
  if (s != GF_OK) die(s, output);
  std::cout << "wrote " << output << " (" << gf_report_table_count(report)
            << " tables)\n";
  return 0;
}

int cmd_tscv(const std::string& input, const std::string& aggregation, double step,
             bool timestamp, const std::string& format, const std::string& output) {
  DatasetGuard ds;
  load_dataset(input, ds);
  gf_tscv_options opt;
  gf_tscv_options_init(&opt);
  opt.step = step;
  opt.per_subcase_mean = aggregation == "subcase-mean" ? 1 : 0;
  opt.with_timestamp = timestamp ? 1 : 0;
  ReportGuard report;
  const gf_status s = gf_tscv_run(ds.ds, &opt, &report.r);
  if (s != GF_OK) die(s, "tscv");
  return write_report(report.r, format, output);
}

int cmd_rolling(const std::string& input, size_t window, size_t max_step, size_t ar_order,
                bool no_ar, double step, bool timestamp, const std::string& format,
                const std::string& output) {
  DatasetGuard ds;
  load_dataset(input, ds);
  gf_rolling_options opt;
  gf_rolling_options_init(&opt);
  opt.window = window;
  opt.max_step = max_step;
  opt.ar_order = ar_order;
  opt.include_ar = no_ar ? 0 : 1;
  opt.step = step;
  opt.with_timestamp = timestamp ? 1 : 0;
  ReportGuard report;
  const gf_status s = gf_rolling_run(ds.ds, &opt, &report.r);
  if (s != GF_OK) die(s, "rolling");
  return write_report(report.r, format, output);
}

void print_series_line(const std::vector<double>& v) {
  std::string line = " ";
  for (double x : v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.2f", x);
    line += buf;
  }
  std::cout << line << "\n";
}

// Walks the five-point demo series through every stage of the pipeline and
// prints each intermediate, so the whole chain can be checked by eye.
int cmd_example() {
  const std::vector<double> raw = {55.7, 59.0, 62.7, 61.3, 61.4};
  std::cout << "raw series:\n";
  print_series_line(raw);

  std::vector<double> acc(raw.size());
  gf_status s = gf_cfa(raw.data(), raw.size(), 1.1, acc.data());
  if (s != GF_OK) die(s, "example");
  std::cout << "\nconformable accumulation at order 1.1:\n";
  print_series_line(acc);

  s = gf_cfa(raw.data(), raw.size(), 0.59, acc.data());
  if (s != GF_OK) die(s, "example");
  std::cout << "\nconformable accumulation at order 0.59:\n";
  print_series_line(acc);

  std::cout << "\nleast squares system at order 0.59 (B row | Y):\n";
  for (size_t i = 0; i + 1 < acc.size(); ++i) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "  %.4f 1 | %.4f", -(acc[i] + acc[i + 1]) / 2.0,
                  acc[i + 1] - acc[i]);
    std::cout << buf << "\n";
  }

  FitGuard fit;
  s = gf_fit_create(raw.data(), raw.size(), 0.59, GF_KIND_CONFORMABLE, &fit.f);
  if (s != GF_OK) die(s, "example");
  const double a = gf_fit_a(fit.f);
  const double b = gf_fit_b(fit.f);
  char buf[80];
  std::snprintf(buf, sizeof buf, "\nestimated parameters: a = %.4f, b = %.4f", a, b);
  std::cout << buf << "\n";

  // Accumulated response continued past the sample from the closed form.
  std::vector<double> resp(10);
  for (size_t k = 1; k <= resp.size(); ++k) {
    resp[k - 1] = (raw[0] - b / a) * std::exp(-a * static_cast<double>(k - 1)) + b / a;
  }
  std::cout << "\naccumulated response for k = 1..10:\n";
  print_series_line(resp);

  std::vector<double> restored(raw.size());
  s = gf_fit_fitted(fit.f, restored.data());
  if (s != GF_OK) die(s, "example");
  std::vector<double> forecast(5);
  s = gf_fit_predict(fit.f, forecast.size(), forecast.data());
  if (s != GF_OK) die(s, "example");
  restored.insert(restored.end(), forecast.begin(), forecast.end());
  std::cout << "\nrestored series for k = 1..10:\n";
  print_series_line(restored);

  SearchGuard search;
  s = gf_search(raw.data(), raw.size(), 0.0, 2.0, 0.01, GF_KIND_CONFORMABLE, &search.r);
  if (s != GF_OK) die(s, "example");
  std::cout << "\norder search over [0, 2] step 0.01:\n";
  std::cout << "alpha* = " << fmt(gf_search_alpha_star(search.r)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional-order grey forecasting models"};
  app.set_version_flag("--version", gf_version());
  app.require_subcommand(1);
  app.footer(
      "Exit codes:\n"
      "  0  success\n"
      "  2  usage error (bad flags or flag combination)\n"
      "  3  input or output failure\n"
      "  4  input parse failure\n"
      "  5  model or numeric failure");

  ModelFlags fit_flags;
  std::string fit_output;
  CLI::App* fit = app.add_subcommand("fit", "fit one series and print the parameters");
  add_model_flags(fit, fit_flags);
  fit->add_option("--output", fit_output, "write k,actual,fitted CSV here");

  ModelFlags predict_flags;
  std::string predict_output;
  size_t horizon = 5;
  CLI::App* predict =
      app.add_subcommand("predict", "forecast past the end of one series");
  add_model_flags(predict, predict_flags);
  predict->add_option("--horizon", horizon, "forecast steps")->capture_default_str();
  predict->add_option("--output", predict_output, "write step,forecast CSV here");

  ModelFlags search_flags;
  std::string search_output;
  CLI::App* search =
      app.add_subcommand("search", "scan accumulation orders for the best fit");
  add_model_flags(search, search_flags);
  search->get_option("--alpha")->group("");  // fixed order is meaningless here
  search->add_option("--output", search_output, "write alpha,fitted_mape,ok CSV here");

  std::string tscv_input, tscv_agg = "pooled", tscv_format = "csv", tscv_output;
  double tscv_step = 0.01;
  bool tscv_timestamp = false;
  CLI::App* tscv = app.add_subcommand(
      "tscv", "expanding-window cross validation of the grey models");
  tscv->add_option("--input", tscv_input, "CSV path or bundled:ng")->required();
  tscv->add_option("--aggregation", tscv_agg, "error aggregation")
      ->check(CLI::IsMember({"pooled", "subcase-mean"}))
      ->capture_default_str();
  tscv->add_option("--step", tscv_step, "search grid step")->capture_default_str();
  tscv->add_flag("--timestamp", tscv_timestamp, "stamp the report with the wall clock");
  tscv->add_option("--format", tscv_format, "report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  tscv->add_option("--output", tscv_output, "directory (csv) or file (json)")->required();

  std::string roll_input, roll_format = "csv", roll_output;
  size_t roll_window = 5, roll_max_step = 3, roll_ar_order = 5;
  double roll_step = 0.01;
  bool roll_timestamp = false, roll_no_ar = false;
  CLI::App* rolling = app.add_subcommand(
      "rolling", "rolling-origin multi-step evaluation against an AR baseline");
  rolling->add_option("--input", roll_input, "CSV path or bundled:ng")->required();
  rolling->add_option("--window", roll_window, "training window length")
      ->capture_default_str();
  rolling->add_option("--max-step", roll_max_step, "longest forecast step")
      ->capture_default_str();
  rolling->add_option("--ar-order", roll_ar_order, "requested AR order")
      ->capture_default_str();
  rolling->add_flag("--no-ar", roll_no_ar, "drop the AR baseline");
  rolling->add_option("--step", roll_step, "search grid step")->capture_default_str();
  rolling->add_flag("--timestamp", roll_timestamp,
                    "stamp the report with the wall clock");
  rolling->add_option("--format", roll_format, "report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  rolling->add_option("--output", roll_output, "directory (csv) or file (json)")
      ->required();

  CLI::App* example = app.add_subcommand(
      "example", "walk the five-point demo series through the whole pipeline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (fit->parsed()) return cmd_fit(fit_flags, fit_output);
  if (predict->parsed()) return cmd_predict(predict_flags, horizon, predict_output);
  if (search->parsed()) return cmd_search(search_flags, search_output);
  if (tscv->parsed()) {
    return cmd_tscv(tscv_input, tscv_agg, tscv_step, tscv_timestamp, tscv_format,
                    tscv_output);
  }
  if (rolling->parsed()) {
    return cmd_rolling(roll_input, roll_window, roll_max_step, roll_ar_order, roll_no_ar,
                       roll_step, roll_timestamp, roll_format, roll_output);
  }
  if (example->parsed()) return cmd_example();
  return kExitUsage;
}
