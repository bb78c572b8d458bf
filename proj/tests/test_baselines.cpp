#include <doctest.h>

#include <cmath>

#include "baselines.hpp"
#include "errors.hpp"

using greyfrac::Series;

TEST_SUITE("baselines") {

TEST_CASE("first order fit on an arithmetic progression") {
  const greyfrac::ARFit f = greyfrac::ar_fit({1, 2, 3, 4, 5, 6, 7, 8}, 1);
  REQUIRE(f.coeffs.size() == 1);
  CHECK(std::fabs(f.intercept - 1.0) <= 1e-9);
  CHECK(std::fabs(f.coeffs[0] - 1.0) <= 1e-9);

  const Series fc = greyfrac::ar_predict(f, {1, 2, 3, 4, 5, 6, 7, 8}, 3);
  REQUIRE(fc.size() == 3);
  CHECK(std::fabs(fc[0] - 9.0) <= 1e-8);
  CHECK(std::fabs(fc[1] - 10.0) <= 1e-8);
  CHECK(std::fabs(fc[2] - 11.0) <= 1e-8);
}

TEST_CASE("first order fit on a doubling sequence") {
  const greyfrac::ARFit f = greyfrac::ar_fit({1, 2, 4, 8, 16, 32, 64}, 1);
  CHECK(std::fabs(f.intercept) <= 1e-9);
  CHECK(std::fabs(f.coeffs[0] - 2.0) <= 1e-9);

  // Recursive forecasting feeds each prediction back as the next lag.
  const Series fc = greyfrac::ar_predict(f, {8, 16}, 3);
  CHECK(std::fabs(fc[0] - 32.0) <= 1e-7);
  CHECK(std::fabs(fc[1] - 64.0) <= 1e-7);
  CHECK(std::fabs(fc[2] - 128.0) <= 1e-6);
}

TEST_CASE("constant series forecasts itself at any order") {
  const greyfrac::ARFit f = greyfrac::ar_fit({5, 5, 5, 5, 5, 5}, 2);
  const Series fc = greyfrac::ar_predict(f, {5, 5, 5}, 4);
  for (double v : fc) CHECK(std::fabs(v - 5.0) <= 1e-8);
}

TEST_CASE("zero steps yield an empty forecast") {
  const greyfrac::ARFit f = greyfrac::ar_fit({1, 2, 3, 4, 5}, 1);
  CHECK(greyfrac::ar_predict(f, {4, 5}, 0).empty());
}

TEST_CASE("underdetermined systems resolve deterministically") {
  // p = 3 with five points leaves two equations for four unknowns; the
  // minimum-norm solution must be reproducible run to run.
  const Series train = {2.0, 3.1, 4.7, 6.8, 9.2};
  const greyfrac::ARFit f1 = greyfrac::ar_fit(train, 3);
  const greyfrac::ARFit f2 = greyfrac::ar_fit(train, 3);
  CHECK(f1.intercept == f2.intercept);
  REQUIRE(f1.coeffs.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(f1.coeffs[i] == f2.coeffs[i]);

  // With zero residual degrees of freedom the fit interpolates its rows.
  for (std::size_t k = 3; k < train.size(); ++k) {
    double pred = f1.intercept;
    for (std::size_t j = 0; j < 3; ++j) pred += f1.coeffs[j] * train[k - 1 - j];
    CHECK(std::fabs(pred - train[k]) <= 1e-9);
  }

  const Series fc = greyfrac::ar_predict(f1, train, 2);
  for (double v : fc) CHECK(std::isfinite(v));
}

TEST_CASE("fit input validation") {
  CHECK_THROWS_AS(greyfrac::ar_fit({1, 2, 3}, 0), greyfrac::Error);
  try {
    greyfrac::ar_fit({1, 2, 3}, 3);
    FAIL("expected an insufficient data error");
  } catch (const greyfrac::Error& e) {
    CHECK(e.code() == greyfrac::errc::insufficient_data);
  }
}

TEST_CASE("prediction needs enough history to seed the lags") {
  const greyfrac::ARFit f = greyfrac::ar_fit({1, 2, 3, 4, 5, 6}, 2);
  CHECK_THROWS_AS(greyfrac::ar_predict(f, {5.0}, 1), greyfrac::Error);
}

}  // TEST_SUITE
