#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "errors.hpp"
#include "fracops.hpp"

using greyfrac::Series;

namespace {

const Series kDemo = {55.7, 59.0, 62.7, 61.3, 61.4};

void check_close(const Series& got, const Series& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    INFO("index ", i);
    CHECK(std::fabs(got[i] - want[i]) <= tol);
  }
}

void check_rel(const Series& got, const Series& want, double rel) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double scale = std::max(1.0, std::fabs(want[i]));
    CHECK(std::fabs(got[i] - want[i]) <= rel * scale);
  }
}

Series cumsum(const Series& x) {
  Series out = x;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] += out[i - 1];
  return out;
}

Series random_positive(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(0.5, 100.0);
  Series out(n);
  for (double& v : out) v = dist(rng);
  return out;
}

}  // namespace

TEST_SUITE("fracops") {

TEST_CASE("conformable accumulation reproduces the order 1.1 walkthrough") {
  check_close(greyfrac::cfa(kDemo, 1.1), {55.70, 143.02, 253.66, 381.91, 524.58}, 0.01);
}

TEST_CASE("conformable accumulation reproduces the order 0.59 walkthrough") {
  check_close(greyfrac::cfa(kDemo, 0.59), {55.70, 100.10, 140.07, 174.79, 206.53}, 0.01);
}

TEST_CASE("conformable accumulation of ones at order 0.5") {
  // 1 + 1/sqrt(2) = 1.7071..., then + 1/sqrt(3), + 1/2; frozen independently.
  check_rel(greyfrac::cfa({1, 1, 1, 1}, 0.5),
            {1.0, 1.7071067811865475, 2.284457050376173, 2.784457050376173}, 1e-14);
}

TEST_CASE("integer orders collapse to exact prefix sums") {
  const Series x = {0.1, 2.3, 4.07, 1.93, 8.11, 0.003};
  const Series c1 = cumsum(x);
  const Series c2 = cumsum(c1);

  CHECK(greyfrac::cfa(x, 0.0) == x);
  CHECK(greyfrac::cfa(x, 1.0) == c1);
  CHECK(greyfrac::cfa(x, 2.0) == c2);
  CHECK(greyfrac::foa(x, 1.0) == c1);

  // Integer-valued input keeps every sum and difference representable, so the
  // walk back must be bitwise, with no stray scaling factors applied.
  const Series w = {3, 41, 7, 19, 2, 88};
  const Series w1 = cumsum(w);
  const Series w2 = cumsum(w1);
  CHECK(greyfrac::cfd(w1, 1.0) == w);
  CHECK(greyfrac::cfd(w2, 2.0) == w);
  CHECK(greyfrac::fod(w1, 1.0) == w);
}

TEST_CASE("wu accumulation of ones at order 1.5") {
  check_rel(greyfrac::foa({1, 1, 1}, 1.5), {1.0, 2.5, 4.375}, 1e-14);
}

TEST_CASE("wu convolution coefficients follow the rising recurrence") {
  const std::vector<double> c = greyfrac::foa_coefficients(0.5, 4);
  check_rel(Series(c.begin(), c.end()), {1.0, 0.5, 0.375, 0.3125}, 1e-15);

  const std::vector<double> ones = greyfrac::foa_coefficients(1.0, 5);
  for (double v : ones) CHECK(v == 1.0);

  const std::vector<double> neg = greyfrac::foa_coefficients(-0.5, 3);
  check_rel(Series(neg.begin(), neg.end()), {1.0, -0.5, -0.125}, 1e-15);

  CHECK(greyfrac::foa_coefficients(0.7, 0).empty());
}

TEST_CASE("difference operators invert accumulation") {
  std::mt19937 rng(7101);
  for (double alpha : {0.07, 0.3, 0.59, 1.0, 1.42, 1.7, 2.0, 2.5, 3.3}) {
    const Series x = random_positive(rng, 12);
    check_rel(greyfrac::cfd(greyfrac::cfa(x, alpha), alpha), x, 1e-11);
  }
  for (double alpha : {-1.8, -1.3, -0.5, -0.01, 0.42, 0.99, 1.9, 2.6}) {
    const Series x = random_positive(rng, 12);
    check_rel(greyfrac::fod(greyfrac::foa(x, alpha), alpha), x, 1e-11);
  }
}

TEST_CASE("inverse holds at every index, including the padded head") {
  // Short series stress the zero-padding convention of the backward pass.
  for (std::size_t n : {1, 2, 3}) {
    std::mt19937 rng(static_cast<unsigned>(n));
    const Series x = random_positive(rng, n);
    check_rel(greyfrac::cfd(greyfrac::cfa(x, 2.7), 2.7), x, 1e-12);
  }
}

TEST_CASE("both accumulations are linear in the input") {
  std::mt19937 rng(2218);
  const Series x = random_positive(rng, 10);
  const Series y = random_positive(rng, 10);
  const double a = 1.7, b = -0.4;
  Series mix(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) mix[i] = a * x[i] + b * y[i];

  for (double alpha : {0.59, 1.35, 2.8}) {
    const Series lhs = greyfrac::cfa(mix, alpha);
    const Series fx = greyfrac::cfa(x, alpha);
    const Series fy = greyfrac::cfa(y, alpha);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      const double want = a * fx[i] + b * fy[i];
      CHECK(std::fabs(lhs[i] - want) <= 1e-12 * std::max(1.0, std::fabs(want)));
    }
  }
  {
    const Series lhs = greyfrac::foa(mix, -0.8);
    const Series fx = greyfrac::foa(x, -0.8);
    const Series fy = greyfrac::foa(y, -0.8);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      const double want = a * fx[i] + b * fy[i];
      CHECK(std::fabs(lhs[i] - want) <= 1e-12 * std::max(1.0, std::fabs(want)));
    }
  }
}

TEST_CASE("accumulating a positive series grows strictly") {
  std::mt19937 rng(9);
  const Series x = random_positive(rng, 15);
  for (double alpha : {0.2, 0.59, 1.0, 1.6}) {
    const Series acc = greyfrac::cfa(x, alpha);
    for (std::size_t i = 1; i < acc.size(); ++i) CHECK(acc[i] > acc[i - 1]);
  }
}

TEST_CASE("kind dispatch matches the direct calls") {
  const Series x = {1.0, 4.0, 2.0, 6.0};
  CHECK(greyfrac::accumulate(x, 0.7, greyfrac::Kind::conformable) == greyfrac::cfa(x, 0.7));
  CHECK(greyfrac::accumulate(x, -0.7, greyfrac::Kind::wu) == greyfrac::foa(x, -0.7));
  CHECK(greyfrac::restore(x, 0.7, greyfrac::Kind::conformable) == greyfrac::cfd(x, 0.7));
  CHECK(greyfrac::restore(x, -0.7, greyfrac::Kind::wu) == greyfrac::fod(x, -0.7));
}

TEST_CASE("operator input validation") {
  CHECK_THROWS_AS(greyfrac::cfa({}, 0.5), greyfrac::Error);
  CHECK_THROWS_AS(greyfrac::cfd({}, 0.5), greyfrac::Error);
  CHECK_THROWS_AS(greyfrac::foa({}, 0.5), greyfrac::Error);
  CHECK_THROWS_AS(greyfrac::cfa({1.0}, -0.1), greyfrac::Error);
  CHECK_THROWS_AS(greyfrac::cfa({1.0}, std::nan("")), greyfrac::Error);
  CHECK_THROWS_AS(greyfrac::foa({1.0}, std::nan("")), greyfrac::Error);

  try {
    greyfrac::cfa({1.0}, -0.1);
    FAIL("expected a domain error");
  } catch (const greyfrac::Error& e) {
    CHECK(e.code() == greyfrac::errc::domain);
  }
}

}  // TEST_SUITE
