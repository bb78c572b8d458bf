#pragma once

#include <cstddef>
#include <vector>

namespace greyfrac {

using Series = std::vector<double>;

enum class Kind { conformable, wu };

// Conformable fractional accumulation of order alpha >= 0.
// alpha = 0 is the identity; alpha = 1 the plain cumulative sum; for
// c = ceil(alpha) the result equals c prefix sums of f(k)/k^(c-alpha).
Series cfa(const Series& x, double alpha);

// Conformable fractional difference, the left inverse of cfa:
// k^(c-alpha) times the c-th backward difference, indices <= 0 read as zero.
Series cfd(const Series& x, double alpha);

// Wu's fractional-order accumulation; any real alpha.
Series foa(const Series& x, double alpha);

// Wu's fractional-order difference, the left inverse of foa.
Series fod(const Series& x, double alpha);

// Convolution coefficients behind foa: c0 = 1, cm = c(m-1) * (m-1+alpha) / m.
// fod uses the same recurrence with alpha negated.
std::vector<double> foa_coefficients(double alpha, std::size_t count);

Series accumulate(const Series& x, double alpha, Kind kind);
Series restore(const Series& x, double alpha, Kind kind);

}  // namespace greyfrac
