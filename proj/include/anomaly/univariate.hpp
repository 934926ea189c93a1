#pragma once

#include "anomaly/rational.hpp"

#include <vector>

// Dense truncated power series in one variable t over the rationals.
// Index k holds the coefficient of t^k; length is order + 1.
namespace anomaly::uni {

using Series = std::vector<Rational>;

Series exp_series(int order, const Rational &scale = 1);
Series cosh_series(int order, const Rational &scale = 1);
Series sinh_series(int order, const Rational &scale = 1);

Series multiply(const Series &a, const Series &b, int order);
Series inverse(const Series &a, int order);
Series power(const Series &a, int e, int order);
/// a / t^k; the low k coefficients must vanish.
Series shift_down(const Series &a, int k);

} // namespace anomaly::uni
