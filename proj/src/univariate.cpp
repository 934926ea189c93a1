#include "anomaly/univariate.hpp"

#include <stdexcept>

namespace anomaly::uni {

Series exp_series(int order, const Rational &scale)
{
	Series s(order + 1);
	Rational term = 1;
	for (int k = 0; k <= order; ++k) {
		s[k] = term;
		term = term * scale / Rational(k + 1);
	}
	return s;
}

Series cosh_series(int order, const Rational &scale)
{
	Series s = exp_series(order, scale);
	for (int k = 1; k <= order; k += 2)
		s[k] = 0;
	return s;
}

Series sinh_series(int order, const Rational &scale)
{
	Series s = exp_series(order, scale);
	for (int k = 0; k <= order; k += 2)
		s[k] = 0;
	return s;
}

Series multiply(const Series &a, const Series &b, int order)
{
	Series r(order + 1);
	for (int i = 0; i < static_cast<int>(a.size()) && i <= order; ++i) {
		if (a[i].is_zero())
			continue;
		for (int j = 0; j < static_cast<int>(b.size()) && i + j <= order; ++j)
			if (!b[j].is_zero())
				r[i + j].add_product(a[i], b[j]);
	}
	return r;
}

Series inverse(const Series &a, int order)
{
	if (a.empty() || a[0].is_zero())
		throw std::domain_error("univariate inverse: zero constant term");
	Series r(order + 1);
	Rational inv0 = a[0].inverse();
	r[0] = inv0;
	for (int n = 1; n <= order; ++n) {
		Rational acc = 0;
		for (int i = 1; i <= n && i < static_cast<int>(a.size()); ++i)
			acc.add_product(a[i], r[n - i]);
		r[n] = -acc * inv0;
	}
	return r;
}

Series power(const Series &a, int e, int order)
{
	if (e < 0)
		return power(inverse(a, order), -e, order);
	Series r(order + 1);
	r[0] = 1;
	for (int i = 0; i < e; ++i)
		r = multiply(r, a, order);
	return r;
}

Series shift_down(const Series &a, int k)
{
	for (int i = 0; i < k && i < static_cast<int>(a.size()); ++i)
		if (!a[i].is_zero())
			throw std::domain_error("univariate shift: series not divisible");
	if (static_cast<int>(a.size()) <= k)
		return Series(1);
	return Series(a.begin() + k, a.end());
}

} // namespace anomaly::uni
