#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library beyond the Rational scalar type.

#include "anomaly/rational.hpp"

#include <map>
#include <vector>

namespace oracle {

using anomaly::Rational;
using Dense = std::vector<Rational>;

inline Rational factorial(int n)
{
	Rational r = 1;
	for (int i = 2; i <= n; ++i)
		r *= Rational(i);
	return r;
}

/// Coefficients of exp(s*t) up to t^n.
inline Dense exp_coeffs(int n, Rational s)
{
	Dense r(n + 1);
	for (int k = 0; k <= n; ++k)
		r[k] = s.pow(k) / factorial(k);
	return r;
}

inline Dense mul(const Dense &a, const Dense &b, int n)
{
	Dense r(n + 1);
	for (int i = 0; i <= n; ++i)
		for (int j = 0; i + j <= n; ++j)
			if (i < (int)a.size() && j < (int)b.size())
				r[i + j] += a[i] * b[j];
	return r;
}

/// Long division num/den of power series, den[0] != 0.
inline Dense div(Dense num, const Dense &den, int n)
{
	num.resize(n + 1);
	Dense q(n + 1);
	for (int k = 0; k <= n; ++k) {
		q[k] = num[k] / den[0];
		for (int j = 0; j + k <= n && j < (int)den.size(); ++j)
			num[j + k] -= q[k] * den[j];
	}
	return q;
}

/// Coefficients of (t/2)/sinh(t/2).
inline Dense ahat_series(int n)
{
	Dense sh(n + 2);
	// sinh(t/2)/(t/2) = sum (t/2)^{2k}/(2k+1)!
	for (int k = 0; 2 * k <= n + 1; ++k)
		sh[2 * k] = Rational(1, 2).pow(2 * k) / factorial(2 * k + 1);
	return div(Dense{1}, sh, n);
}

/// Integer q-series on a lattice of step 1/8, stored by index.
using QDense = std::vector<long long>;

inline QDense qmul(const QDense &a, const QDense &b)
{
	QDense r(a.size(), 0);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; i + j < a.size(); ++j)
			r[i + j] += a[i] * b[j];
	return r;
}

/// (1 + c*q^{e/8}) truncated at cap.
inline QDense binom(int cap, int e, long long c)
{
	QDense r(cap + 1, 0);
	r[0] = 1;
	if (e <= cap)
		r[e] += c;
	return r;
}

} // namespace oracle
