#pragma once

#include "anomaly/graded_ring.hpp"

#include <functional>
#include <string>
#include <vector>

// Truncated series in q with exponents on the lattice (1/8)Z>=0 and FormPoly
// coefficients. Exponents are passed around as integers in units of 1/8, so
// q^{1/2} is exponent 4 and q is exponent 8.
namespace anomaly {

inline constexpr int kLatticePerUnit = 8;
inline constexpr int kHalf = 4;

/// "0", "1/2", "3", ... for a lattice exponent.
std::string lattice_str(int e);

class QSeries {
public:
	QSeries() = default;
	/// The zero series.
	QSeries(const RingSpec &spec, int q_cap);

	static QSeries one(const RingSpec &spec, int q_cap);
	static QSeries constant(const FormPoly &c, int q_cap);
	/// c * q^{e/8}.
	static QSeries monomial(const FormPoly &c, int e, int q_cap);
	/// Scalar series from a dense list of rationals by lattice exponent.
	static QSeries scalar(const std::vector<Rational> &coeffs, int q_cap);

	const RingSpec &spec() const { return spec_; }
	int q_cap() const { return q_cap_; }
	/// Coefficient at lattice exponent e; zero form when absent. Throws above the cap.
	const FormPoly &coeff(int e) const;
	void set(int e, FormPoly c);
	bool is_zero() const;
	/// Smallest exponent with a nonzero coefficient, -1 for zero.
	int valuation() const;
	/// Exponents carrying nonzero coefficients.
	std::vector<int> support() const;

	/// "c0 + c1*q^{1/2} + ..." with non-scalar coefficients parenthesized.
	std::string str() const;

	QSeries &operator+=(const QSeries &o);
	QSeries &operator-=(const QSeries &o);
	QSeries &operator*=(const Rational &c);
	QSeries &operator*=(const FormPoly &c);

	friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
	friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
	friend QSeries operator*(const QSeries &a, const QSeries &b);
	friend QSeries operator*(QSeries a, const Rational &c) { return a *= c; }
	friend QSeries operator*(QSeries a, const FormPoly &c) { return a *= c; }
	friend QSeries operator-(QSeries a) { return a *= Rational(-1); }
	friend bool operator==(const QSeries &, const QSeries &) = default;

private:
	RingSpec spec_;
	int q_cap_ = 0;
	std::vector<FormPoly> coeffs_;
};

QSeries qs_mul(const QSeries &a, const QSeries &b);
QSeries qs_invert(const QSeries &a);
QSeries qs_pow(const QSeries &a, int e);
const FormPoly &qs_coeff(const QSeries &a, int e);
/// Applies f to every nonzero coefficient; results live in `target`.
QSeries qs_map(const QSeries &a, const RingSpec &target, const std::function<FormPoly(const FormPoly &)> &f);
/// Drops exponents above the new cap.
QSeries qs_truncate(const QSeries &a, int q_cap);

/// One factor of an infinite product: the factor itself and the lattice
/// exponent below which it agrees with 1.
struct ProductFactor {
	QSeries factor;
	int bound;
};

/// prod_{n>=1} factor(n). Bounds must strictly increase; the product stops
/// once a bound exceeds the cap. Throws std::invalid_argument when a factor
/// breaks its declared bound or bounds fail to increase.
QSeries qs_product(const RingSpec &spec, int q_cap, const std::function<ProductFactor(int)> &factor);

} // namespace anomaly
