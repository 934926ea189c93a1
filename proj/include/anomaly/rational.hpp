#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace anomaly {

/// Exact rational number in lowest terms with positive denominator (GMP-backed).
class Rational {
public:
	Rational() = default;
	Rational(long n) : v_(n) {}
	Rational(int n) : v_(static_cast<long>(n)) {}
	Rational(long n, long d);
	explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

	/// Parses "n" or "n/d".
	static Rational parse(std::string_view text);
	/// 2^e for any integer e.
	static Rational pow2(long e);

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	std::string numerator() const { return v_.get_num().get_str(); }
	std::string denominator() const { return v_.get_den().get_str(); }
	/// "num/den", or "num" when the denominator is 1.
	std::string str() const;

	Rational pow(long e) const;
	Rational inverse() const;

	Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
	Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
	Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
	Rational &operator/=(const Rational &o);

	/// this += a * b without a heap temporary in the common case.
	void add_product(const Rational &a, const Rational &b);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(Rational a) { mpq_neg(a.v_.get_mpq_t(), a.v_.get_mpq_t()); return a; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
	}

	friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

	const mpq_class &raw() const { return v_; }

private:
	mpq_class v_;
};

} // namespace anomaly
