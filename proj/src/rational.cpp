#include "anomaly/rational.hpp"

#include <stdexcept>

namespace anomaly {

Rational::Rational(long n, long d)
{
	if (d == 0)
		throw std::domain_error("rational with zero denominator");
	v_ = mpq_class(n, d);
	v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	mpq_class v;
	if (v.set_str(std::string(text), 10) != 0 || v.get_den() == 0)
		throw std::invalid_argument("not a rational: " + std::string(text));
	v.canonicalize();
	return Rational(std::move(v));
}

Rational Rational::pow2(long e)
{
	mpz_class p = 1;
	mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
	return e >= 0 ? Rational(mpq_class(p)) : Rational(mpq_class(mpz_class(1), p));
}

std::string Rational::str() const
{
	if (is_integer())
		return numerator();
	return numerator() + "/" + denominator();
}

Rational Rational::pow(long e) const
{
	if (e < 0)
		return inverse().pow(-e);
	mpz_class num, den;
	mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
	mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
	return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const
{
	if (is_zero())
		throw std::domain_error("inverse of zero");
	mpq_class r;
	mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
	return Rational(std::move(r));
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::domain_error("division by zero");
	v_ /= o.v_;
	return *this;
}

void Rational::add_product(const Rational &a, const Rational &b)
{
	thread_local mpq_class tmp;
	mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
	mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

} // namespace anomaly
