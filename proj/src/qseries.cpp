#include "anomaly/qseries.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace anomaly {

std::string lattice_str(int e)
{
	int g = std::gcd(e, kLatticePerUnit);
	if (e == 0)
		return "0";
	int num = e / g, den = kLatticePerUnit / g;
	return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

void require_same(const QSeries &a, const QSeries &b, const char *op)
{
	if (!(a.spec() == b.spec()))
		throw SpecMismatch(std::string(op) + ": ring spec mismatch");
	if (a.q_cap() != b.q_cap())
		throw SpecMismatch(std::string(op) + ": q cap mismatch");
}

} // namespace

QSeries::QSeries(const RingSpec &spec, int q_cap) : spec_(spec), q_cap_(q_cap)
{
	if (q_cap < 0)
		throw std::invalid_argument("QSeries: negative q cap");
	coeffs_.assign(q_cap + 1, FormPoly(spec));
}

QSeries QSeries::one(const RingSpec &spec, int q_cap) { return constant(FormPoly::constant(spec, 1), q_cap); }

QSeries QSeries::constant(const FormPoly &c, int q_cap) { return monomial(c, 0, q_cap); }

QSeries QSeries::monomial(const FormPoly &c, int e, int q_cap)
{
	QSeries s(c.spec(), q_cap);
	if (e <= q_cap)
		s.coeffs_[e] = c;
	return s;
}

QSeries QSeries::scalar(const std::vector<Rational> &coeffs, int q_cap)
{
	RingSpec sc = RingSpec::scalar();
	QSeries s(sc, q_cap);
	for (int e = 0; e <= q_cap && e < static_cast<int>(coeffs.size()); ++e)
		s.coeffs_[e] = FormPoly::constant(sc, coeffs[e]);
	return s;
}

const FormPoly &QSeries::coeff(int e) const
{
	if (e < 0 || e > q_cap_)
		throw std::out_of_range("QSeries: exponent " + lattice_str(e) + " outside [0, " + lattice_str(q_cap_) + "]");
	return coeffs_[e];
}

void QSeries::set(int e, FormPoly c)
{
	if (e < 0 || e > q_cap_)
		throw std::out_of_range("QSeries: exponent outside cap");
	if (!(c.spec() == spec_))
		throw SpecMismatch("QSeries::set: ring spec mismatch");
	coeffs_[e] = std::move(c);
}

bool QSeries::is_zero() const { return valuation() < 0; }

int QSeries::valuation() const
{
	for (int e = 0; e <= q_cap_; ++e)
		if (!coeffs_[e].is_zero())
			return e;
	return -1;
}

std::vector<int> QSeries::support() const
{
	std::vector<int> r;
	for (int e = 0; e <= q_cap_; ++e)
		if (!coeffs_[e].is_zero())
			r.push_back(e);
	return r;
}

std::string QSeries::str() const
{
	std::ostringstream os;
	bool first = true;
	for (int e = 0; e <= q_cap_; ++e) {
		const FormPoly &c = coeffs_[e];
		if (c.is_zero())
			continue;
		bool scalar = c.size() == 1 && c.terms()[0].first.weight() == 0;
		bool negative = scalar && c.terms()[0].second.sign() < 0;
		std::string cs = scalar ? (negative ? -c.terms()[0].second : c.terms()[0].second).str() : "(" + c.str() + ")";
		std::string q = e == 0 ? "" : e == kLatticePerUnit ? "q" : "q^{" + lattice_str(e) + "}";
		if (first)
			os << (negative ? "-" : "");
		else
			os << (negative ? " - " : " + ");
		first = false;
		if (q.empty())
			os << cs;
		else if (cs == "1")
			os << q;
		else
			os << cs << "*" << q;
	}
	return first ? "0" : os.str();
}

QSeries &QSeries::operator+=(const QSeries &o)
{
	require_same(*this, o, "qs_add");
	for (int e = 0; e <= q_cap_; ++e)
		if (!o.coeffs_[e].is_zero())
			coeffs_[e] += o.coeffs_[e];
	return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
	require_same(*this, o, "qs_sub");
	for (int e = 0; e <= q_cap_; ++e)
		if (!o.coeffs_[e].is_zero())
			coeffs_[e] -= o.coeffs_[e];
	return *this;
}

QSeries &QSeries::operator*=(const Rational &c)
{
	for (auto &p : coeffs_)
		p *= c;
	return *this;
}

QSeries &QSeries::operator*=(const FormPoly &c)
{
	for (auto &p : coeffs_)
		if (!p.is_zero())
			p *= c;
	return *this;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
	require_same(a, b, "qs_mul");
	QSeries r(a.spec_, a.q_cap_);
	auto sa = a.support(), sb = b.support();
	for (int i : sa)
		for (int j : sb) {
			if (i + j > a.q_cap_)
				break;
			r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
		}
	return r;
}

QSeries qs_mul(const QSeries &a, const QSeries &b) { return a * b; }

QSeries qs_invert(const QSeries &a)
{
	const FormPoly &a0 = a.coeff(0);
	if (a0.constant_term().is_zero())
		throw std::domain_error("qs_invert: leading coefficient is not a unit");
	FormPoly inv0 = poly_invert(a0);
	QSeries r(a.spec(), a.q_cap());
	auto sa = a.support();
	for (int n = 0; n <= a.q_cap(); ++n) {
		FormPoly acc = n == 0 ? FormPoly::constant(a.spec(), 1) : FormPoly(a.spec());
		for (int i : sa) {
			if (i == 0)
				continue;
			if (i > n)
				break;
			const FormPoly &rj = r.coeff(n - i);
			if (!rj.is_zero())
				acc -= a.coeff(i) * rj;
		}
		if (!acc.is_zero())
			r.set(n, acc * inv0);
	}
	return r;
}

QSeries qs_pow(const QSeries &a, int e)
{
	if (e < 0)
		return qs_pow(qs_invert(a), -e);
	QSeries r = QSeries::one(a.spec(), a.q_cap());
	QSeries base = a;
	while (e > 0) {
		if (e & 1)
			r = r * base;
		e >>= 1;
		if (e)
			base = base * base;
	}
	return r;
}

const FormPoly &qs_coeff(const QSeries &a, int e) { return a.coeff(e); }

QSeries qs_map(const QSeries &a, const RingSpec &target, const std::function<FormPoly(const FormPoly &)> &f)
{
	QSeries r(target, a.q_cap());
	for (int e = 0; e <= a.q_cap(); ++e)
		if (!a.coeff(e).is_zero())
			r.set(e, f(a.coeff(e)));
	return r;
}

QSeries qs_truncate(const QSeries &a, int q_cap)
{
	QSeries r(a.spec(), q_cap);
	for (int e = 0; e <= q_cap && e <= a.q_cap(); ++e)
		if (!a.coeff(e).is_zero())
			r.set(e, a.coeff(e));
	return r;
}

QSeries qs_product(const RingSpec &spec, int q_cap, const std::function<ProductFactor(int)> &factor)
{
	QSeries r = QSeries::one(spec, q_cap);
	int last = 0;
	for (int n = 1;; ++n) {
		ProductFactor f = factor(n);
		if (f.bound <= last)
			throw std::invalid_argument("qs_product: factor bounds must strictly increase");
		last = f.bound;
		if (f.bound > q_cap)
			break;
		QSeries g = f.factor - QSeries::one(spec, q_cap);
		int v = g.valuation();
		if (v >= 0 && v < f.bound)
			throw std::invalid_argument("qs_product: factor " + std::to_string(n) + " differs from 1 below its bound");
		r = r * f.factor;
	}
	return r;
}

} // namespace anomaly
