#include "anomaly/charforms.hpp"

#include "anomaly/univariate.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace anomaly {

namespace {

// Enough terms of a univariate series for any variable under the cap.
int order_for(const RingSpec &spec) { return spec.degree_cap / 2 + 1; }

uni::Series genus_series(GenusKind kind, int order)
{
	// sinh(t/2)/(t/2) = sum (t/2)^{2k} / (2k+1)!
	uni::Series sh = uni::sinh_series(order + 1, Rational(1, 2));
	uni::Series sh_over_t = uni::shift_down(sh, 1);
	for (auto &c : sh_over_t)
		c *= 2;
	uni::Series a = uni::inverse(sh_over_t, order);
	if (kind == GenusKind::AHat)
		return a;
	uni::Series l = uni::multiply(a, uni::cosh_series(order, Rational(1, 2)), order);
	for (auto &c : l)
		c *= 2;
	return l;
}

} // namespace

FormPoly genus_form(GenusKind kind, const RingSpec &spec)
{
	std::vector<int> vars;
	for (int j = 0; j < spec.num_roots; ++j)
		vars.push_back(spec.root(j));
	return genus_form(kind, spec, vars);
}

FormPoly genus_form(GenusKind kind, const RingSpec &spec, std::span<const int> vars)
{
	uni::Series s = genus_series(kind, order_for(spec));
	FormPoly r = FormPoly::constant(spec, 1);
	for (int v : vars)
		r *= apply_univariate_series(s, FormPoly::variable(spec, v));
	return r;
}

BundleExpr BundleExpr::tangent(const RingSpec &spec)
{
	BundleExpr b;
	for (int j = 0; j < spec.num_roots; ++j)
		b.pairs_[spec.root(j)] = 1;
	return b;
}

BundleExpr BundleExpr::euler(const RingSpec &spec) { return root_pair(spec.euler()); }

BundleExpr BundleExpr::aux(const RingSpec &spec)
{
	BundleExpr b;
	for (int i = 0; i < spec.extra_roots; ++i)
		b.pairs_[spec.aux(i)] = 1;
	return b;
}

BundleExpr BundleExpr::root_pair(int var, int mult)
{
	BundleExpr b;
	if (mult != 0)
		b.pairs_[var] = mult;
	return b;
}

BundleExpr BundleExpr::trivial(int rank)
{
	BundleExpr b;
	b.trivial_ = rank;
	return b;
}

int BundleExpr::rank() const
{
	int r = trivial_;
	for (auto [v, m] : pairs_)
		r += 2 * m;
	return r;
}

BundleExpr BundleExpr::tilde() const
{
	BundleExpr b = *this;
	b.trivial_ -= rank();
	return b;
}

std::string BundleExpr::str(const RingSpec &spec) const
{
	std::ostringstream os;
	bool first = true;
	auto sep = [&](int m) {
		if (first)
			os << (m < 0 ? "-" : "");
		else
			os << (m < 0 ? " - " : " + ");
		first = false;
	};
	for (auto [v, m] : pairs_) {
		sep(m);
		if (std::abs(m) != 1)
			os << std::abs(m) << "*";
		os << "L(" << spec.variable_name(v) << ")";
	}
	if (trivial_ != 0 || first) {
		sep(trivial_);
		os << "C^" << std::abs(trivial_);
	}
	return os.str();
}

BundleExpr &BundleExpr::operator+=(const BundleExpr &o)
{
	for (auto [v, m] : o.pairs_)
		if ((pairs_[v] += m) == 0)
			pairs_.erase(v);
	trivial_ += o.trivial_;
	return *this;
}

BundleExpr &BundleExpr::operator-=(const BundleExpr &o) { return *this += -1 * BundleExpr(o); }

BundleExpr &BundleExpr::operator*=(int m)
{
	if (m == 0)
		pairs_.clear();
	for (auto &[v, k] : pairs_)
		k *= m;
	trivial_ *= m;
	return *this;
}

FormPoly ch_bundle(const BundleExpr &b, const RingSpec &spec)
{
	FormPoly r = FormPoly::constant(spec, b.trivial_rank());
	uni::Series c = uni::cosh_series(order_for(spec));
	for (auto [v, m] : b.pairs())
		r += apply_univariate_series(c, FormPoly::variable(spec, v)) * Rational(2 * m);
	return r;
}

QSeries ch_lambda(const BundleExpr &b, const RingSpec &spec, int sign, int exponent, int q_cap)
{
	if (exponent <= 0)
		throw std::invalid_argument("ch_lambda: exponent must be positive");
	if (sign != 1 && sign != -1)
		throw std::invalid_argument("ch_lambda: sign must be +1 or -1");
	QSeries triv = QSeries::one(spec, q_cap) + QSeries::monomial(FormPoly::constant(spec, sign), exponent, q_cap);
	QSeries r = qs_pow(triv, b.trivial_rank());
	uni::Series c = uni::cosh_series(order_for(spec));
	for (auto [v, m] : b.pairs()) {
		// (1 + t e^w)(1 + t e^{-w}) = 1 + 2cosh(w) t + t^2
		FormPoly two_cosh = apply_univariate_series(c, FormPoly::variable(spec, v)) * Rational(2 * sign);
		QSeries f = QSeries::one(spec, q_cap) + QSeries::monomial(two_cosh, exponent, q_cap) +
		            QSeries::monomial(FormPoly::constant(spec, 1), 2 * exponent, q_cap);
		r = r * qs_pow(f, m);
	}
	return r;
}

QSeries ch_symmetric(const BundleExpr &b, const RingSpec &spec, int exponent, int q_cap)
{
	return qs_invert(ch_lambda(b, spec, -1, exponent, q_cap));
}

FormPoly hyperbolic(Hyperbolic kind, int power, const RingSpec &spec, int var)
{
	int order = order_for(spec);
	FormPoly x = FormPoly::variable(spec, var);
	auto cosh_p = [&](int p) { return poly_pow(apply_univariate_series(uni::cosh_series(order, Rational(1, 2)), x), p); };
	auto sinh_p = [&](int p) { return poly_pow(apply_univariate_series(uni::sinh_series(order, Rational(1, 2)), x), p); };
	switch (kind) {
	case Hyperbolic::Cosh:
		return cosh_p(power);
	case Hyperbolic::Sinh:
		if (power < 0)
			throw std::domain_error("hyperbolic: negative power of sinh is not a form");
		return sinh_p(power);
	case Hyperbolic::Tanh:
		if (power < 0)
			throw std::domain_error("hyperbolic: negative power of tanh is not a form");
		return sinh_p(power) * cosh_p(-power);
	}
	throw std::logic_error("hyperbolic: bad kind");
}

FormPoly euler_hyperbolic(Hyperbolic kind, int power, const RingSpec &spec)
{
	return hyperbolic(kind, power, spec, spec.euler());
}

FormPoly det_half_2cosh(const RingSpec &spec, std::span<const int> vars)
{
	FormPoly r = FormPoly::constant(spec, 1);
	for (int v : vars)
		r *= hyperbolic(Hyperbolic::Cosh, 1, spec, v) * Rational(2);
	return r;
}

} // namespace anomaly
