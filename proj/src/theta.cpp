#include "anomaly/theta.hpp"

#include "anomaly/charforms.hpp"
#include "anomaly/univariate.hpp"

#include <stdexcept>

namespace anomaly {

namespace {

const RingSpec kScalar = RingSpec::scalar();

// 1 + c q^{e/8}
QSeries binomial(const RingSpec &spec, Rational c, int e, int q_cap)
{
	return QSeries::one(spec, q_cap) + QSeries::monomial(FormPoly::constant(spec, c), e, q_cap);
}

// prod_{j>=1} (1 + sign q^{(start + j - 1) * 8})^power with start in lattice units.
QSeries scalar_product(int sign, int start, int power, int q_cap)
{
	return qs_product(kScalar, q_cap, [&](int j) {
		int e = start + (j - 1) * kLatticePerUnit;
		return ProductFactor{qs_pow(binomial(kScalar, sign, e, q_cap), power), e};
	});
}

QSeries integer_coeffs_checked(const QSeries &s, const Rational &scale, const char *name)
{
	QSeries t = s * scale;
	for (int e : t.support())
		if (!t.coeff(e).constant_term().is_integer())
			throw std::logic_error(std::string("modular generator ") + name + " has a non-integral coefficient at q^" + lattice_str(e));
	return s;
}

void expect_coeff(const QSeries &s, int e, const Rational &value, const char *name)
{
	if (e > s.q_cap())
		return;
	if (!(s.coeff(e).constant_term() == value) || s.coeff(e).size() > 1)
		throw std::logic_error(std::string("modular generator ") + name + ": unexpected coefficient at q^" + lattice_str(e));
}

// 1 + sign*2cosh(w) t + t^2 over (1 + sign t)^2, t = q^{e/8}.
QSeries normalized_pair(const RingSpec &spec, int var, int sign, int e, int q_cap)
{
	FormPoly two_cosh = apply_univariate_series(uni::cosh_series(spec.degree_cap / 2 + 1), FormPoly::variable(spec, var)) * Rational(2 * sign);
	QSeries num = QSeries::one(spec, q_cap) + QSeries::monomial(two_cosh, e, q_cap) +
	              QSeries::monomial(FormPoly::constant(spec, 1), 2 * e, q_cap);
	return num * qs_pow(binomial(spec, sign, e, q_cap), -2);
}

} // namespace

QSeries theta_null(ThetaKind kind, int q_cap)
{
	QSeries euler = scalar_product(-1, kLatticePerUnit, 1, q_cap);
	switch (kind) {
	case ThetaKind::Theta:
		throw std::invalid_argument("theta_null: theta(0, tau) vanishes identically");
	case ThetaKind::Theta1:
		return QSeries::monomial(FormPoly::constant(kScalar, 2), 1, q_cap) * euler *
		       scalar_product(1, kLatticePerUnit, 2, q_cap);
	case ThetaKind::Theta2:
		return euler * scalar_product(-1, kHalf, 2, q_cap);
	case ThetaKind::Theta3:
		return euler * scalar_product(1, kHalf, 2, q_cap);
	}
	throw std::logic_error("theta_null: bad kind");
}

PiTagged theta_prime_null(int q_cap)
{
	QSeries s = QSeries::monomial(FormPoly::constant(kScalar, 2), 1, q_cap) * scalar_product(-1, kLatticePerUnit, 3, q_cap);
	return {1, s};
}

PiTagged jacobi_triple_product(int q_cap)
{
	return {1, theta_null(ThetaKind::Theta1, q_cap) * theta_null(ThetaKind::Theta2, q_cap) *
	               theta_null(ThetaKind::Theta3, q_cap)};
}

ModularGenerators modular_generators(int q_cap)
{
	QSeries t1 = qs_pow(theta_null(ThetaKind::Theta1, q_cap), 4);
	QSeries t2 = qs_pow(theta_null(ThetaKind::Theta2, q_cap), 4);
	QSeries t3 = qs_pow(theta_null(ThetaKind::Theta3, q_cap), 4);
	ModularGenerators g{
	    (t2 + t3) * Rational(1, 8),
	    t2 * t3 * Rational(1, 16),
	    (t1 + t3) * Rational(-1, 8),
	    t1 * t3 * Rational(1, 16),
	};
	expect_coeff(g.delta1, 0, Rational(1, 4), "delta1");
	expect_coeff(g.delta1, kHalf, 0, "delta1");
	expect_coeff(g.delta1, kLatticePerUnit, 6, "delta1");
	expect_coeff(g.eps1, 0, Rational(1, 16), "eps1");
	expect_coeff(g.eps1, kHalf, 0, "eps1");
	expect_coeff(g.eps1, kLatticePerUnit, -1, "eps1");
	expect_coeff(g.delta2, 0, Rational(-1, 8), "delta2");
	expect_coeff(g.delta2, kHalf, -3, "delta2");
	expect_coeff(g.eps2, 0, 0, "eps2");
	expect_coeff(g.eps2, kHalf, 1, "eps2");
	integer_coeffs_checked(g.delta1, 4, "delta1");
	integer_coeffs_checked(g.eps1, 16, "eps1");
	return g;
}

QSeries theta_ratio(ThetaKind kind, const RingSpec &spec, int var, int q_cap)
{
	auto product = [&](int sign, int start) {
		return qs_product(spec, q_cap, [&](int j) {
			int e = start + (j - 1) * kLatticePerUnit;
			return ProductFactor{normalized_pair(spec, var, sign, e, q_cap), e};
		});
	};
	switch (kind) {
	case ThetaKind::Theta: {
		std::vector<int> v{var};
		return qs_invert(product(-1, kLatticePerUnit)) * genus_form(GenusKind::AHat, spec, v);
	}
	case ThetaKind::Theta1:
		return product(1, kLatticePerUnit) * hyperbolic(Hyperbolic::Cosh, 1, spec, var);
	case ThetaKind::Theta2:
		return product(-1, kHalf);
	case ThetaKind::Theta3:
		return product(1, kHalf);
	}
	throw std::logic_error("theta_ratio: bad kind");
}

} // namespace anomaly
