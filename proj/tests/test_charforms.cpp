#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "anomaly/charforms.hpp"
#include "oracle.hpp"

#include <random>

using namespace anomaly;

namespace {

FormPoly one(const RingSpec &s) { return FormPoly::constant(s, 1); }

BundleExpr random_bundle(std::mt19937 &rng, const RingSpec &s)
{
	std::uniform_int_distribution<int> mult(-1, 2), triv(-3, 3);
	BundleExpr b = BundleExpr::trivial(triv(rng));
	for (int v = 0; v < s.variable_count(); ++v)
		b += BundleExpr::root_pair(v, mult(rng));
	return b;
}

} // namespace

TEST_CASE("genus_form examples")
{
	// Genus series coefficients frozen from the univariate oracle.
	auto a = oracle::ahat_series(8);
	CHECK(a[2] == Rational(-1, 24));
	CHECK(a[4] == Rational(7, 5760));

	RingSpec s{2, false, 0, 8};
	CHECK(to_pontryagin(genus_form(GenusKind::AHat, s)).str() == "1 - 1/24*p1 + 7/5760*p1^2 - 1/1440*p2");
	CHECK(to_pontryagin(genus_form(GenusKind::LHat, s)).str() == "4 + 1/3*p1 - 1/180*p1^2 + 7/180*p2");
	CHECK(genus_form(GenusKind::AHat, RingSpec{0, false, 0, 8}) == FormPoly::constant(RingSpec{0, false, 0, 8}, 1));

	// Per-root L-hat factor x/tanh(x/2) against long division.
	oracle::Dense num(10), den(10);
	for (int k = 0; k <= 4; ++k) {
		num[2 * k] = Rational(1, 2).pow(2 * k) / oracle::factorial(2 * k) * Rational(2);
		den[2 * k] = Rational(1, 2).pow(2 * k) / oracle::factorial(2 * k + 1);
	}
	auto l = oracle::div(num, den, 8);
	RingSpec r1{1, false, 0, 16};
	FormPoly lhat = genus_form(GenusKind::LHat, r1);
	for (int k = 0; k <= 4; ++k) {
		Monomial m;
		m.exp[0] = static_cast<std::uint8_t>(2 * k);
		CHECK(lhat.coefficient(m) == l[2 * k]);
	}
	CHECK(l[2] == Rational(1, 6));
	CHECK(l[4] == Rational(-1, 360));
}

TEST_CASE("ch_bundle examples")
{
	RingSpec s = RingSpec::manifold(3);
	CHECK(ch_bundle(BundleExpr::trivial(5), s) == FormPoly::constant(s, 5));
	FormPoly u = FormPoly::variable(s, s.euler());
	CHECK(ch_bundle(BundleExpr::euler(s), s).str() == "2 + u^2");
	RingSpec wide{0, true, 0, 12};
	CHECK(ch_bundle(BundleExpr::euler(wide), wide).str() == "2 + u^2 + 1/12*u^4 + 1/360*u^6");
	auto t = BundleExpr::tangent(s);
	CHECK(ch_bundle(t.tilde(), s) == ch_bundle(t, s) - FormPoly::constant(s, 6));
	CHECK(t.rank() == 6);
	CHECK(t.tilde().rank() == 0);
}

TEST_CASE("ch_lambda examples")
{
	RingSpec s{0, true, 0, 4};
	QSeries l = ch_lambda(BundleExpr::trivial(2), s, 1, 8, 24);
	QSeries expect = QSeries::one(s, 24) + QSeries::monomial(FormPoly::constant(s, 2), 8, 24) +
	                 QSeries::monomial(FormPoly::constant(s, 1), 16, 24);
	CHECK(l == expect);
	QSeries n = ch_lambda(BundleExpr::euler(s), s, 1, 8, 24);
	CHECK(n.coeff(8) == ch_bundle(BundleExpr::euler(s), s));
	CHECK(n.coeff(16) == one(s));
	CHECK(n.coeff(24).is_zero());
	CHECK_THROWS_AS(ch_lambda(BundleExpr::trivial(1), s, 1, 0, 8), std::invalid_argument);
}

TEST_CASE("lambda and symmetric power identities")
{
	std::mt19937 rng(5);
	RingSpec s{1, true, 0, 4};
	const int cap = 16;
	for (int i = 0; i < 1000; ++i) {
		BundleExpr e = random_bundle(rng, s), f = random_bundle(rng, s);
		int t = (i % 3 == 0) ? 4 : 8;
		int sign = (i % 3 == 2) ? -1 : 1;
		// S_t(E) = 1 / Lambda_{-t}(E)
		REQUIRE(ch_symmetric(e, s, t, cap) * ch_lambda(e, s, -1, t, cap) == QSeries::one(s, cap));
		// Lambda_t(E - F) = Lambda_t(E) / Lambda_t(F)
		REQUIRE(ch_lambda(e - f, s, sign, t, cap) * ch_lambda(f, s, sign, t, cap) == ch_lambda(e, s, sign, t, cap));
		// ch is additive.
		REQUIRE(ch_bundle(e + f, s) == ch_bundle(e, s) + ch_bundle(f, s));
	}
}

TEST_CASE("euler_hyperbolic examples")
{
	RingSpec s{0, true, 0, 24};
	CHECK(euler_hyperbolic(Hyperbolic::Cosh, 1, s).str() == "1 + 1/8*u^2 + 1/384*u^4 + 1/46080*u^6 + 1/10321920*u^8 + 1/3715891200*u^10 + 1/1961990553600*u^12");
	CHECK(euler_hyperbolic(Hyperbolic::Sinh, 1, s).str() == "1/2*u + 1/48*u^3 + 1/3840*u^5 + 1/645120*u^7 + 1/185794560*u^9 + 1/81749606400*u^11");
	CHECK(euler_hyperbolic(Hyperbolic::Cosh, -2, s) * euler_hyperbolic(Hyperbolic::Cosh, 2, s) == one(s));
	CHECK(euler_hyperbolic(Hyperbolic::Tanh, 1, s).str() == "1/2*u - 1/24*u^3 + 1/240*u^5 - 17/40320*u^7 + 31/725760*u^9 - 691/159667200*u^11");
	CHECK_THROWS_AS(euler_hyperbolic(Hyperbolic::Sinh, -1, s), std::domain_error);
}

TEST_CASE("det_half_2cosh and the signature relation")
{
	RingSpec s = RingSpec::manifold(4, false);
	CHECK(det_half_2cosh(s, {}) == one(s));
	std::vector<int> roots{0, 1, 2, 3};
	CHECK(genus_form(GenusKind::AHat, s) * det_half_2cosh(s, roots) == genus_form(GenusKind::LHat, s));

	RingSpec t{0, false, 2, 4};
	std::vector<int> aux{t.aux(0), t.aux(1)};
	// A trivial bundle of rank 2l has l root pairs at zero: 2^l.
	FormPoly at_zero = substitute_zero(substitute_zero(det_half_2cosh(t, aux), aux[0]), aux[1]);
	CHECK(at_zero == FormPoly::constant(t, 4));

	for (int d = 0; d <= 5; ++d) {
		RingSpec r{d, false, 0, 2 * d + 2};
		std::vector<int> vs;
		for (int j = 0; j < d; ++j)
			vs.push_back(j);
		REQUIRE(genus_form(GenusKind::AHat, r) * det_half_2cosh(r, vs) == genus_form(GenusKind::LHat, r));
	}
}

TEST_CASE("genus and ch outputs are symmetric and even")
{
	std::mt19937 rng(9);
	RingSpec s{3, false, 0, 8};
	for (int i = 0; i < 50; ++i) {
		std::uniform_int_distribution<int> mult(-2, 2);
		BundleExpr b = BundleExpr::trivial(mult(rng));
		for (int j = 0; j < 3; ++j)
			b += BundleExpr::root_pair(j, 1);
		b += BundleExpr::root_pair(0, mult(rng)) + BundleExpr::root_pair(1, mult(rng)) + BundleExpr::root_pair(2, mult(rng));
		// Symmetrize the multiplicities so the bundle is invariant under permutations.
		BundleExpr sym = BundleExpr::trivial(b.trivial_rank());
		int total = 0;
		for (auto [v, m] : b.pairs())
			total += m;
		for (int j = 0; j < 3; ++j)
			sym += BundleExpr::root_pair(j, total);
		CHECK_NOTHROW(to_pontryagin(ch_bundle(sym, s) * genus_form(GenusKind::AHat, s)));
	}
	CHECK_NOTHROW(to_pontryagin(genus_form(GenusKind::LHat, s)));
}
