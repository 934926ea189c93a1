#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "anomaly/charforms.hpp"
#include "anomaly/pushforward.hpp"

#include <random>

using namespace anomaly;

namespace {

FormPoly random_form(std::mt19937 &rng, const RingSpec &spec)
{
	std::uniform_int_distribution<int> count(0, 4), var(0, spec.variable_count() - 1), weight(0, spec.degree_cap / 2),
	    coef(-5, 5);
	std::vector<FormPoly::Term> terms;
	for (int t = count(rng); t > 0; --t) {
		Monomial m;
		for (int w = weight(rng); w > 0; --w)
			++m.exp[var(rng)];
		terms.emplace_back(m, Rational(coef(rng)));
	}
	return FormPoly::from_terms(spec, std::move(terms));
}

} // namespace

TEST_CASE("pi_star examples")
{
	RingSpec s{0, true, 0, 12};
	FormPoly u = FormPoly::variable(s, s.euler());
	RingSpec t = s.with_cap(10);
	CHECK(pi_star(u * u) == FormPoly::variable(t, t.euler()));
	CHECK(pi_star(FormPoly::constant(s, 1)).is_zero());
	CHECK(pi_star(u * euler_hyperbolic(Hyperbolic::Tanh, 1, s)) == euler_hyperbolic(Hyperbolic::Tanh, 1, t));

	// (u/2)/sinh(u/2) * sinh(u/2) * c pushes to c/2 for a u-free c.
	RingSpec b{2, true, 0, 8};
	FormPoly c = pontryagin_class(b, 1) + FormPoly::constant(b, 3);
	std::vector<int> fibre{b.euler()};
	FormPoly integrand = genus_form(GenusKind::AHat, b, fibre) * euler_hyperbolic(Hyperbolic::Sinh, 1, b) * c;
	CHECK(pi_star(integrand) == truncate(c, 6) * Rational(1, 2));

	CHECK_THROWS(pi_star(FormPoly::constant(RingSpec{1, false, 0, 4}, 1)));
}

TEST_CASE("pi_star is linear and a module map")
{
	std::mt19937 rng(11);
	RingSpec s{2, true, 0, 8};
	for (int i = 0; i < 1000; ++i) {
		FormPoly f = random_form(rng, s), g = random_form(rng, s);
		Rational a(i % 7 - 3, 2), b(i % 5 + 1);
		REQUIRE(pi_star(f * a + g * b) == pi_star(f) * a + pi_star(g) * b);
		FormPoly base = substitute_zero(random_form(rng, s), s.euler());
		REQUIRE(pi_star(base * f) == truncate(base, 6) * pi_star(f));
		const FormPoly pushed = pi_star(f);
		for (const auto &[m, coef] : pushed.terms()) {
			Monomial up = m;
			++up.exp[s.euler()];
			REQUIRE(f.coefficient(up) == coef);
		}
	}
}

TEST_CASE("fibre integration of the 8k+4 identity")
{
	VerificationReport r = verify_fiber_to_31(0);
	CHECK(r.passed());
	const SubCheck *lhat = r.find("pushforward of the L-hat side");
	REQUIRE(lhat);
	CHECK(lhat->pass);
	CHECK(r.lhs == verify_thm31(0).lhs);
	CHECK(verify_fiber_to_31(1).passed());
}

TEST_CASE("fibre reduction of the general formula")
{
	for (auto [d, n] : {std::pair{2, 0}, {3, 0}, {5, 1}, {6, 0}}) {
		VerificationReport r = verify_fiber_reduction(d, n);
		CHECK(r.passed());
		VerificationReport direct = verify_thm33(d, n);
		CHECK(r.lhs == direct.lhs);
		CHECK(r.rhs == direct.rhs);
	}
	CHECK_THROWS_AS(verify_fiber_reduction(1, 0), std::invalid_argument);
}
