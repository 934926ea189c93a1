#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "anomaly/graded_ring.hpp"
#include "anomaly/univariate.hpp"
#include "oracle.hpp"

#include <random>

using namespace anomaly;

namespace {

RingSpec two_roots(int cap) { return RingSpec{2, true, 0, cap}; }

FormPoly var(const RingSpec &s, int v) { return FormPoly::variable(s, v); }
FormPoly one(const RingSpec &s) { return FormPoly::constant(s, 1); }

FormPoly random_poly(std::mt19937 &rng, const RingSpec &s, bool unit = false)
{
	std::uniform_int_distribution<int> nterms(0, 5), ex(0, 2), num(-5, 5), den(1, 4);
	std::vector<FormPoly::Term> t;
	int n = nterms(rng);
	for (int i = 0; i < n; ++i) {
		Monomial m;
		for (int v = 0; v < s.variable_count(); ++v)
			m.exp[v] = static_cast<std::uint8_t>(ex(rng));
		t.emplace_back(m, Rational(num(rng), den(rng)));
	}
	if (unit)
		t.emplace_back(Monomial{}, Rational(num(rng) == 0 ? 1 : 3, den(rng)));
	auto p = FormPoly::from_terms(s, std::move(t));
	if (unit && p.constant_term().is_zero())
		p += one(s);
	return p;
}

} // namespace

TEST_CASE("rational canonical form")
{
	Rational a(6, -4);
	CHECK(a.str() == "-3/2");
	CHECK(Rational::parse("10/4") == Rational(5, 2));
	CHECK(Rational::pow2(-3) == Rational(1, 8));
	CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
	CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
}

TEST_CASE("poly_add examples")
{
	auto s = two_roots(4);
	auto u = var(s, s.euler());
	CHECK((one(s) + u) + (one(s) - u) == FormPoly::constant(s, 2));
	auto p = one(s) + u * u;
	CHECK(p + FormPoly(s) == p);
	auto x1 = var(s, 0), x2 = var(s, 1);
	CHECK((x1 * x1 + x2 * x2).str() == "x1^2 + x2^2");
	CHECK_THROWS_AS(p + FormPoly::constant(two_roots(6), 1), SpecMismatch);
}

TEST_CASE("poly_mul examples and truncation")
{
	RingSpec s{0, true, 0, 4};
	auto u = var(s, s.euler());
	CHECK(u * u == FormPoly::monomial(s, Monomial{{2}}, 1));
	CHECK((u * u) * (u * u) == FormPoly(s));
	auto t = two_roots(4);
	auto x1 = var(t, 0);
	CHECK((one(t) + x1) * (one(t) - x1) == one(t) - x1 * x1);
}

TEST_CASE("apply_univariate_series examples")
{
	RingSpec s{0, true, 0, 8};
	auto u = var(s, s.euler());
	auto e = apply_univariate_series(uni::exp_series(10), u);
	CHECK(e.str() == "1 + u + 1/2*u^2 + 1/6*u^3 + 1/24*u^4");
	auto c = apply_univariate_series(uni::cosh_series(10), u * Rational(1, 2));
	CHECK(c.str() == "1 + 1/8*u^2 + 1/384*u^4");
	CHECK(apply_univariate_series(uni::exp_series(5), FormPoly(s)) == one(s));
	CHECK_THROWS_AS(apply_univariate_series(uni::exp_series(5), one(s) + u), std::domain_error);
}

TEST_CASE("poly_invert examples")
{
	RingSpec s{0, true, 0, 6};
	auto u = var(s, s.euler());
	CHECK(poly_invert(one(s) - u).str() == "1 + u + u^2 + u^3");
	CHECK(poly_invert(FormPoly::constant(s, 2)) == FormPoly::constant(s, Rational(1, 2)));
	auto ch = apply_univariate_series(uni::cosh_series(8), u * Rational(1, 2));
	auto inv = poly_invert(ch);
	CHECK(inv * inv * ch * ch == one(s));
	CHECK_THROWS_AS(poly_invert(u), std::domain_error);
}

TEST_CASE("divide_exact examples")
{
	RingSpec s{1, true, 0, 12};
	auto u = var(s, s.euler());
	auto q = divide_exact(u * u, u);
	CHECK(q.spec().degree_cap == 10);
	CHECK(q == FormPoly::variable(s.with_cap(10), s.euler()));

	// (cosh t - 1)/sinh t = tanh(t/2), t = u/2.
	auto half = u * Rational(1, 2);
	auto num = apply_univariate_series(uni::cosh_series(12), half) - one(s);
	auto den = apply_univariate_series(uni::sinh_series(12), half);
	auto tanh_quarter = divide_exact(num, den);
	// Frozen from the oracle: long division of the cosh/sinh series.
	oracle::Dense on(13), od(13);
	for (int k = 1; k <= 6; ++k)
		on[2 * k] = Rational(1, 2).pow(2 * k) / oracle::factorial(2 * k);
	for (int k = 0; k <= 5; ++k)
		od[2 * k] = Rational(1, 2).pow(2 * k + 1) / oracle::factorial(2 * k + 1);
	// num/den = (num/u)/(den/u)
	oracle::Dense onu(on.begin() + 1, on.end()), odu(od.begin(), od.end());
	auto expect = oracle::div(onu, odu, 5);
	CHECK(expect[1] == Rational(1, 4));
	CHECK(expect[3] == Rational(-1, 192));
	CHECK(expect[5] == Rational(1, 7680));
	CHECK(tanh_quarter.str() == "1/4*u - 1/192*u^3 + 1/7680*u^5");

	auto x1 = var(s, 0);
	CHECK_THROWS_AS(divide_exact(x1 * x1, u), DivisibilityError);
}

TEST_CASE("top_component examples")
{
	RingSpec s{0, true, 0, 4};
	auto u = var(s, s.euler());
	CHECK(top_component(one(s) + u + u * u, 4) == u * u);
	CHECK(top_component(one(s), 2).is_zero());

	// A-hat on two roots, cap 8: compare with the oracle's univariate product.
	auto t = RingSpec{2, false, 0, 8};
	auto a = oracle::ahat_series(8);
	std::vector<Rational> ac(a.begin(), a.end());
	FormPoly ahat = one(t);
	for (int j = 0; j < 2; ++j) {
		std::vector<Rational> even(9);
		for (int k = 0; k <= 8; ++k)
			even[k] = ac[k];
		ahat *= apply_univariate_series(even, var(t, j));
	}
	CHECK(a[4] == Rational(7, 5760));
	auto top8 = to_pontryagin(top_component(ahat, 8));
	CHECK(top8.str() == "7/5760*p1^2 - 1/1440*p2");
	CHECK(to_pontryagin(top_component(ahat, 4)).str() == "-1/24*p1");
}

TEST_CASE("to_pontryagin examples and errors")
{
	RingSpec s{3, true, 0, 8};
	FormPoly p2(s), p4(s);
	for (int j = 0; j < 3; ++j) {
		auto x = var(s, j);
		p2 += x * x;
		p4 += x * x * x * x;
	}
	CHECK(to_pontryagin(p2).str() == "p1");
	CHECK(to_pontryagin(p4).str() == "p1^2 - 2*p2");
	try {
		to_pontryagin(var(s, 0));
		FAIL("expected NotSymmetricError");
	} catch (const NotSymmetricError &e) {
		CHECK(e.witness.first == "x1");
		CHECK(e.witness.second == "-x1");
	}
	auto x1 = var(s, 0);
	CHECK_THROWS_AS(to_pontryagin(x1 * x1), NotSymmetricError);
	auto u = var(s, s.euler());
	CHECK(to_pontryagin(p2 * u + u * u).str() == "e^2 + p1*e");
}

TEST_CASE("ring axioms on random triples")
{
	std::mt19937 rng(7);
	for (int i = 0; i < 1000; ++i) {
		RingSpec s{2, true, 0, 2 * (1 + i % 4)};
		auto a = random_poly(rng, s), b = random_poly(rng, s), c = random_poly(rng, s);
		REQUIRE((a + b) + c == a + (b + c));
		REQUIRE(a + b == b + a);
		REQUIRE((a * b) * c == a * (b * c));
		REQUIRE(a * b == b * a);
		REQUIRE(a * (b + c) == a * b + a * c);
	}
}

TEST_CASE("truncation coherence")
{
	std::mt19937 rng(11);
	for (int i = 0; i < 500; ++i) {
		RingSpec s{2, true, 0, 8};
		auto f = random_poly(rng, s), g = random_poly(rng, s);
		for (int cap = 0; cap <= 8; cap += 2)
			REQUIRE(truncate(f * g, cap) == truncate(f, cap) * truncate(g, cap));
	}
}

TEST_CASE("inverse and exact division properties")
{
	std::mt19937 rng(13);
	for (int i = 0; i < 500; ++i) {
		RingSpec s{2, true, 0, 8};
		auto f = random_poly(rng, s, true);
		REQUIRE(poly_invert(f) * f == one(s));

		auto g = random_poly(rng, s, true) * var(s, s.euler());
		auto h = random_poly(rng, s);
		if (g.is_zero())
			continue;
		auto q = divide_exact(h * g, g);
		REQUIRE(q == truncate(h, q.spec().degree_cap));
	}
}

TEST_CASE("pontryagin expansion round trip")
{
	for (int d = 1; d <= 4; ++d) {
		RingSpec s{d, true, 0, 2 * d + 2};
		// Every p-monomial of degree <= cap.
		std::vector<std::vector<int>> exps{{}};
		for (int i = 0; i <= d; ++i) {
			std::vector<std::vector<int>> next;
			for (auto &e : exps)
				for (int k = 0; k <= s.degree_cap; ++k) {
					auto n = e;
					n.push_back(k);
					next.push_back(n);
				}
			exps = std::move(next);
		}
		for (auto &e : exps) {
			int deg = 2 * e[d];
			Monomial m;
			for (int i = 0; i < d; ++i) {
				deg += 4 * (i + 1) * e[i];
				m.exp[i] = static_cast<std::uint8_t>(e[i]);
			}
			m.exp[d] = static_cast<std::uint8_t>(e[d]);
			if (deg > s.degree_cap)
				continue;
			PontryaginForm p(d, true, {{m, Rational(3, 7)}});
			auto f = from_pontryagin(p, s);
			REQUIRE(to_pontryagin(f) == p);
		}
	}
}
