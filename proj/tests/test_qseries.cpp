#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "anomaly/qseries.hpp"
#include "anomaly/theta.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <random>

using namespace anomaly;

namespace {

const RingSpec kS = RingSpec::scalar();

QSeries from_dense(const oracle::QDense &d, int cap)
{
	std::vector<Rational> c;
	for (auto v : d)
		c.emplace_back(static_cast<long>(v));
	return QSeries::scalar(c, cap);
}

// prod_{n>=1} (1 - q^n) by brute force on the 1/8 lattice.
oracle::QDense euler_dense(int cap)
{
	oracle::QDense r = oracle::binom(cap, 0, 0);
	for (int n = 8; n <= cap; n += 8)
		r = oracle::qmul(r, oracle::binom(cap, n, -1));
	return r;
}

QSeries random_series(std::mt19937 &rng, const RingSpec &s, int cap, bool unit)
{
	std::uniform_int_distribution<int> num(-4, 4), den(1, 3), pick(0, 2);
	QSeries r(s, cap);
	for (int e = 0; e <= cap; e += 4) {
		if (pick(rng) == 0)
			continue;
		FormPoly c = FormPoly::constant(s, Rational(num(rng), den(rng)));
		if (s.variable_count() > 0)
			c += FormPoly::variable(s, 0, Rational(num(rng), den(rng)));
		r.set(e, c);
	}
	if (unit)
		r.set(0, FormPoly::constant(s, Rational(1 + pick(rng), 1)));
	return r;
}

} // namespace

TEST_CASE("qs_mul examples")
{
	QSeries a = QSeries::scalar({1, 0, 0, 0, 0, 0, 0, 0, -1}, 16);
	QSeries b = QSeries::scalar({}, 16);
	b.set(0, FormPoly::constant(kS, 1));
	b.set(8, FormPoly::constant(kS, 1));
	b.set(16, FormPoly::constant(kS, 1));
	CHECK(a * b == QSeries::one(kS, 16));
	CHECK(a * QSeries::one(kS, 16) == a);
	QSeries h = QSeries::monomial(FormPoly::constant(kS, 1), 4, 16);
	CHECK(h * h == QSeries::monomial(FormPoly::constant(kS, 1), 8, 16));
	CHECK_THROWS_AS(a * QSeries::one(kS, 8), SpecMismatch);
}

TEST_CASE("qs_invert examples")
{
	QSeries one_minus_q = QSeries::one(kS, 24) - QSeries::monomial(FormPoly::constant(kS, 1), 8, 24);
	QSeries inv = qs_invert(one_minus_q);
	for (int e = 0; e <= 24; ++e)
		CHECK(inv.coeff(e).constant_term() == Rational(e % 8 == 0 ? 1 : 0));
	CHECK(qs_invert(QSeries::one(kS, 24)) == QSeries::one(kS, 24));

	// Partition numbers 1, 1, 2, 3 from the brute-force Euler product.
	QSeries euler = from_dense(euler_dense(24), 24);
	QSeries p = qs_invert(euler);
	CHECK(p.str() == "1 + q + 2*q^{2} + 3*q^{3}");
	CHECK_THROWS_AS(qs_invert(QSeries::monomial(FormPoly::constant(kS, 1), 4, 24)), std::domain_error);
}

TEST_CASE("qs_product examples")
{
	auto factor = [](int cap) {
		return [cap](int n) {
			return ProductFactor{QSeries::one(kS, cap) - QSeries::monomial(FormPoly::constant(kS, 1), 8 * n, cap), 8 * n};
		};
	};
	QSeries e = qs_product(kS, 24, factor(24));
	CHECK(e == from_dense(euler_dense(24), 24));
	CHECK(e.str() == "1 - q - q^{2}");

	CHECK(qs_product(kS, 24, [](int n) { return ProductFactor{QSeries::one(kS, 24), 100 * n}; }) == QSeries::one(kS, 24));

	// prod_r (1 + q^{r-1/2}) to q: brute force over r <= 2.
	oracle::QDense d = oracle::qmul(oracle::binom(8, 4, 1), oracle::binom(8, 12, 1));
	QSeries half = qs_product(kS, 8, [](int r) {
		int ex = 8 * r - 4;
		return ProductFactor{QSeries::one(kS, 8) + QSeries::monomial(FormPoly::constant(kS, 1), ex, 8), ex};
	});
	CHECK(half == from_dense(d, 8));
	CHECK(half.str() == "1 + q^{1/2}");

	CHECK_THROWS_AS(qs_product(kS, 16,
	                           [](int) {
		                           return ProductFactor{QSeries::one(kS, 16) + QSeries::monomial(FormPoly::constant(kS, 1), 4, 16), 8};
	                           }),
	                std::invalid_argument);
}

TEST_CASE("qs_coeff examples")
{
	QSeries a = QSeries::one(kS, 8) + QSeries::monomial(FormPoly::constant(kS, 3), 4, 8);
	CHECK(qs_coeff(a, 4).constant_term() == 3);
	auto g = modular_generators(8);
	CHECK(qs_coeff(g.delta2, 4).constant_term() == -3);
	CHECK(qs_coeff(g.eps2, 4).constant_term() == 1);
	CHECK_THROWS_AS(qs_coeff(a, 9), std::out_of_range);
}

TEST_CASE("series algebra properties")
{
	std::mt19937 rng(3);
	RingSpec s{1, false, 0, 4};
	for (int i = 0; i < 300; ++i) {
		auto a = random_series(rng, s, 16, false), b = random_series(rng, s, 16, false), c = random_series(rng, s, 16, false);
		REQUIRE((a * b) * c == a * (b * c));
		REQUIRE(a * b == b * a);
		auto u = random_series(rng, s, 16, true);
		REQUIRE(qs_invert(u) * u == QSeries::one(s, 16));
	}
}

TEST_CASE("qs_product is independent of factor order")
{
	const int cap = 32;
	std::vector<int> order{1, 2, 3, 4};
	auto f = [&](int n) {
		QSeries g = QSeries::one(kS, cap) + QSeries::monomial(FormPoly::constant(kS, n), 8 * n, cap);
		return g;
	};
	QSeries ref = qs_product(kS, cap, [&](int n) { return ProductFactor{f(n), 8 * n}; });
	do {
		QSeries r = QSeries::one(kS, cap);
		for (int n : order)
			r = r * f(n);
		REQUIRE(r == ref);
	} while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("lattice rendering")
{
	CHECK(lattice_str(4) == "1/2");
	CHECK(lattice_str(1) == "1/8");
	CHECK(lattice_str(16) == "2");
	QSeries a = QSeries::monomial(FormPoly::variable(RingSpec{1, false, 0, 4}, 0), 2, 8);
	CHECK(a.str() == "(x1)*q^{1/4}");
}
