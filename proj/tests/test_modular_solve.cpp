#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "anomaly/modular_solve.hpp"

#include <random>

using namespace anomaly;

namespace {

Rational at(const QSeries &s, int e) { return s.coeff(e).constant_term(); }

} // namespace

TEST_CASE("basis expansions")
{
	auto up2 = build_basis(2, BasisSide::Upper, 16);
	REQUIRE(up2.size() == 1);
	CHECK(at(up2.elements[0], 0) == -1);
	CHECK(at(up2.elements[0], 4) == -24);

	auto lo2 = build_basis(2, BasisSide::Lower, 16);
	CHECK(lo2.elements[0].str() == "2 + 48*q + 48*q^{2}");

	auto up4 = build_basis(4, BasisSide::Upper, 16);
	REQUIRE(up4.size() == 2);
	CHECK(at(up4.elements[0], 0) == 1);
	CHECK(at(up4.elements[1], 0) == 0);
	CHECK(at(up4.elements[1], 4) == 1);
	auto lo4 = build_basis(4, BasisSide::Lower, 16);
	CHECK(at(lo4.elements[0], 0) == 4);
	CHECK(at(lo4.elements[1], 0) == Rational(1, 16));

	CHECK_THROWS_AS(build_basis(3, BasisSide::Upper, 16), std::invalid_argument);
	CHECK_THROWS_AS(build_basis(-2, BasisSide::Lower, 16), std::invalid_argument);
	CHECK(build_basis(0, BasisSide::Lower, 16).elements[0] == QSeries::one(RingSpec::scalar(), 16));
	CHECK(min_q_cap(10, BasisSide::Upper, 4) == 8 + 16);
}

TEST_CASE("basis elements solve to unit vectors")
{
	for (int w : {2, 4, 6, 8, 10})
		for (auto side : {BasisSide::Upper, BasisSide::Lower}) {
			int cap = min_q_cap(w, side, 4);
			auto basis = build_basis(w, side, cap);
			for (int b = 0; b < basis.size(); ++b) {
				auto sol = solve_in_basis(basis.elements[b], basis);
				CHECK(sol.residual_zero());
				for (int r = 0; r < basis.size(); ++r)
					CHECK(sol.h[r].constant_term() == (r == b ? 1 : 0));
			}
		}
}

TEST_CASE("combination row for the second upper coefficient")
{
	for (int k = 1; k <= 2; ++k) {
		int w = 4 * k + 2;
		auto basis = build_basis(w, BasisSide::Upper, min_q_cap(w, BasisSide::Upper, 2));
		auto sol = solve_in_basis(basis.elements[0], basis);
		REQUIRE(sol.combo.size() >= 2);
		CHECK(sol.combo[1][0] == 24 * (2 * k + 1));
		CHECK(sol.combo[1][1] == -1);
		CHECK(sol.combo[0][0] == -1);
		CHECK(sol.combo_integral());
	}
}

TEST_CASE("solve is linear and detects non-modular input")
{
	std::mt19937 rng(3);
	std::uniform_int_distribution<int> coef(-5, 5);
	RingSpec s{1, false, 0, 4};
	const int w = 6, cap = min_q_cap(w, BasisSide::Upper, 4);
	auto basis = build_basis(w, BasisSide::Upper, cap);
	for (int i = 0; i < 200; ++i) {
		QSeries a(s, cap), b(s, cap);
		for (int r = 0; r < basis.size(); ++r) {
			FormPoly fa = FormPoly::constant(s, coef(rng)) + FormPoly::variable(s, 0, coef(rng));
			FormPoly fb = FormPoly::constant(s, coef(rng));
			a = a + qs_map(basis.elements[r], s, [&](const FormPoly &c) { return fa * c.constant_term(); });
			b = b + qs_map(basis.elements[r], s, [&](const FormPoly &c) { return fb * c.constant_term(); });
		}
		auto sa = solve_in_basis(a, basis), sb = solve_in_basis(b, basis), sab = solve_in_basis(a + b, basis);
		REQUIRE(sab.residual_zero());
		for (int r = 0; r < basis.size(); ++r)
			REQUIRE(sab.h[r] == sa.h[r] + sb.h[r]);
	}
	QSeries bad = basis.elements[0] + QSeries::monomial(FormPoly::constant(RingSpec::scalar(), 1), cap, cap);
	CHECK_FALSE(solve_in_basis(bad, basis).residual_zero());
	CHECK_THROWS_AS(solve_in_basis(basis.elements[0], build_basis(w, BasisSide::Upper, 4)), std::invalid_argument);
	CHECK_THROWS_AS(solve_in_basis(build_basis(w, BasisSide::Upper, 2).elements[0], build_basis(w, BasisSide::Upper, 2)),
	                std::invalid_argument);
}

TEST_CASE("dual check on matching bases")
{
	const int w = 6, cap = min_q_cap(w, BasisSide::Lower, 2);
	auto up = build_basis(w, BasisSide::Upper, cap);
	auto lo = build_basis(w, BasisSide::Lower, cap);
	QSeries p2 = up.elements[0] * Rational(3) - up.elements[1];
	QSeries p1 = (lo.elements[0] * Rational(3) - lo.elements[1]) * Rational(16);
	CHECK(dual_basis_check(p1, p2, w, 16).agree);
	QSeries bumped = p1 + QSeries::monomial(FormPoly::constant(RingSpec::scalar(), 1), kHalf, cap);
	CHECK_FALSE(dual_basis_check(bumped, p2, w, 16).agree);
	CHECK_FALSE(dual_basis_check(p1, p2, w, 8).agree);
}
