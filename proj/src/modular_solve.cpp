#include "anomaly/modular_solve.hpp"

#include "anomaly/theta.hpp"

#include <stdexcept>

namespace anomaly {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(Matrix m)
{
	const int n = static_cast<int>(m.size());
	Matrix inv(n, std::vector<Rational>(n));
	for (int i = 0; i < n; ++i)
		inv[i][i] = 1;
	for (int col = 0; col < n; ++col) {
		int piv = col;
		while (piv < n && m[piv][col].is_zero())
			++piv;
		if (piv == n)
			throw std::logic_error("modular basis: singular pivot matrix");
		std::swap(m[piv], m[col]);
		std::swap(inv[piv], inv[col]);
		Rational s = m[col][col].inverse();
		for (int j = 0; j < n; ++j) {
			m[col][j] *= s;
			inv[col][j] *= s;
		}
		for (int i = 0; i < n; ++i) {
			if (i == col || m[i][col].is_zero())
				continue;
			Rational f = m[i][col];
			for (int j = 0; j < n; ++j) {
				m[i][j] -= f * m[col][j];
				inv[i][j] -= f * inv[col][j];
			}
		}
	}
	return inv;
}

Rational scalar_at(const QSeries &s, int e) { return s.coeff(e).constant_term(); }

} // namespace

int ModularBasis::pivot(int b) const { return side == BasisSide::Upper ? b * kHalf : b * kLatticePerUnit; }

int min_q_cap(int weight, BasisSide side, int extra)
{
	int top = weight / 4;
	int last = side == BasisSide::Upper ? top * kHalf : top * kLatticePerUnit;
	return last + extra * kHalf;
}

ModularBasis build_basis(int weight, BasisSide side, int q_cap)
{
	if (weight < 0 || weight % 2 != 0)
		throw std::invalid_argument("build_basis: weight must be even and nonnegative");
	auto g = modular_generators(q_cap);
	const QSeries &delta = side == BasisSide::Upper ? g.delta2 : g.delta1;
	const QSeries &eps = side == BasisSide::Upper ? g.eps2 : g.eps1;
	QSeries eight_delta = delta * Rational(8);
	ModularBasis basis{weight, side, q_cap, {}};
	for (int b = 0; b <= weight / 4; ++b)
		basis.elements.push_back(qs_pow(eight_delta, weight / 2 - 2 * b) * qs_pow(eps, b));
	return basis;
}

bool HSolution::combo_integral() const
{
	for (const auto &row : combo)
		for (const auto &c : row)
			if (!c.is_integer())
				return false;
	return true;
}

HSolution solve_in_basis(const QSeries &p, const ModularBasis &basis)
{
	if (p.q_cap() != basis.q_cap)
		throw std::invalid_argument("solve_in_basis: q cap of the series and the basis differ");
	const int n = basis.size();
	if (basis.pivot(n - 1) > p.q_cap())
		throw std::invalid_argument("solve_in_basis: q cap " + lattice_str(p.q_cap()) + " does not reach pivot q^" +
		                            lattice_str(basis.pivot(n - 1)));
	Matrix m(n, std::vector<Rational>(n));
	for (int j = 0; j < n; ++j)
		for (int b = 0; b < n; ++b)
			m[j][b] = scalar_at(basis.elements[b], basis.pivot(j));

	HSolution sol;
	sol.combo = invert(m);
	for (int r = 0; r < n; ++r) {
		FormPoly h(p.spec());
		for (int j = 0; j < n; ++j)
			if (!sol.combo[r][j].is_zero())
				h += p.coeff(basis.pivot(j)) * sol.combo[r][j];
		sol.h.push_back(std::move(h));
	}
	sol.residual = p;
	for (int e = 0; e <= p.q_cap(); ++e) {
		FormPoly fit(p.spec());
		for (int r = 0; r < n; ++r) {
			Rational c = scalar_at(basis.elements[r], e);
			if (!c.is_zero())
				fit += sol.h[r] * c;
		}
		if (!fit.is_zero())
			sol.residual.set(e, sol.residual.coeff(e) - fit);
	}
	return sol;
}

DualCheck dual_basis_check(const QSeries &p1, const QSeries &p2, int weight, const Rational &scale)
{
	DualCheck d;
	d.upper = solve_in_basis(p2, build_basis(weight, BasisSide::Upper, p2.q_cap()));
	d.lower = solve_in_basis(p1 * scale.inverse(), build_basis(weight, BasisSide::Lower, p1.q_cap()));
	d.agree = d.upper.residual_zero() && d.lower.residual_zero() && d.upper.h == d.lower.h;
	return d;
}

} // namespace anomaly
