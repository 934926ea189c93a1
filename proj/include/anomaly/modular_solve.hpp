#pragma once

#include "anomaly/qseries.hpp"

#include <vector>

namespace anomaly {

/// Upper: generators delta2, eps2 (expansions in q^{1/2}).
/// Lower: generators delta1, eps1 (expansions in q).
enum class BasisSide { Upper, Lower };

/// Element b = (8 delta)^{w/2 - 2b} eps^b for b = 0..floor(w/4).
struct ModularBasis {
	int weight = 0;
	BasisSide side = BasisSide::Upper;
	int q_cap = 0;
	std::vector<QSeries> elements;

	int size() const { return static_cast<int>(elements.size()); }
	/// Lattice exponent at which element b is pinned down: q^{b/2} or q^b.
	int pivot(int b) const;
};

/// Throws std::invalid_argument for odd or negative weight.
ModularBasis build_basis(int weight, BasisSide side, int q_cap);

struct HSolution {
	std::vector<FormPoly> h;
	/// combo[r][j]: h_r = sum_j combo[r][j] * P(pivot j).
	std::vector<std::vector<Rational>> combo;
	/// P - sum_r h_r * element_r over every exponent up to the q cap.
	QSeries residual;

	bool residual_zero() const { return residual.is_zero(); }
	bool combo_integral() const;
};

/// Expands P in the basis by solving at the pivot exponents and checks the
/// fit at all other exponents through the residual. Throws std::invalid_argument
/// when the q cap does not reach every pivot.
HSolution solve_in_basis(const QSeries &p, const ModularBasis &basis);

struct DualCheck {
	HSolution upper;
	HSolution lower;
	bool agree = false;
};

/// Solves p2 in the Upper basis and p1 / scale in the Lower basis of the same
/// weight; agreement means equal h and zero residuals on both sides.
DualCheck dual_basis_check(const QSeries &p1, const QSeries &p2, int weight, const Rational &scale);

/// Smallest q cap (lattice units) covering every pivot plus `extra` half-integer orders.
int min_q_cap(int weight, BasisSide side, int extra);

} // namespace anomaly
