#pragma once

#include "anomaly/graded_ring.hpp"
#include "anomaly/qseries.hpp"

#include <map>
#include <span>
#include <string>

namespace anomaly {

enum class GenusKind { AHat, LHat };

/// AHat: prod (x/2)/sinh(x/2); LHat: prod x/tanh(x/2), over all roots of the spec.
FormPoly genus_form(GenusKind kind, const RingSpec &spec);
/// Same product over an explicit list of variables.
FormPoly genus_form(GenusKind kind, const RingSpec &spec, std::span<const int> vars);

/// Formal virtual bundle: integer multiplicities of root pairs {w, -w} (one per
/// ring variable w) plus a trivial part of complex rank `trivial`.
class BundleExpr {
public:
	BundleExpr() = default;

	/// T_C of the manifold: one pair per root x_j.
	static BundleExpr tangent(const RingSpec &spec);
	/// Complexified rank-2 bundle with Euler variable u.
	static BundleExpr euler(const RingSpec &spec);
	/// The auxiliary roots v_i, one pair each.
	static BundleExpr aux(const RingSpec &spec);
	static BundleExpr root_pair(int var, int mult = 1);
	static BundleExpr trivial(int rank);

	const std::map<int, int> &pairs() const { return pairs_; }
	int trivial_rank() const { return trivial_; }
	/// Virtual complex rank.
	int rank() const;
	/// W - C^{rank W}.
	BundleExpr tilde() const;
	bool has_roots() const { return !pairs_.empty(); }
	std::string str(const RingSpec &spec) const;

	BundleExpr &operator+=(const BundleExpr &o);
	BundleExpr &operator-=(const BundleExpr &o);
	BundleExpr &operator*=(int m);
	friend BundleExpr operator+(BundleExpr a, const BundleExpr &b) { return a += b; }
	friend BundleExpr operator-(BundleExpr a, const BundleExpr &b) { return a -= b; }
	friend BundleExpr operator*(int m, BundleExpr a) { return a *= m; }
	friend BundleExpr operator-(BundleExpr a) { return a *= -1; }
	friend bool operator==(const BundleExpr &, const BundleExpr &) = default;

private:
	std::map<int, int> pairs_;
	int trivial_ = 0;
};

/// Sum of exp(root) over all roots: 2cosh(w) per pair plus the trivial rank.
FormPoly ch_bundle(const BundleExpr &b, const RingSpec &spec);

/// ch(Lambda_t(b)) at t = sign * q^{exponent/8}, as a q-series. Differences are
/// handled by ch(Lambda_t(E - F)) = ch(Lambda_t(E)) / ch(Lambda_t(F)).
QSeries ch_lambda(const BundleExpr &b, const RingSpec &spec, int sign, int exponent, int q_cap);
/// ch(S_t(b)) at t = q^{exponent/8}, = 1 / ch(Lambda_{-t}(b)).
QSeries ch_symmetric(const BundleExpr &b, const RingSpec &spec, int exponent, int q_cap);

enum class Hyperbolic { Cosh, Sinh, Tanh };

/// cosh, sinh or tanh of (var/2), raised to `power`. Negative powers of sinh
/// and tanh are not forms and are rejected.
FormPoly hyperbolic(Hyperbolic kind, int power, const RingSpec &spec, int var);
/// hyperbolic() in the Euler variable u.
FormPoly euler_hyperbolic(Hyperbolic kind, int power, const RingSpec &spec);

/// prod 2cosh(v/2) over the given variables.
FormPoly det_half_2cosh(const RingSpec &spec, std::span<const int> vars);

} // namespace anomaly
