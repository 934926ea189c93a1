#pragma once

#include "anomaly/charforms.hpp"
#include "anomaly/qseries.hpp"

#include <vector>

namespace anomaly {

enum class ThetaVariant { HZ1, HZ2, TB1, TB2, Prime1, Prime2 };

/// Inputs of a Theta-series. For TB1/TB2 the auxiliary bundle is the tangent
/// bundle itself (pass T_C B + N_C as `tangent`); `aux` is ignored. For the
/// Prime variants `xi` is the line bundle N and `multiplicity` its coefficient.
struct ThetaConfig {
	ThetaVariant variant = ThetaVariant::HZ1;
	BundleExpr tangent;
	BundleExpr aux;
	BundleExpr xi;
	int multiplicity = 0;
	int q_cap = 0;
};

/// Throws std::invalid_argument for an inconsistent configuration.
void validate(const ThetaConfig &cfg);

/// One infinite tensor factor prod_{n>=1} Lambda_{sign q^{start+8(n-1)}}(bundle),
/// or S_{q^{...}}(bundle) when `symmetric` is set (then sign is +1).
struct ThetaSlot {
	bool symmetric = false;
	int sign = 1;
	int start = 0;
	BundleExpr bundle;
};

std::vector<ThetaSlot> theta_slots(const ThetaConfig &cfg);

/// ch of the Theta-series. Every tilde bundle is a sum of normalized root
/// pairs, so the series factors over ring variables; each distinct per-variable
/// factor is expanded once in a one-variable ring and moved into place.
QSeries build_theta(const ThetaConfig &cfg, const RingSpec &spec);
/// Same series assembled directly from ch_lambda/ch_symmetric of whole bundles.
QSeries build_theta_direct(const ThetaConfig &cfg, const RingSpec &spec);

/// Coefficients at q^0, q^{1/2}, ..., q^{j_max/2}.
std::vector<FormPoly> fourier_coefficients(const QSeries &series, int j_max);
/// True when every exponent with a nonzero coefficient lies in (1/2)Z.
bool on_half_lattice(const QSeries &series);

/// Copies a form written in variable 0 of a one-variable ring into `var` of `target`.
FormPoly embed_variable(const FormPoly &f, const RingSpec &target, int var);

// Series whose top components feed the modular solve. `spec` has d roots and the
// Euler variable u of N; the rank-2 bundle enters the tangent directions for the
// TB assemblies. Assemblies that divide by sinh(u/2) return forms carrying a cap
// reduced by 2.

/// A(TB) (ch Theta2(TB+N, C^2) - cosh(u/2) ch Theta2(TB+N, N)) / (2 sinh(u/2)).
QSeries q2_bundle(const RingSpec &spec, int q_cap);
/// L(TB) cosh(u/2)/sinh(u/2) (ch Theta1(TB+N, C^2) - ch Theta1(TB+N, N) / cosh^2(u/2)).
QSeries q1_bundle(const RingSpec &spec, int q_cap);
/// A(TB) sinh^m(u/2) ch Theta2'(TB, m, N).
QSeries q2_prime_bundle(const RingSpec &spec, int m, int q_cap);
/// L(TB) tanh^m(u/2) ch Theta1'(TB, m, N).
QSeries q1_prime_bundle(const RingSpec &spec, int m, int q_cap);

// The same four series written through theta_ratio.
QSeries q2_theta(const RingSpec &spec, int q_cap);
QSeries q1_theta(const RingSpec &spec, int q_cap);
QSeries q2_prime_theta(const RingSpec &spec, int m, int q_cap);
QSeries q1_prime_theta(const RingSpec &spec, int m, int q_cap);

/// Top component (degree `deg`) of every coefficient.
QSeries top_components(const QSeries &series, int deg);

} // namespace anomaly
